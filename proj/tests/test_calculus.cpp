#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "voroq/calculus.hpp"
#include "voroq/errors.hpp"
#include "voroq/quotient.hpp"

using namespace voroq;

namespace {

const SellingParams kBcc(1, 1, 1, 1, 1, 1);
const SellingParams kFcc(0, 1, 1, 1, 1, 0);
const SellingParams kSc(1, 1, 1, 0, 0, 0);

Vec6 random_rho(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Vec6 r{};
  for (double& x : r) x = dist(rng);
  return r;
}

double max_abs(const Vec6& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST_CASE("gradient vanishes at the truncated octahedron point") {
  CHECK(max_abs(gradient_fd(kBcc)) <= 1e-7);
}

TEST_CASE("gradient at the cube point matches -4 + 2 sqrt 2 on d, e, f") {
  const Vec6 g = gradient_fd(kSc);
  const Vec6 expect = refs::sc_gradient();
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(std::abs(g[i] - expect[i]) <= 1e-6);
}

TEST_CASE("gradient vanishes at the rhombic dodecahedron point") {
  CHECK(max_abs(gradient_fd(kFcc)) <= 1e-6);
}

TEST_CASE("FD hessian at the all-ones point matches the exact entries") {
  const Mat6 h = hessian_fd(kBcc);
  const Mat6 exact = refs::bcc_hessian();
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      CHECK(std::abs(h[i][j] - exact[i][j]) <= 1e-5);

  // scaling direction is in the kernel
  const Vec6 hrho = mat_vec(h, kBcc.raw());
  CHECK(max_abs(hrho) <= 1e-4);

  // invariance under the point's symmetry: one diagonal value, two
  // off-diagonal classes
  for (std::size_t i = 1; i < 6; ++i) CHECK(std::abs(h[i][i] - h[0][0]) <= 1e-6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      if (i == j) continue;
      const double cls = (i + j == 5) ? exact[0][5] : exact[0][1];
      CHECK(std::abs(h[i][j] - cls) <= 1e-6);
    }
}

TEST_CASE("FD hessian at the rhombic dodecahedron point") {
  const Mat6 h = hessian_fd(kFcc);
  const Mat6 exact = refs::fcc_hessian();
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      CHECK(std::abs(h[i][j] - exact[i][j]) <= 1e-5);
}

TEST_CASE("jacobi eigensolver") {
  CHECK(symmetric_eigen<6>(identity_mat<6>()).values ==
        std::array<double, 6>{1, 1, 1, 1, 1, 1});

  // exact reference matrices reproduce the closed-form spectra
  const auto bcc_eig = symmetric_eigen<6>(refs::bcc_hessian());
  const auto bcc_expect = refs::bcc_spectrum();
  for (std::size_t k = 0; k < 6; ++k)
    CHECK(std::abs(bcc_eig.values[k] - bcc_expect[k]) <= 1e-12);

  const auto fcc_eig = symmetric_eigen<6>(refs::fcc_hessian());
  const auto fcc_expect = refs::fcc_spectrum();
  for (std::size_t k = 0; k < 6; ++k)
    CHECK(std::abs(fcc_eig.values[k] - fcc_expect[k]) <= 1e-12);

  // eigenvectors: A v = lambda v, orthonormal
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int it = 0; it < 50; ++it) {
    SqMat<4> m{};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) m[i][j] = m[j][i] = dist(rng);
    const auto eig = symmetric_eigen<4>(m);
    for (std::size_t k = 0; k < 4; ++k) {
      const auto mv = mat_vec(m, eig.vectors[k]);
      const auto lv = eig.values[k] * eig.vectors[k];
      CHECK(norm(mv - lv) <= 1e-11);
      for (std::size_t l = 0; l < 4; ++l)
        CHECK(std::abs(dot(eig.vectors[k], eig.vectors[l]) - (k == l ? 1.0 : 0.0)) <=
              1e-12);
    }
    CHECK(eig.values[0] <= eig.values[1]);
    CHECK(eig.values[1] <= eig.values[2]);
    CHECK(eig.values[2] <= eig.values[3]);
  }
}

TEST_CASE("FD spectra match the closed-form eigenvalues") {
  const auto bcc_vals = symmetric_eigen<6>(hessian_fd(kBcc)).values;
  const auto bcc_expect = refs::bcc_spectrum();
  for (std::size_t k = 0; k < 6; ++k)
    CHECK(std::abs(bcc_vals[k] - bcc_expect[k]) <= 1e-5);
  // four-significant-digit values as commonly quoted
  CHECK(std::abs(bcc_vals[1] - 0.052278) <= 1e-5);
  CHECK(std::abs(bcc_vals[3] - 0.194864) <= 1e-5);

  const auto fcc_vals = symmetric_eigen<6>(hessian_fd(kFcc)).values;
  const auto fcc_expect = refs::fcc_spectrum();
  for (std::size_t k = 0; k < 6; ++k)
    CHECK(std::abs(fcc_vals[k] - fcc_expect[k]) <= 1e-5);
  CHECK(std::abs(fcc_vals[0] + 0.262031) <= 1e-5);
  CHECK(std::abs(fcc_vals[5] - 1.301413) <= 1e-5);
}

TEST_CASE("tangent spectrum excludes the scaling zero mode") {
  const auto bcc_tan = tangent_spectrum(kBcc);
  const std::array<double, 5> expect = {
      refs::bcc_spectrum()[1], refs::bcc_spectrum()[2], refs::bcc_spectrum()[3],
      refs::bcc_spectrum()[4], refs::bcc_spectrum()[5]};
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(bcc_tan[k] > 0.0);
    CHECK(std::abs(bcc_tan[k] - expect[k]) <= 1e-5);
  }
}

TEST_CASE("tangent spectrum at the rhombic dodecahedron point is indefinite") {
  // The negative Hessian mode (1,0,0,0,0,1) is not tangent to the fixed-
  // volume surface there (grad det = (4,3,3,3,3,4)); projecting mixes it
  // with the scaling mode and leaves eigenvalue (9/17) * lambda_-.
  const auto tan = tangent_spectrum(kFcc);
  const double lam_minus = refs::fcc_spectrum()[0];
  CHECK(tan[0] < -0.1);
  CHECK(std::abs(tan[0] - 9.0 / 17.0 * lam_minus) <= 1e-5);
  CHECK(std::abs(tan[0] - (-0.138722255433)) <= 1e-5);
  for (std::size_t k = 1; k < 5; ++k) CHECK(tan[k] > 0.0);
}

TEST_CASE("classification of the three reference points") {
  CHECK(classify_point(kBcc).classification == Stationarity::interior_strict_min);
  CHECK(classify_point(kFcc).classification == Stationarity::saddle);
  CHECK(classify_point(kSc).classification == Stationarity::non_stationary);

  const StationaryReport rep = classify_point(kFcc);
  CHECK(rep.active_set == std::vector<int>{0, 5});
  CHECK(rep.one_sided_fd);
  CHECK_FALSE(classify_point(kBcc).one_sided_fd);
}

TEST_CASE("euler identity for degree-zero homogeneity") {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 200; ++it) {
    const SellingParams rho(random_rho(rng, 0.2, 2.0));
    const Vec6 g = gradient_fd(rho);
    double l1 = 0.0;
    for (double x : g) l1 += std::abs(x);
    CHECK(std::abs(dot(rho.raw(), g)) <= 1e-7 * l1 + 1e-10);
  }
}

TEST_CASE("Richardson step-halving sanity") {
  std::mt19937_64 rng(6);
  for (int it = 0; it < 20; ++it) {
    const SellingParams rho(random_rho(rng, 0.3, 2.0));
    const Vec6 g1 = gradient_fd(rho, {6e-6, 1.2e-4});
    const Vec6 g2 = gradient_fd(rho, {3e-6, 1.2e-4});
    const Vec6 g3 = gradient_fd(rho, {1.5e-6, 1.2e-4});
    for (std::size_t i = 0; i < 6; ++i) {
      const double d12 = std::abs(g1[i] - g2[i]);
      const double d23 = std::abs(g2[i] - g3[i]);
      // central differences: halving h divides the O(h^2) error by 4
      CHECK(d12 <= 4.0 * d23 + 1e-9);
    }
  }
}

TEST_CASE("saddle and descent witnesses by direct evaluation") {
  const Vec6 v = refs::fcc_negative_direction();
  const Vec6 probe = kFcc.raw() + 0.05 * v;
  CHECK(F_closed(SellingParams(probe)) < refs::f_fcc());

  CHECK(F_closed(SellingParams(1, 1, 1, 0.05, 0.05, 0.05)) < 6.0);
}

TEST_CASE("degenerate stencils are reported") {
  // a equals the step width exactly: the lower central stencil point lands
  // on det = 0.
  CHECK_THROWS_AS(gradient_fd(SellingParams(6e-6, 1, 1, 0, 0, 0)), DegenerateStencil);

  // Tiny components get one-sided stencils, which stay feasible; the
  // derivatives must come back finite, never silent garbage.
  const Vec6 nearly = {1e-7, 1.0, 1.0, 1e-7, 1.0, 1e-7};
  const Mat6 h = hessian_fd(SellingParams(nearly));
  for (const auto& row : h)
    for (double x : row) CHECK(std::isfinite(x));
}

TEST_CASE("exact reference constants") {
  CHECK(refs::f_bcc() == doctest::Approx(5.3147396999719575).epsilon(1e-15));
  CHECK(refs::f_fcc() == doctest::Approx(5.3453923088420358).epsilon(1e-15));
  CHECK(refs::sc_gradient_value() == doctest::Approx(-1.1715728752538097).epsilon(1e-15));
  CHECK(refs::bcc_hessian_alpha() == doctest::Approx(0.114857600656).epsilon(1e-11));
  CHECK(refs::bcc_hessian_beta() == doctest::Approx(-0.00871291017088).epsilon(1e-11));
  CHECK(refs::bcc_hessian_delta() == doctest::Approx(-0.080005959972).epsilon(1e-11));
  // row sums of the exact all-ones Hessian vanish (kernel = scaling direction)
  CHECK(std::abs(refs::bcc_hessian_alpha() + 4.0 * refs::bcc_hessian_beta() +
                 refs::bcc_hessian_delta()) <= 1e-16);
}
