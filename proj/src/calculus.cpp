#include "voroq/calculus.hpp"

#include <algorithm>
#include <cmath>

#include "voroq/errors.hpp"
#include "voroq/quotient.hpp"

namespace voroq {

namespace {

// F on a raw vector, translating cone violations into stencil errors.
double F_at(const std::vector<double>& x) {
  Vec6 r{};
  std::copy_n(x.begin(), 6, r.begin());
  for (double v : r)
    if (v < 0.0) throw DegenerateStencil("fd: stencil point left the cone");
  try {
    return detail::F_closed_raw(r);
  } catch (const DegenerateCell&) {
    throw DegenerateStencil("fd: stencil point has det A <= 0");
  }
}

// Orthonormal basis of the hyperplane orthogonal to the unit vector n,
// read off a Householder reflection mapping e1 to -sign(n1) n.
std::array<Vec6, 5> orthonormal_complement(const Vec6& n_unit) {
  Vec6 w = n_unit;
  w[0] += (n_unit[0] >= 0.0) ? 1.0 : -1.0;
  const double wtw = dot(w, w);
  std::array<Vec6, 5> basis{};
  for (std::size_t col = 1; col < 6; ++col) {
    Vec6 v{};
    for (std::size_t i = 0; i < 6; ++i)
      v[i] = (i == col ? 1.0 : 0.0) - 2.0 * w[i] * w[col] / wtw;
    basis[col - 1] = v;
  }
  return basis;
}

}  // namespace

Vec6 gradient_fd(const SellingParams& rho, const FdOptions& opt) {
  const std::vector<double> x(rho.raw().begin(), rho.raw().end());
  Vec6 g{};
  for (std::size_t i = 0; i < 6; ++i)
    g[i] = fd::partial(F_at, x, i, opt.grad_step * std::max(1.0, x[i]));
  return g;
}

Mat6 hessian_fd(const SellingParams& rho, const FdOptions& opt) {
  const std::vector<double> x(rho.raw().begin(), rho.raw().end());
  const auto h = fd::hessian(F_at, x, opt.hess_step);
  Mat6 out{};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) out[i][j] = 0.5 * (h[i][j] + h[j][i]);
  return out;
}

TangentAnalysis tangent_analysis(const Vec6& rho, const Mat6& hessian) {
  Vec6 n = det_gradient(rho);
  const double nn = norm(n);
  if (nn < 1e-12) throw ZeroGradient("tangent: grad det vanishes");
  n = (1.0 / nn) * n;

  const auto basis = orthonormal_complement(n);
  SqMat<5> t{};
  for (std::size_t i = 0; i < 5; ++i) {
    const Vec6 hb = mat_vec(hessian, basis[i]);
    for (std::size_t j = 0; j < 5; ++j) t[i][j] = dot(hb, basis[j]);
  }
  const auto eig = symmetric_eigen<5>(t);

  TangentAnalysis out{};
  out.values = eig.values;
  for (std::size_t k = 0; k < 5; ++k) {
    Vec6 dir{};
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t c = 0; c < 6; ++c) dir[c] += eig.vectors[k][i] * basis[i][c];
    out.directions[k] = dir;
  }
  return out;
}

std::array<double, 5> tangent_spectrum(const SellingParams& rho, const FdOptions& opt) {
  return tangent_analysis(rho.raw(), hessian_fd(rho, opt)).values;
}

const char* to_string(Stationarity s) {
  switch (s) {
    case Stationarity::interior_strict_min: return "interior_strict_min";
    case Stationarity::stratum_strict_min: return "stratum_strict_min";
    case Stationarity::saddle: return "saddle";
    case Stationarity::non_stationary: return "non_stationary";
    case Stationarity::inconclusive: return "inconclusive";
  }
  return "unknown";
}

StationaryReport classify_point(const SellingParams& rho, const ClassifyOptions& opt) {
  StationaryReport rep;
  rep.point = rho.raw();
  rep.active_set = rho.active_set();
  rep.gradient = gradient_fd(rho, opt.fd);
  rep.euler_residual = std::abs(dot(rho.raw(), rep.gradient));

  for (std::size_t i = 0; i < 6; ++i)
    if (rho.raw()[i] < opt.fd.hess_step * std::max(1.0, rho.raw()[i]))
      rep.one_sided_fd = true;

  rep.hessian = hessian_fd(rho, opt.fd);
  rep.full_spectrum = symmetric_eigen<6>(rep.hessian).values;
  const TangentAnalysis tan = tangent_analysis(rho.raw(), rep.hessian);
  rep.tangent_spectrum = tan.values;

  std::array<bool, 6> active{};
  for (int i : rep.active_set) active[static_cast<std::size_t>(i)] = true;

  // Stationarity in the cone: the gradient must vanish along inactive
  // coordinates, and must not point into the interior along active ones
  // (a negative active component is a first-order descent direction).
  bool stationary = true;
  for (std::size_t i = 0; i < 6; ++i) {
    if (!active[i] && std::abs(rep.gradient[i]) > opt.tol_grad) stationary = false;
    if (active[i] && rep.gradient[i] < -opt.tol_grad) stationary = false;
  }
  if (!stationary) {
    rep.classification = Stationarity::non_stationary;
    return rep;
  }

  bool all_positive = true;
  bool has_feasible_negative = false;
  for (std::size_t k = 0; k < 5; ++k) {
    if (tan.values[k] <= opt.tol_eig) all_positive = false;
    if (tan.values[k] < -opt.tol_eig) {
      // A negative direction certifies a saddle only if the cone admits it
      // and no first-order term blocks the decrease.
      Vec6 w = tan.directions[k];
      bool nonneg = true, nonpos = true;
      for (int i : rep.active_set) {
        const double wi = w[static_cast<std::size_t>(i)];
        if (wi < -1e-9) nonneg = false;
        if (wi > 1e-9) nonpos = false;
      }
      const bool feasible = rep.active_set.empty() || nonneg || nonpos;
      const double first_order = std::abs(dot(rep.gradient, w));
      if (feasible && first_order <= opt.tol_grad) has_feasible_negative = true;
    }
  }

  if (all_positive)
    rep.classification = rep.active_set.empty() ? Stationarity::interior_strict_min
                                                : Stationarity::stratum_strict_min;
  else if (has_feasible_negative)
    rep.classification = Stationarity::saddle;
  else
    rep.classification = Stationarity::inconclusive;
  return rep;
}

namespace refs {

namespace {
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kCbrt4 = std::cbrt(4.0);             // 2^(2/3)
const double kTwo56 = std::pow(2.0, 5.0 / 6.0);   // 2^(5/6)
}  // namespace

double f_bcc() { return 3.0 * (1.0 + 2.0 * kSqrt3) / std::pow(4.0, 2.0 / 3.0); }
double f_fcc() { return 3.0 * kTwo56; }
double f_sc() { return 6.0; }

double bcc_hessian_alpha() { return kCbrt4 / 768.0 * (14.0 + 24.0 * kSqrt3); }
double bcc_hessian_beta() { return kCbrt4 / 768.0 * (-25.0 + 12.0 * kSqrt3); }
double bcc_hessian_delta() { return kCbrt4 / 768.0 * (86.0 - 72.0 * kSqrt3); }

Mat6 bcc_hessian() {
  const double alpha = bcc_hessian_alpha();
  const double beta = bcc_hessian_beta();
  const double delta = bcc_hessian_delta();
  Mat6 h{};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      h[i][j] = (i == j) ? alpha : (i + j == 5 ? delta : beta);
  return h;
}

std::array<double, 6> bcc_spectrum() {
  const double pair = kCbrt4 * (25.0 - 12.0 * kSqrt3) / 128.0;
  const double triple = kCbrt4 * (-3.0 + 4.0 * kSqrt3) / 32.0;
  return {0.0, pair, pair, triple, triple, triple};
}

Mat6 fcc_hessian() {
  const double p = kTwo56 / 192.0;
  const double s = 96.0 * kSqrt2 - 220.0;
  Mat6 h = zero_mat<6>();
  h[0][0] = h[5][5] = 56.0 * p;
  h[0][5] = h[5][0] = s * p;
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = 1; j <= 4; ++j) h[i][j] = (i == j ? 27.0 : -9.0) * p;
  return h;
}

std::array<double, 6> fcc_spectrum() {
  const double neg = -kTwo56 / 48.0 * (41.0 - 24.0 * kSqrt2);
  const double mid = 3.0 / 16.0 * kTwo56;
  const double top = kTwo56 / 48.0 * (69.0 - 24.0 * kSqrt2);
  return {neg, 0.0, mid, mid, mid, top};
}

double sc_gradient_value() { return -4.0 + 2.0 * kSqrt2; }

Vec6 sc_gradient() {
  const double g = sc_gradient_value();
  return {0.0, 0.0, 0.0, g, g, g};
}

Vec6 fcc_negative_direction() { return {1.0, 0.0, 0.0, 0.0, 0.0, 1.0}; }

}  // namespace refs

}  // namespace voroq
