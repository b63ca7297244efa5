#ifndef VOROQ_CALCULUS_HPP
#define VOROQ_CALCULUS_HPP

// Numerical differentiation of F, spectral analysis on the fixed-volume
// tangent space, and KKT-aware classification of parameter points. Steps
// scale like eps^(1/3) (gradient) and eps^(1/4) (Hessian) at unit scale;
// components sitting on the boundary of the cone are differenced one-sided
// rather than stepping into det <= 0 territory.

#include <array>
#include <vector>

#include "voroq/linalg.hpp"
#include "voroq/selling.hpp"

namespace voroq {

struct FdOptions {
  double grad_step = 6e-6;   // h_i = grad_step * max(1, rho_i)
  double hess_step = 1.2e-4;  // h_i = hess_step * max(1, rho_i)
};

// Central differences; second-order one-sided forward on components with
// rho_i < h_i. Throws DegenerateStencil if a stencil point leaves the cone.
Vec6 gradient_fd(const SellingParams& rho, const FdOptions& opt = {});

// Central second differences, one-sided on boundary components, symmetrized.
Mat6 hessian_fd(const SellingParams& rho, const FdOptions& opt = {});

// Eigenvalues of P^T H P where the columns of P span {v : v . grad det = 0},
// the tangent space of the fixed-volume hypersurface. The zero eigenvalue of
// the scaling direction is excluded by construction.
std::array<double, 5> tangent_spectrum(const SellingParams& rho, const FdOptions& opt = {});

struct TangentAnalysis {
  std::array<double, 5> values;      // ascending
  std::array<Vec6, 5> directions;    // corresponding directions in R^6
};

TangentAnalysis tangent_analysis(const Vec6& rho, const Mat6& hessian);

enum class Stationarity {
  interior_strict_min,
  stratum_strict_min,
  saddle,
  non_stationary,
  inconclusive,
};

const char* to_string(Stationarity s);

struct ClassifyOptions {
  FdOptions fd{};
  double tol_grad = 1e-5;  // above FD noise, below the reference gradient scale (~1.17)
  double tol_eig = 1e-6;   // below the smallest relevant eigenvalue (~0.052)
};

struct StationaryReport {
  Vec6 point{};
  Vec6 gradient{};
  Mat6 hessian{};
  std::array<double, 6> full_spectrum{};     // ascending
  std::array<double, 5> tangent_spectrum{};  // ascending
  std::vector<int> active_set;               // indices with rho_i = 0
  Stationarity classification = Stationarity::inconclusive;
  double euler_residual = 0.0;  // |rho . grad F|, zero for exact degree-0 homogeneity
  bool one_sided_fd = false;    // some stencils were one-sided (boundary point)
};

StationaryReport classify_point(const SellingParams& rho, const ClassifyOptions& opt = {});

// Exact reference values at the three classic lattices.
namespace refs {

double f_bcc();  // 3 (1 + 2 sqrt 3) / 4^(2/3)
double f_fcc();  // 3 * 2^(5/6)
double f_sc();   // 6

// Hessian of F at the all-ones point: prefactor 2^(2/3)/768, diagonal
// 14+24sqrt3, generic off-diagonal -25+12sqrt3, opposite-pair entries
// 86-72sqrt3.
double bcc_hessian_alpha();
double bcc_hessian_beta();
double bcc_hessian_delta();
Mat6 bcc_hessian();
std::array<double, 6> bcc_spectrum();  // {0, 2^(2/3)(25-12r3)/128 x2, 2^(2/3)(-3+4r3)/32 x3}

Mat6 fcc_hessian();
std::array<double, 6> fcc_spectrum();

double sc_gradient_value();  // -4 + 2 sqrt 2, on each of d, e, f
Vec6 sc_gradient();
Vec6 fcc_negative_direction();  // (1,0,0,0,0,1)

}  // namespace refs

// Generic finite differences on callables over small real vectors, with the
// same one-sided rule at the lower bound 0. Shared by the restricted
// functionals' oracles.
namespace fd {

template <typename Fn>
double partial(Fn&& f, std::vector<double> x, std::size_t i, double h) {
  if (x[i] < h) {
    std::vector<double> x1 = x, x2 = x;
    x1[i] += h;
    x2[i] += 2.0 * h;
    return (-3.0 * f(x) + 4.0 * f(x1) - f(x2)) / (2.0 * h);
  }
  std::vector<double> xp = x, xm = x;
  xp[i] += h;
  xm[i] -= h;
  return (f(xp) - f(xm)) / (2.0 * h);
}

template <typename Fn>
std::vector<double> gradient(Fn&& f, const std::vector<double>& x, double step_scale) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    g[i] = partial(f, x, i, step_scale * std::max(1.0, x[i]));
  return g;
}

template <typename Fn>
std::vector<std::vector<double>> hessian(Fn&& f, const std::vector<double>& x,
                                         double step_scale) {
  const std::size_t n = x.size();
  std::vector<double> h(n);
  std::vector<bool> one_sided(n);
  for (std::size_t i = 0; i < n; ++i) {
    h[i] = step_scale * std::max(1.0, x[i]);
    one_sided[i] = x[i] < h[i];
  }

  auto at = [&](std::vector<double> y, std::size_t i, int si, std::size_t j, int sj) {
    y[i] += si * h[i];
    y[j] += sj * h[j];
    return f(y);
  };

  // Directional second-derivative coefficients: central (-1,0,1)/h^2 pattern
  // vs forward (0,h,2h,3h) with weights (2,-5,4,-1)/h^2.
  std::vector<std::vector<double>> hess(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    if (!one_sided[i]) {
      std::vector<double> xp = x, xm = x;
      xp[i] += h[i];
      xm[i] -= h[i];
      hess[i][i] = (f(xp) - 2.0 * f(x) + f(xm)) / (h[i] * h[i]);
    } else {
      std::vector<double> x1 = x, x2 = x, x3 = x;
      x1[i] += h[i];
      x2[i] += 2.0 * h[i];
      x3[i] += 3.0 * h[i];
      hess[i][i] = (2.0 * f(x) - 5.0 * f(x1) + 4.0 * f(x2) - f(x3)) / (h[i] * h[i]);
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      double v = 0.0;
      if (!one_sided[i] && !one_sided[j]) {
        v = (at(x, i, 1, j, 1) - at(x, i, 1, j, -1) - at(x, i, -1, j, 1) +
             at(x, i, -1, j, -1)) /
            (4.0 * h[i] * h[j]);
      } else {
        // One-sided first-derivative weights (-3,4,-1)/(2h) applied in each
        // one-sided direction, central in the other.
        const double wi[3] = {-3.0, 4.0, -1.0};
        if (one_sided[i] && one_sided[j]) {
          for (int si = 0; si < 3; ++si)
            for (int sj = 0; sj < 3; ++sj)
              v += wi[si] * wi[sj] * at(x, i, si, j, sj);
          v /= 4.0 * h[i] * h[j];
        } else {
          const std::size_t ib = one_sided[i] ? i : j;  // boundary index
          const std::size_t jc = one_sided[i] ? j : i;  // central index
          for (int s = 0; s < 3; ++s)
            v += wi[s] * (at(x, ib, s, jc, 1) - at(x, ib, s, jc, -1));
          v /= 4.0 * h[ib] * h[jc];
        }
      }
      hess[i][j] = hess[j][i] = v;
    }
  }
  return hess;
}

}  // namespace fd

}  // namespace voroq

#endif
