#ifndef VOROQ_OPTIMIZE_HPP
#define VOROQ_OPTIMIZE_HPP

// Minimization of F over the closed cone. Since F is homogeneous of degree
// zero the scale is gauged away by restricting to the simplex
// {rho >= 0, sum rho = 6} (all-ones is the truncated-octahedron point).
// Projected gradient descent with Armijo backtracking does the work; a
// Nelder-Mead fallback covers stalls, and a curvature probe walks out of
// boundary strata that are only stationary, not minimal.

#include <cstdint>
#include <utility>
#include <vector>

#include "voroq/linalg.hpp"
#include "voroq/selling.hpp"

namespace voroq {

struct OptimizeConfig {
  int max_iter = 10000;
  double grad_tol = 1e-7;     // on the projected-gradient residual
  double armijo = 1e-4;
  double step0 = 1.0;
  int stall_limit = 20;       // consecutive failed line searches before fallback
  bool record_trace = false;
  bool escape_strata = true;  // second-order escape from non-minimal strata
};

struct OptimizationResult {
  Vec6 start{};
  Vec6 minimizer{};  // normalized to sum = 6
  double F_value = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<std::pair<int, double>> trace;  // (iteration, F) when recorded
};

// Clip negatives to zero, then rescale so the components sum to 6.
Vec6 project_to_simplex(const Vec6& rho);

OptimizationResult minimize_F(const SellingParams& start, const OptimizeConfig& cfg = {});

struct SurveySummary {
  int n_starts = 0;
  std::uint64_t seed = 0;
  double best_F = 0.0;
  Vec6 best_point{};
  int n_converged_to_bcc = 0;       // runs with |F - F_bcc| <= 1e-5
  double fraction_converged = 0.0;
  std::vector<Vec6> counterexample_candidates;  // re-verified F < F_bcc - 1e-9
};

// n_starts runs from uniform-random simplex points, deterministic in seed.
SurveySummary random_restart_survey(int n_starts, std::uint64_t seed,
                                    const OptimizeConfig& cfg = {});

}  // namespace voroq

#endif
