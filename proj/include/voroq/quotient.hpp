#ifndef VOROQ_QUOTIENT_HPP
#define VOROQ_QUOTIENT_HPP

// Scale-invariant isoperimetric quotient F = area / volume^(2/3) of the
// lattice Voronoi cell, evaluated two independent ways: a closed formula in
// the six parameters and the geometric vertex/face pipeline. Q = 36 pi / F^3
// is the sphere-normalized variant (Q = 1 for a ball).

#include <array>

#include "voroq/selling.hpp"

namespace voroq {

// The seven face-pair weights Q_* = V_*^T A V_* and their square roots
// (scalar prefactor times sqrt of a linear form).
struct AreaDecomposition {
  double q12 = 0, q13 = 0, q23 = 0, q1 = 0, q2 = 0, q3 = 0, q0 = 0;
  std::array<double, 7> sqrt_terms{};  // order: 12, 13, 23, 1, 2, 3, 0

  std::array<double, 7> as_array() const { return {q12, q13, q23, q1, q2, q3, q0}; }
};

AreaDecomposition area_decomposition(const SellingParams& rho);

// Closed formula: 2 (det A)^(-5/6) * sum of the seven sqrt terms.
double F_closed(const SellingParams& rho);

// Geometric path: total cell area / (det A)^(1/3) via build_cell.
double F_geometric(const SellingParams& rho);

double Q_from_F(double f);

namespace detail {
// Same closed formula on a raw vector; throws DegenerateCell if det <= 0.
// Finite-difference stencils use this to probe points near the boundary.
double F_closed_raw(const Vec6& rho);
}  // namespace detail

}  // namespace voroq

#endif
