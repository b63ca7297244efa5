#ifndef VOROQ_FAMILIES_HPP
#define VOROQ_FAMILIES_HPP

// Two-value parameter families: the S4 orbit classes of 0/1 edge masks on
// K4, the one-variable reduction of the opposite family (which interpolates
// from the rhombic dodecahedron at u=0 to the truncated octahedron at u=1),
// and the restricted functionals on the a=f=0 and d=e=f=0 strata.

#include <array>
#include <cstddef>
#include <vector>

#include "voroq/linalg.hpp"
#include "voroq/selling.hpp"

namespace voroq {

struct OrbitClass {
  char name;                   // C, O, A, S, T, P
  std::array<int, 6> pattern;  // 1 where the value p sits, 0 for q
  int orbit_size;              // number of masks in the S4 orbit
  int weight;                  // number of p-edges
};

// All orbit classes of masks of weight 1, 2, 3, grouped by the S4 edge
// action: C (size 6), O (3), A (12), S (4), T (4), P (12).
std::vector<OrbitClass> enumerate_two_value_orbits();

// A (p, q) pair on a two-value family; u = p/q is the reduced coordinate.
struct FamilyPoint {
  double p = 1.0;
  double q = 1.0;

  FamilyPoint(double p_, double q_);  // requires p, q >= 0
  double u() const;                   // requires q > 0
};

// Parameter vector with p on the pattern edges and q elsewhere.
Vec6 family_point(const std::array<int, 6>& pattern, double p, double q);

// F on the two-value family; throws DegenerateCell when det A vanishes.
double family_F(const OrbitClass& cls, double p, double q);
inline double family_F(const OrbitClass& cls, const FamilyPoint& pt) {
  return family_F(cls, pt.p, pt.q);
}

// One-variable profile of the opposite family at u = p/q:
//   H(u) = u^2 + sqrt2 sqrt(1+u) + 2(1+2u) sqrt(u+2)
//   tilde_F(u) = 2^(1/3) H(u) / (1+u)^(5/3)
//   psi(u) = 3(1+u) H'(u) - 5 H(u), the sign of tilde_F'.
double H_of_u(double u);
double H1(double u);
double H2(double u);
double H3(double u);
double psi(double u);
double psi1(double u);
double psi2(double u);  // 2 + 7 sqrt2 / (8(u+1)^(3/2)) - (3/4)(2u^2+9u+1)/(u+2)^(5/2)
double tilde_F(double u);

struct MonotonicityGrid {
  double u_min = 0.0;
  double u_max = 50.0;
  std::size_t samples = 50001;  // spacing 1e-3 over [0, 50]
};

struct MonotonicityReport {
  std::size_t samples = 0;
  double psi_at_0 = 0.0;
  double psi_at_1 = 0.0;
  double psi1_at_1 = 0.0;   // recorded, not asserted
  double psi2_min = 0.0;
  double min_u = 0.0;       // grid location of the tilde_F minimum
  double min_tilde_F = 0.0;
};

// Scans the grid and checks: psi < 0 on (0,1) and > 0 on (1, u_max];
// psi2 >= 2 - 15/(8 sqrt2) everywhere; the tilde_F minimum sits at the grid
// point nearest u = 1; sgn tilde_F' = sgn psi between neighbouring samples.
// Throws AssertionFailure naming the violating sample.
MonotonicityReport verify_opposite_monotonicity(const MonotonicityGrid& grid = {});

// Restriction to the a = f = 0 stratum (rhombic dodecahedra) and its exact
// Hessian at (1,1,1,1): (3 * 2^(5/6) / 64) * (diag 3, off-diagonal -1).
double F_RD(double b, double c, double d, double e);
Mat4 rd_hessian_at_ones();

// Restriction to d = e = f = 0 (rectangular boxes):
//   F_box = 2 (sqrt(a) bc + a sqrt(b) c + ab sqrt(c)) / (abc)^(5/6),
// with exact Hessian (1/6) * (diag 2, off-diagonal -1) at (1,1,1).
// Throws std::domain_error if an argument is <= 0.
double F_box(double a, double b, double c);
Mat3 box_hessian_at_ones();

}  // namespace voroq

#endif
