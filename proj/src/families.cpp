#include "voroq/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "voroq/errors.hpp"
#include "voroq/quotient.hpp"

namespace voroq {

namespace {

std::array<int, 6> mask_canonical(const std::array<int, 6>& mask) {
  std::array<int, 6> best = mask;
  for (const auto& ep : s4_edge_action()) {
    std::array<int, 6> img{};
    for (std::size_t k = 0; k < 6; ++k)
      img[k] = mask[static_cast<std::size_t>(ep.source[k])];
    if (img < best) best = img;
  }
  return best;
}

}  // namespace

std::vector<OrbitClass> enumerate_two_value_orbits() {
  struct Rep {
    char name;
    std::array<int, 6> pattern;
  };
  static const Rep reps[6] = {
      {'C', {1, 0, 0, 0, 0, 0}}, {'O', {1, 0, 0, 0, 0, 1}},
      {'A', {1, 1, 0, 0, 0, 0}}, {'S', {1, 1, 1, 0, 0, 0}},
      {'T', {1, 1, 0, 1, 0, 0}}, {'P', {1, 0, 0, 1, 0, 1}}};

  // Group every weight-1..3 mask by its canonical form under the edge action.
  std::map<std::array<int, 6>, int> orbit_sizes;
  for (int bits = 1; bits < 64; ++bits) {
    std::array<int, 6> mask{};
    int w = 0;
    for (int k = 0; k < 6; ++k) {
      mask[static_cast<std::size_t>(k)] = (bits >> k) & 1;
      w += mask[static_cast<std::size_t>(k)];
    }
    if (w < 1 || w > 3) continue;
    ++orbit_sizes[mask_canonical(mask)];
  }

  std::vector<OrbitClass> out;
  for (const Rep& r : reps) {
    const auto it = orbit_sizes.find(mask_canonical(r.pattern));
    OrbitClass cls{};
    cls.name = r.name;
    cls.pattern = r.pattern;
    cls.orbit_size = it == orbit_sizes.end() ? 0 : it->second;
    cls.weight = 0;
    for (int b : r.pattern) cls.weight += b;
    out.push_back(cls);
  }
  return out;
}

FamilyPoint::FamilyPoint(double p_, double q_) : p(p_), q(q_) {
  if (p < 0.0 || q < 0.0)
    throw std::invalid_argument("family point: p and q must be nonnegative");
}

double FamilyPoint::u() const {
  if (q <= 0.0) throw std::domain_error("family point: u = p/q needs q > 0");
  return p / q;
}

Vec6 family_point(const std::array<int, 6>& pattern, double p, double q) {
  Vec6 rho{};
  for (std::size_t k = 0; k < 6; ++k) rho[k] = pattern[k] ? p : q;
  return rho;
}

double family_F(const OrbitClass& cls, double p, double q) {
  return detail::F_closed_raw(family_point(cls.pattern, p, q));
}

double H_of_u(double u) {
  return u * u + std::sqrt(2.0) * std::sqrt(1.0 + u) +
         2.0 * (1.0 + 2.0 * u) * std::sqrt(u + 2.0);
}

double H1(double u) {
  return 2.0 * u + std::sqrt(2.0) / (2.0 * std::sqrt(1.0 + u)) +
         (9.0 + 6.0 * u) / std::sqrt(u + 2.0);
}

double H2(double u) {
  return 2.0 - std::sqrt(2.0) / (4.0 * std::pow(1.0 + u, 1.5)) +
         3.0 * (2.0 * u + 5.0) / (2.0 * std::pow(u + 2.0, 1.5));
}

double H3(double u) {
  return 3.0 * std::sqrt(2.0) / (8.0 * std::pow(1.0 + u, 2.5)) -
         3.0 * (2.0 * u + 7.0) / (4.0 * std::pow(u + 2.0, 2.5));
}

double psi(double u) { return 3.0 * (1.0 + u) * H1(u) - 5.0 * H_of_u(u); }

double psi1(double u) { return 3.0 * (1.0 + u) * H2(u) - 2.0 * H1(u); }

double psi2(double u) {
  return 2.0 + 7.0 * std::sqrt(2.0) / (8.0 * std::pow(u + 1.0, 1.5)) -
         0.75 * (2.0 * u * u + 9.0 * u + 1.0) / std::pow(u + 2.0, 2.5);
}

double tilde_F(double u) {
  return std::cbrt(2.0) * H_of_u(u) * std::pow(1.0 + u, -5.0 / 3.0);
}

MonotonicityReport verify_opposite_monotonicity(const MonotonicityGrid& grid) {
  if (grid.samples < 3 || grid.u_max <= grid.u_min)
    throw std::invalid_argument("monotonicity: bad grid");
  const double step = (grid.u_max - grid.u_min) / static_cast<double>(grid.samples - 1);

  const double psi2_bound = 2.0 - 15.0 / (8.0 * std::sqrt(2.0));
  MonotonicityReport rep;
  rep.samples = grid.samples;
  rep.psi_at_0 = psi(0.0);
  rep.psi_at_1 = psi(1.0);
  rep.psi1_at_1 = psi1(1.0);
  rep.psi2_min = psi2(grid.u_min);

  auto fail = [](const std::string& what, double u) {
    throw AssertionFailure("monotonicity: " + what + " at u = " + std::to_string(u));
  };

  double best_f = tilde_F(grid.u_min);
  double best_u = grid.u_min;
  double prev_f = best_f;
  // A sample is "at" 0 or 1 when it is the nearest grid point to it.
  for (std::size_t k = 0; k < grid.samples; ++k) {
    const double u = grid.u_min + step * static_cast<double>(k);
    const double p = psi(u);
    if (std::abs(u) > 0.5 * step && std::abs(u - 1.0) > 0.5 * step) {
      if (u < 1.0 && p >= 0.0) fail("psi not negative on (0,1)", u);
      if (u > 1.0 && p <= 0.0) fail("psi not positive beyond 1", u);
    }
    const double p2 = psi2(u);
    rep.psi2_min = std::min(rep.psi2_min, p2);
    if (p2 < psi2_bound) fail("psi'' below its lower bound", u);

    const double f = tilde_F(u);
    if (f < best_f) {
      best_f = f;
      best_u = u;
    }
    if (k > 0 && std::abs(u - 1.0) > 0.5 * step && std::abs(u - step - 1.0) > 0.5 * step) {
      // sgn tilde_F' == sgn psi: between consecutive samples the function
      // must move the way the midpoint sign of psi says.
      const double mid = psi(u - 0.5 * step);
      if (mid < 0.0 && f >= prev_f) fail("tilde_F not decreasing where psi < 0", u);
      if (mid > 0.0 && f <= prev_f) fail("tilde_F not increasing where psi > 0", u);
    }
    prev_f = f;
  }
  rep.min_u = best_u;
  rep.min_tilde_F = best_f;

  if (std::abs(rep.psi_at_0) > 1e-10) fail("psi(0) != 0", 0.0);
  if (std::abs(rep.psi_at_1) > 1e-10) fail("psi(1) != 0", 1.0);
  if (std::abs(best_u - 1.0) > 0.5 * step) fail("tilde_F minimum not at u = 1", best_u);
  return rep;
}

double F_RD(double b, double c, double d, double e) {
  return detail::F_closed_raw({0.0, b, c, d, e, 0.0});
}

Mat4 rd_hessian_at_ones() {
  const double p = 3.0 * std::pow(2.0, 5.0 / 6.0) / 64.0;
  Mat4 h{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) h[i][j] = (i == j ? 3.0 : -1.0) * p;
  return h;
}

double F_box(double a, double b, double c) {
  if (a <= 0.0 || b <= 0.0 || c <= 0.0)
    throw std::domain_error("F_box: arguments must be positive");
  const double num = std::sqrt(a) * b * c + a * std::sqrt(b) * c + a * b * std::sqrt(c);
  return 2.0 * num * std::exp(-5.0 / 6.0 * std::log(a * b * c));
}

Mat3 box_hessian_at_ones() {
  Mat3 h{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) h[i][j] = (i == j ? 2.0 : -1.0) / 6.0;
  return h;
}

}  // namespace voroq
