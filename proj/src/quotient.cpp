#include "voroq/quotient.hpp"

#include <cmath>

#include "voroq/cell.hpp"
#include "voroq/errors.hpp"

namespace voroq {

namespace detail {

double F_closed_raw(const Vec6& r) {
  const double det = det_closed(r);
  if (det <= 0.0) throw DegenerateCell("F_closed: det A <= 0");
  const double a = r[0], b = r[1], c = r[2], d = r[3], e = r[4], f = r[5];
  const double sum = a * f * std::sqrt(b + c + d + e) +
                     b * e * std::sqrt(a + c + d + f) +
                     c * d * std::sqrt(a + b + e + f) +
                     std::sqrt(a + b + c) * (d * e + d * f + e * f) +
                     std::sqrt(a + d + e) * (b * c + b * f + c * f) +
                     std::sqrt(b + d + f) * (a * c + a * e + c * e) +
                     std::sqrt(c + e + f) * (a * b + a * d + b * d);
  // det^(5/6) via exp/log keeps relative accuracy uniform across the many
  // orders of magnitude the scaling tests sweep through.
  return 2.0 * sum * std::exp(-5.0 / 6.0 * std::log(det));
}

}  // namespace detail

AreaDecomposition area_decomposition(const SellingParams& rho) {
  const double a = rho.a(), b = rho.b(), c = rho.c(), d = rho.d(),
               e = rho.e(), f = rho.f();
  AreaDecomposition out;
  out.q12 = (c * d) * (c * d) * (a + b + e + f);
  out.q13 = (b * e) * (b * e) * (a + c + d + f);
  out.q23 = (a * f) * (a * f) * (b + c + d + e);
  out.q1 = (b * c + b * f + c * f) * (b * c + b * f + c * f) * (a + d + e);
  out.q2 = (a * c + a * e + c * e) * (a * c + a * e + c * e) * (b + d + f);
  out.q3 = (a * b + a * d + b * d) * (a * b + a * d + b * d) * (c + e + f);
  out.q0 = (d * e + d * f + e * f) * (d * e + d * f + e * f) * (a + b + c);
  out.sqrt_terms = {c * d * std::sqrt(a + b + e + f),
                    b * e * std::sqrt(a + c + d + f),
                    a * f * std::sqrt(b + c + d + e),
                    (b * c + b * f + c * f) * std::sqrt(a + d + e),
                    (a * c + a * e + c * e) * std::sqrt(b + d + f),
                    (a * b + a * d + b * d) * std::sqrt(c + e + f),
                    (d * e + d * f + e * f) * std::sqrt(a + b + c)};
  return out;
}

double F_closed(const SellingParams& rho) { return detail::F_closed_raw(rho.raw()); }

double F_geometric(const SellingParams& rho) {
  const VoronoiCell cell = build_cell(rho);
  const double det = det_closed(rho.raw());
  return cell.total_area * std::exp(-std::log(det) / 3.0);
}

double Q_from_F(double f) {
  constexpr double pi = 3.14159265358979323846;
  return 36.0 * pi / (f * f * f);
}

}  // namespace voroq
