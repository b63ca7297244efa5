#include "voroq/selling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "voroq/errors.hpp"

namespace voroq {

double det_closed(const Vec6& r) {
  const double a = r[0], b = r[1], c = r[2], d = r[3], e = r[4], f = r[5];
  return a * b * c + a * b * e + a * b * f + a * c * d + a * c * f + a * d * e +
         a * d * f + a * e * f + b * c * d + b * c * e + b * d * e + b * d * f +
         b * e * f + c * d * e + c * d * f + c * e * f;
}

Vec6 det_gradient(const Vec6& r) {
  const double a = r[0], b = r[1], c = r[2], d = r[3], e = r[4], f = r[5];
  return {b * c + b * e + b * f + c * d + c * f + d * e + d * f + e * f,
          a * c + a * e + a * f + c * d + c * e + d * e + d * f + e * f,
          a * b + a * d + a * f + b * d + b * e + d * e + d * f + e * f,
          a * c + a * e + a * f + b * c + b * e + b * f + c * e + c * f,
          a * b + a * d + a * f + b * c + b * d + b * f + c * d + c * f,
          a * b + a * c + a * d + a * e + b * d + b * e + c * d + c * e};
}

Mat3 gram_entries(const Vec6& r) {
  const double a = r[0], b = r[1], c = r[2], d = r[3], e = r[4], f = r[5];
  return {{{a + d + e, -d, -e},
           {-d, b + d + f, -f},
           {-e, -f, c + e + f}}};
}

std::vector<int> zero_components(const Vec6& rho) {
  double mx = 0.0;
  for (double x : rho) mx = std::max(mx, std::abs(x));
  const double tol = 1e-12 * mx;
  std::vector<int> zeros;
  for (int i = 0; i < 6; ++i)
    if (std::abs(rho[static_cast<std::size_t>(i)]) <= tol) zeros.push_back(i);
  return zeros;
}

SellingParams::SellingParams(const Vec6& rho) : rho_(rho) {
  for (double x : rho_) {
    if (!std::isfinite(x)) throw std::invalid_argument("selling: non-finite component");
    if (x < 0.0) throw std::invalid_argument("selling: negative component");
  }
  const Mat3 a = gram_entries(rho_);
  const double scale = std::max(1.0, a[0][0] + a[1][1] + a[2][2]);
  const double m1 = a[0][0];
  const double m2 = a[0][0] * a[1][1] - a[0][1] * a[0][1];
  const double m3 = det_closed(rho_);
  if (m1 <= 1e-14 * scale || m2 <= 1e-14 * scale * scale ||
      m3 <= 1e-14 * scale * scale * scale)
    throw NotPositiveDefinite("selling: Gram matrix not positive definite");
}

GramMatrix gram_matrix(const SellingParams& rho) {
  GramMatrix g;
  g.entries = gram_entries(rho.raw());
  g.det = det_closed(rho.raw());

  const Mat3& a = g.entries;
  const double scale = std::max(1.0, a[0][0] + a[1][1] + a[2][2]);
  const double m1 = a[0][0];
  const double m2 = a[0][0] * a[1][1] - a[0][1] * a[0][1];
  if (m1 <= 1e-14 * scale || m2 <= 1e-14 * scale * scale ||
      g.det <= 1e-14 * scale * scale * scale)
    throw NotPositiveDefinite("gram_matrix: leading minor not positive");

  g.cholesky_upper = cholesky_upper(a);
  const double r00 = g.cholesky_upper[0][0], r11 = g.cholesky_upper[1][1],
               r22 = g.cholesky_upper[2][2];
  const double det_chol = (r00 * r11 * r22) * (r00 * r11 * r22);
  if (std::abs(g.det - det_chol) > 1e-12 * std::max(1.0, g.det))
    throw NotPositiveDefinite("gram_matrix: determinant cross-check failed");
  return g;
}

double det_direct(const GramMatrix& g) {
  const Mat3& a = g.entries;
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Permutation::Permutation(const std::array<int, 4>& im) : images(im) {
  std::array<bool, 4> seen{};
  for (int x : images) {
    if (x < 0 || x > 3 || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("permutation: images must be a bijection on {0,1,2,3}");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

const std::array<Permutation, 24>& Permutation::all() {
  static const std::array<Permutation, 24> table = [] {
    std::array<int, 4> im = {0, 1, 2, 3};
    std::vector<Permutation> v;
    do v.emplace_back(im);
    while (std::next_permutation(im.begin(), im.end()));
    std::array<Permutation, 24> out = {
        v[0],  v[1],  v[2],  v[3],  v[4],  v[5],  v[6],  v[7],
        v[8],  v[9],  v[10], v[11], v[12], v[13], v[14], v[15],
        v[16], v[17], v[18], v[19], v[20], v[21], v[22], v[23]};
    return out;
  }();
  return table;
}

int edge_index(int i, int j) {
  static constexpr int table[4][4] = {{-1, 0, 1, 2},
                                      {0, -1, 3, 4},
                                      {1, 3, -1, 5},
                                      {2, 4, 5, -1}};
  return table[i][j];
}

const std::array<EdgePermutation, 24>& s4_edge_action() {
  static const std::array<EdgePermutation, 24> table = [] {
    constexpr int edges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::array<EdgePermutation, 24> out{};
    const auto& perms = Permutation::all();
    for (std::size_t s = 0; s < 24; ++s)
      for (std::size_t k = 0; k < 6; ++k)
        out[s].source[k] =
            edge_index(perms[s](edges[k][0]), perms[s](edges[k][1]));
    return out;
  }();
  return table;
}

Vec6 s4_apply(const Permutation& sigma, const Vec6& rho) {
  constexpr int edges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  Vec6 out{};
  for (std::size_t k = 0; k < 6; ++k)
    out[k] = rho[static_cast<std::size_t>(
        edge_index(sigma(edges[k][0]), sigma(edges[k][1])))];
  return out;
}

Vec6 canonical_representative(const Vec6& rho) {
  Vec6 best = rho;
  for (const auto& ep : s4_edge_action()) {
    Vec6 img{};
    for (std::size_t k = 0; k < 6; ++k)
      img[k] = rho[static_cast<std::size_t>(ep.source[k])];
    if (img < best) best = img;
  }
  return best;
}

}  // namespace voroq
