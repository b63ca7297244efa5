#include "voroq/linalg.hpp"

#include <cmath>

namespace voroq {

Mat3 cholesky_upper(const Mat3& a) {
  // L L^T = A by standard Cholesky, returned as R = L^T.
  Mat3 l = zero_mat<3>();
  for (std::size_t j = 0; j < 3; ++j) {
    double s = a[j][j];
    for (std::size_t k = 0; k < j; ++k) s -= l[j][k] * l[j][k];
    if (s <= 0.0) throw NotPositiveDefinite("cholesky: nonpositive pivot");
    const double ljj = std::sqrt(s);
    l[j][j] = ljj;
    for (std::size_t i = j + 1; i < 3; ++i) {
      double t = a[i][j];
      for (std::size_t k = 0; k < j; ++k) t -= l[i][k] * l[j][k];
      l[i][j] = t / ljj;
    }
  }
  Mat3 r = zero_mat<3>();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i][j] = l[j][i];
  return r;
}

Vec3 solve_lower_transposed(const Mat3& r, const Vec3& y) {
  // R^T is lower triangular with (R^T)_{ij} = r[j][i].
  Vec3 z{};
  z[0] = y[0] / r[0][0];
  z[1] = (y[1] - r[0][1] * z[0]) / r[1][1];
  z[2] = (y[2] - r[0][2] * z[0] - r[1][2] * z[1]) / r[2][2];
  return z;
}

double det3(const Mat3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 inverse3(const Mat3& a) {
  const double d = det3(a);
  Mat3 inv;
  inv[0][0] = (a[1][1] * a[2][2] - a[1][2] * a[2][1]) / d;
  inv[0][1] = (a[0][2] * a[2][1] - a[0][1] * a[2][2]) / d;
  inv[0][2] = (a[0][1] * a[1][2] - a[0][2] * a[1][1]) / d;
  inv[1][0] = (a[1][2] * a[2][0] - a[1][0] * a[2][2]) / d;
  inv[1][1] = (a[0][0] * a[2][2] - a[0][2] * a[2][0]) / d;
  inv[1][2] = (a[0][2] * a[1][0] - a[0][0] * a[1][2]) / d;
  inv[2][0] = (a[1][0] * a[2][1] - a[1][1] * a[2][0]) / d;
  inv[2][1] = (a[0][1] * a[2][0] - a[0][0] * a[2][1]) / d;
  inv[2][2] = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) / d;
  return inv;
}

}  // namespace voroq
