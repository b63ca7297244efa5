#ifndef VOROQ_LINALG_HPP
#define VOROQ_LINALG_HPP

// Small fixed-size linear algebra: everything here is 3x3..6x6, so plain
// arrays and textbook algorithms beat any external dependency.

#include <array>
#include <cmath>
#include <cstddef>
#include <algorithm>
#include <numeric>

#include "voroq/errors.hpp"

namespace voroq {

using Vec3 = std::array<double, 3>;
using Vec6 = std::array<double, 6>;

template <std::size_t N>
using SqMat = std::array<std::array<double, N>, N>;

using Mat3 = SqMat<3>;
using Mat4 = SqMat<4>;
using Mat6 = SqMat<6>;

template <std::size_t N>
inline double dot(const std::array<double, N>& x, const std::array<double, N>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += x[i] * y[i];
  return s;
}

template <std::size_t N>
inline double norm(const std::array<double, N>& x) {
  return std::sqrt(dot(x, x));
}

inline Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1],
          u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

template <std::size_t N>
inline std::array<double, N> operator+(const std::array<double, N>& x,
                                       const std::array<double, N>& y) {
  std::array<double, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = x[i] + y[i];
  return r;
}

template <std::size_t N>
inline std::array<double, N> operator-(const std::array<double, N>& x,
                                       const std::array<double, N>& y) {
  std::array<double, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = x[i] - y[i];
  return r;
}

template <std::size_t N>
inline std::array<double, N> operator*(double t, const std::array<double, N>& x) {
  std::array<double, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = t * x[i];
  return r;
}

template <std::size_t N>
inline SqMat<N> zero_mat() {
  SqMat<N> m{};
  for (auto& row : m) row.fill(0.0);
  return m;
}

template <std::size_t N>
inline SqMat<N> identity_mat() {
  SqMat<N> m = zero_mat<N>();
  for (std::size_t i = 0; i < N; ++i) m[i][i] = 1.0;
  return m;
}

template <std::size_t N>
inline std::array<double, N> mat_vec(const SqMat<N>& m, const std::array<double, N>& x) {
  std::array<double, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = dot(m[i], x);
  return r;
}

// Upper-triangular R with R^T R = A; throws if a pivot is not positive.
Mat3 cholesky_upper(const Mat3& a);

// Solve R^T z = y by forward substitution (R upper-triangular).
Vec3 solve_lower_transposed(const Mat3& r, const Vec3& y);

Mat3 inverse3(const Mat3& a);
double det3(const Mat3& a);

template <std::size_t N>
struct EigenSystem {
  std::array<double, N> values;                // ascending
  std::array<std::array<double, N>, N> vectors;  // vectors[k] pairs with values[k]
};

// Cyclic Jacobi sweeps; meant for the tiny symmetric matrices used here.
// Off-diagonal mass is driven below 1e-13 * ||M||_F; more than 100 sweeps
// signals pathological input.
template <std::size_t N>
EigenSystem<N> symmetric_eigen(const SqMat<N>& m_in) {
  SqMat<N> a = m_in;
  SqMat<N> v = identity_mat<N>();

  double scale = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) scale += a[i][j] * a[i][j];
  scale = std::sqrt(scale);
  const double tol = 1e-13 * std::max(scale, 1e-300);

  auto offdiag = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j) s = std::max(s, std::abs(a[i][j]));
    return s;
  };

  int sweeps = 0;
  while (offdiag() > tol) {
    if (++sweeps > 100) throw NoConvergence("jacobi: no convergence after 100 sweeps");
    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = a[p][q];
        if (std::abs(apq) <= tol * 1e-2) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = (theta >= 0.0)
                             ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                             : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < N; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a[i][i] < a[j][j]; });

  EigenSystem<N> out{};
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a[order[k]][order[k]];
    for (std::size_t i = 0; i < N; ++i) out.vectors[k][i] = v[i][order[k]];
  }
  return out;
}

}  // namespace voroq

#endif
