#ifndef VOROQ_SELLING_HPP
#define VOROQ_SELLING_HPP

// Selling parameters (rho01, rho02, rho03, rho12, rho13, rho23) of a 3-D
// lattice, the Gram matrix they induce, and the S4 relabelling action on
// the six edges of K4. This ordering of the six components is used
// everywhere in the library.

#include <array>
#include <vector>

#include "voroq/linalg.hpp"

namespace voroq {

// det A as a 16-monomial symmetric polynomial in (a,b,c,d,e,f).
// Accepts arbitrary vectors, including boundary points with zeros.
double det_closed(const Vec6& rho);

// Exact gradient of det_closed (each partial is a sum of 8 products).
Vec6 det_gradient(const Vec6& rho);

// Symmetric Gram matrix entries for a raw parameter vector:
// diag (a+d+e, b+d+f, c+e+f), off-diag (-d, -e, -f).
Mat3 gram_entries(const Vec6& rho);

// Indices of components that count as zero: |x| <= 1e-12 * max component.
std::vector<int> zero_components(const Vec6& rho);

// Validated parameter vector: components nonnegative, det A > 0, Gram
// matrix positive definite (leading minors). Boundary zeros are fine as
// long as det stays positive.
class SellingParams {
 public:
  explicit SellingParams(const Vec6& rho);
  SellingParams(double a, double b, double c, double d, double e, double f)
      : SellingParams(Vec6{a, b, c, d, e, f}) {}

  double operator[](int i) const { return rho_[static_cast<std::size_t>(i)]; }
  const Vec6& raw() const { return rho_; }

  double a() const { return rho_[0]; }
  double b() const { return rho_[1]; }
  double c() const { return rho_[2]; }
  double d() const { return rho_[3]; }
  double e() const { return rho_[4]; }
  double f() const { return rho_[5]; }

  std::vector<int> active_set() const { return zero_components(rho_); }

 private:
  Vec6 rho_;
};

struct GramMatrix {
  Mat3 entries;
  double det = 0.0;      // closed polynomial value
  Mat3 cholesky_upper{};  // R with R^T R = entries

  double operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
};

// Builds the Gram matrix, checks positive definiteness through the three
// leading principal minors, and cross-checks the closed-form determinant
// against the triangular factorization (rel. 1e-12).
GramMatrix gram_matrix(const SellingParams& rho);

// Determinant by cofactor expansion of the assembled entries. Exists as an
// independent cross-check of det_closed.
double det_direct(const GramMatrix& a);

// Element of S4 given by the images of {0,1,2,3}.
struct Permutation {
  std::array<int, 4> images;

  explicit Permutation(const std::array<int, 4>& im);
  int operator()(int i) const { return images[static_cast<std::size_t>(i)]; }

  static const std::array<Permutation, 24>& all();
};

// Edge order: {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}.
int edge_index(int i, int j);

// Induced permutation on the six edges: out[k] = in[source[k]].
struct EdgePermutation {
  std::array<int, 6> source;
};

const std::array<EdgePermutation, 24>& s4_edge_action();

// (sigma . rho)_{ij} = rho_{sigma(i) sigma(j)}
Vec6 s4_apply(const Permutation& sigma, const Vec6& rho);
inline Vec6 s4_apply(const Permutation& sigma, const SellingParams& rho) {
  return s4_apply(sigma, rho.raw());
}

// Lexicographically smallest of the 24 images; orbit deduplication key.
Vec6 canonical_representative(const Vec6& rho);

}  // namespace voroq

#endif
