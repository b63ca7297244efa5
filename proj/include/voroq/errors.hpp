#ifndef VOROQ_ERRORS_HPP
#define VOROQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace voroq {

// Gram matrix failed a leading-minor positivity check.
struct NotPositiveDefinite : std::domain_error {
  explicit NotPositiveDefinite(const std::string& what) : std::domain_error(what) {}
};

// det A <= 0: the lattice, and hence its cell, is degenerate.
struct DegenerateCell : std::domain_error {
  explicit DegenerateCell(const std::string& what) : std::domain_error(what) {}
};

// A finite-difference stencil point left the feasible cone.
struct DegenerateStencil : std::runtime_error {
  explicit DegenerateStencil(const std::string& what) : std::runtime_error(what) {}
};

// Constraint gradient vanished; no tangent space to project onto.
struct ZeroGradient : std::runtime_error {
  explicit ZeroGradient(const std::string& what) : std::runtime_error(what) {}
};

// Jacobi eigensolver exceeded its sweep budget.
struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

// A scan/verification assertion failed; message names the violating sample.
struct AssertionFailure : std::runtime_error {
  explicit AssertionFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace voroq

#endif
