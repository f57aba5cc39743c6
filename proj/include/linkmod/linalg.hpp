#ifndef LINKMOD_LINALG_HPP
#define LINKMOD_LINALG_HPP

#include <optional>

#include "linkmod/scalar.hpp"

namespace linkmod {

/// Dense matrix over the coefficient field; small problems only
/// (socle computations, unit inversion, test oracles).
struct ScalarMat {
  size_t rows = 0, cols = 0;
  std::vector<Scalar> a;  // row-major

  ScalarMat() = default;
  ScalarMat(size_t r, size_t c, const FieldSpec& f)
      : rows(r), cols(c), a(r * c, Scalar::zero(f)) {}
  Scalar& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Scalar& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

size_t mat_rank(ScalarMat m);
/// One solution of A x = b, if any.
std::optional<std::vector<Scalar>> mat_solve(ScalarMat A, std::vector<Scalar> b);
/// Basis of the right kernel.
std::vector<std::vector<Scalar>> mat_kernel(ScalarMat A, const FieldSpec& f);

}  // namespace linkmod

#endif
