#include "linkmod/linalg.hpp"

namespace linkmod {

namespace {

// Row echelon, returns pivot columns; m is modified in place.
std::vector<size_t> echelon(ScalarMat& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t p = row;
    while (p < m.rows && m.at(p, col).is_zero()) ++p;
    if (p == m.rows) continue;
    if (p != row)
      for (size_t j = col; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    Scalar inv = m.at(row, col).inv();
    for (size_t j = col; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (size_t j = col; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

size_t mat_rank(ScalarMat m) { return echelon(m).size(); }

std::optional<std::vector<Scalar>> mat_solve(ScalarMat A, std::vector<Scalar> b) {
  if (b.size() != A.rows) throw Error("mat_solve: size mismatch");
  FieldSpec f = A.rows && A.cols ? A.at(0, 0).field() : FieldSpec::rationals();
  if (!b.empty()) f = b[0].field();
  ScalarMat aug(A.rows, A.cols + 1, f);
  for (size_t i = 0; i < A.rows; ++i) {
    for (size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  std::vector<size_t> pivots = echelon(aug);
  for (size_t p : pivots)
    if (p == A.cols) return std::nullopt;  // inconsistent
  std::vector<Scalar> x(A.cols, Scalar::zero(f));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, A.cols);
  return x;
}

std::vector<std::vector<Scalar>> mat_kernel(ScalarMat A, const FieldSpec& f) {
  size_t n = A.cols;
  std::vector<size_t> pivots = echelon(A);
  std::vector<bool> is_pivot(n, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(n, Scalar::zero(f));
    v[free_col] = Scalar::one(f);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = A.at(r, free_col).neg();
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace linkmod
