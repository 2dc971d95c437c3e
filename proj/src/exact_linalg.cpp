#include "desargues/exact_linalg.hpp"

#include <utility>

namespace desargues {

Scalar determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");

  Scalar det = m[0][0].field().one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return m[0][0].field().zero() * det;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Scalar inv = m[col][col].inv();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Scalar factor = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

std::vector<Vector> nullspace(const Matrix& rows, std::size_t cols, const Field& field) {
  Matrix m = rows;
  for (const auto& row : m)
    if (row.size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    Scalar inv = m[rank][col].inv();
    for (auto& entry : m[rank]) entry *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Scalar factor = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<Vector> basis;
  std::size_t next_pivot = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == free) {
      ++next_pivot;
      continue;
    }
    Vector v(cols, field.zero());
    v[free] = field.one();
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -m[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace desargues
