#pragma once

// Small dense exact linear algebra: determinants and null spaces by
// Gaussian elimination. Pivots are the first nonzero entry in each column,
// so results are deterministic.

#include <vector>

#include "desargues/scalar_field.hpp"

namespace desargues {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;

/// Square matrices only; throws DimensionMismatch otherwise.
Scalar determinant(Matrix m);

/// Basis of {x : rows * x = 0}. Each basis vector has a 1 in its free
/// coordinate and 0 in the other free coordinates (reduced row echelon form).
std::vector<Vector> nullspace(const Matrix& rows, std::size_t cols, const Field& field);

}  // namespace desargues
