#pragma once

// Internal exact rational linear algebra for realizable oriented matroid
// construction. Small dense matrices only.

#include <vector>

#include "omact/rational.hpp"

namespace omact::linalg {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;  // row-major

// Gaussian elimination in place; returns the rank.
inline int row_reduce(Matrix& m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        const Rational inv = Rational(1) / m[rank][col];
        for (int c = col; c < cols; ++c) m[rank][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            const Rational factor = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

inline int rank_of(Matrix m) { return row_reduce(m); }

// Kernel vector of a matrix whose kernel is one-dimensional (the case of a
// circuit support: rank = cols - 1). Entries of the result are all nonzero
// for a minimal dependent column set.
inline Row kernel_vector(Matrix m) {
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    const int rank = row_reduce(m);
    if (rank != cols - 1)
        throw InternalCheckError("kernel is not one-dimensional for a circuit support");
    // Identify pivot columns of the reduced matrix.
    std::vector<int> pivot_col(rank, -1);
    std::vector<bool> is_pivot(cols, false);
    for (int r = 0; r < rank; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (!m[r][c].is_zero()) {
                pivot_col[r] = c;
                is_pivot[c] = true;
                break;
            }
        }
    }
    int free_col = -1;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_col = c;
    Row x(cols, Rational(0));
    x[free_col] = Rational(1);
    for (int r = rank - 1; r >= 0; --r) {
        Rational sum;
        for (int c = pivot_col[r] + 1; c < cols; ++c) sum += m[r][c] * x[c];
        x[pivot_col[r]] = -sum;
    }
    return x;
}

}  // namespace omact::linalg
