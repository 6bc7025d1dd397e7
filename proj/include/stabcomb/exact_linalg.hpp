#pragma once

#include <stdexcept>
#include <vector>

#include "stabcomb/bigint.hpp"

namespace stabcomb {

/// Rank over Q by fraction-free (Bareiss) elimination on integer matrices.
inline int integer_matrix_rank(std::vector<std::vector<BigInt>> a) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(a[0].size());
    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                a[r][c] = (a[r][c] * a[rank][col] - a[r][col] * a[rank][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

/// Solves A x = b over the rationals by Gaussian elimination.  Returns an
/// empty vector when the system is inconsistent; throws when the solution is
/// not unique (underdetermined in the column space).
inline std::vector<BigRat> solve_rational(std::vector<std::vector<BigRat>> a,
                                          std::vector<BigRat> b, bool* consistent = nullptr,
                                          bool* determined = nullptr) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        std::swap(b[rank], b[pivot]);
        BigRat inv = a[rank][col];
        for (int c = col; c < cols; ++c) a[rank][c] /= inv;
        b[rank] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            BigRat f = a[r][col];
            for (int c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
            b[r] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    bool cons = true;
    for (int r = rank; r < rows; ++r)
        if (b[r] != 0) cons = false;
    if (consistent) *consistent = cons;
    bool det = rank == cols;
    if (determined) *determined = det;
    if (!cons || !det) return {};
    std::vector<BigRat> x(cols, BigRat(0));
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return x;
}

}  // namespace stabcomb
