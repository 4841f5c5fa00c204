#pragma once

#include <vector>

#include "rational.hpp"

namespace hurwitz {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Solves A x = b exactly by Gauss-Jordan elimination. A may have more rows
/// than columns; the extra rows must be consistent. Throws singular_system
/// when the columns are dependent and inconsistent_system when no solution
/// exists.
inline std::vector<Rat> solve_exact(RatMatrix a, std::vector<Rat> b)
{
    const std::size_t rows = a.size();
    detail::require(rows == b.size(), "solve_exact: row count mismatch");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        detail::require(row.size() == cols, "solve_exact: ragged matrix");

    std::vector<std::size_t> pivot_row(cols);
    std::size_t r = 0;
    bool deficient = false;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows) {
            deficient = true;
            continue;
        }
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rat inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j)
            a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_row[c] = r;
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0)
            throw inconsistent_system("linear system has no solution");
    if (deficient)
        throw singular_system("linear system is rank deficient");
    std::vector<Rat> x(cols);
    for (std::size_t c = 0; c < cols; ++c)
        x[c] = b[pivot_row[c]];
    return x;
}

} // namespace hurwitz
