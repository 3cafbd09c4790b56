#ifndef SUPCLOSE_LINALG_HH
#define SUPCLOSE_LINALG_HH

#include "supclose/coeff.hh"
#include "supclose/errors.hh"

#include <cstddef>
#include <vector>

// Dense exact rational linear algebra, just enough for the bounded
// kernel searches in the Nagata module.  Matrices are row-major
// vector-of-rows; all arithmetic is in ℚ, so results are exact.

namespace supclose {

using RatMatrix = std::vector<std::vector<Rat>>;

// In-place reduction to reduced row echelon form; returns the pivot
// column of each nonzero row, in order.
inline std::vector<size_t> rat_rref(RatMatrix& m)
{
    std::vector<size_t> pivots;
    if (m.empty())
        return pivots;
    const size_t ncols = m.front().size();
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < m.size(); ++col) {
        size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[row], m[pivot]);
        const Rat inv = 1 / m[row][col];
        for (size_t j = col; j < ncols; ++j)
            m[row][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0)
                continue;
            const Rat factor = m[i][col];
            for (size_t j = col; j < ncols; ++j)
                m[i][j] -= factor * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

// Basis of {x : m·x = 0} ⊆ ℚ^ncols (one vector per free column; the
// empty matrix has the full standard basis as kernel).
inline RatMatrix rat_nullspace(RatMatrix m, size_t ncols)
{
    for (const auto& r : m)
        if (r.size() != ncols)
            throw internal_error("nullspace: ragged matrix");
    const std::vector<size_t> pivots = rat_rref(m);

    std::vector<bool> is_pivot(ncols, false);
    for (size_t c : pivots)
        is_pivot[c] = true;

    RatMatrix basis;
    for (size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<Rat> v(ncols, Rat(0));
        v[free_col] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace supclose

#endif
