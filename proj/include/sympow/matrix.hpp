#pragma once
#include <cstddef>
#include <vector>

#include "sympow/errors.hpp"
#include "sympow/field.hpp"

namespace sympow {

// Dense matrix over an exact field, row-major.  Only the operations the
// toolkit needs (rank, kernel) are provided; everything is deterministic
// so repeated runs produce identical bases.
template <class F>
struct ExactMatrix {
    using Elem = typename F::Elem;
    F field;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Elem> data;  // rows * cols entries

    ExactMatrix(F f, std::size_t r, std::size_t c)
        : field(f), rows(r), cols(c), data(r * c, f.zero()) {}

    Elem& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

namespace detail {

// In-place reduced row echelon form; returns the pivot columns in order.
// Pivot choice is "first row with a nonzero entry in the leftmost open
// column", which keeps results reproducible across runs and platforms.
template <class F>
std::vector<std::size_t> rref(ExactMatrix<F>& m) {
    const F& k = m.field;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && k.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (std::size_t j = col; j < m.cols; ++j) std::swap(m.at(row, j), m.at(sel, j));
        auto lead_inv = k.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = k.mul(m.at(row, j), lead_inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || k.is_zero(m.at(i, col))) continue;
            auto factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = k.sub(m.at(i, j), k.mul(factor, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

template <class F>
std::size_t matrix_rank(ExactMatrix<F> m) {
    return detail::rref(m).size();
}

// Basis of the right kernel {v : M v = 0}, one vector per free column,
// ordered by free column index.  Each vector has a 1 in its free column.
template <class F>
std::vector<std::vector<typename F::Elem>> matrix_kernel_basis(ExactMatrix<F> m) {
    const F& k = m.field;
    std::vector<std::size_t> pivots = detail::rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<typename F::Elem>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename F::Elem> v(m.cols, k.zero());
        v[free] = k.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = k.neg(m.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sympow
