/*
   Copyright 2026 The ribboncheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file polymatrix.hpp
 * @brief Dense matrices over Z[Z^m] and fraction-free (Bareiss) elimination.
 *
 * Every entry produced during Bareiss elimination is a minor of the input,
 * so all divisions by the previous pivot are exact in the Laurent ring and
 * no fraction field is ever materialized.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"

namespace ribboncheck {

class PolyMatrix {
   public:
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t variables)
        : rows_(rows), cols_(cols), variables_(variables), data_(rows * cols, LaurentPoly(variables)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t variables() const noexcept { return variables_; }

    LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
        PolyMatrix s(rows.size(), cols.size(), variables_);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
        return s;
    }

    PolyMatrix without_rows(std::span<const std::size_t> drop) const {
        std::vector<std::size_t> keep, all;
        for (std::size_t i = 0; i < rows_; ++i)
            if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
        for (std::size_t j = 0; j < cols_; ++j) all.push_back(j);
        return submatrix(keep, all);
    }

    PolyMatrix transposed() const {
        PolyMatrix t(cols_, rows_, variables_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

   private:
    std::size_t rows_, cols_, variables_;
    std::vector<LaurentPoly> data_;
};

/// Outcome of fraction-free elimination. The leading rank x rank block of
/// rowOrder x colOrder is a nonzero minor whose value is sign * lastPivot.
struct Elimination {
    std::size_t rank = 0;
    std::vector<std::size_t> rowOrder;
    std::vector<std::size_t> colOrder;
    LaurentPoly lastPivot;
    int sign = 1;
};

namespace detail {

inline LaurentPoly exact_or_throw(const LaurentPoly& p, const LaurentPoly& d) {
    auto q = exact_divide(p, d);
    if (!q) throw ComputationError("Bareiss step produced an inexact division");
    return std::move(*q);
}

// Pivot cost: prefer short, low-degree entries to keep intermediate growth down.
inline std::pair<std::size_t, long> pivot_cost(const LaurentPoly& p) {
    const Monomial lo = p.min_exponents(), hi = p.max_exponents();
    return {p.size(), hi.total_degree() - lo.total_degree()};
}

}  // namespace detail

/// Bareiss elimination in place. With fullPivoting the pivot may come from
/// any remaining column; otherwise only from column k (columns keep order).
/// `stopColumns` limits pivot columns to the first stopColumns columns.
inline Elimination bareiss(PolyMatrix& a, bool fullPivoting = true, std::size_t stopColumns = SIZE_MAX) {
    const std::size_t n = a.rows(), m = a.cols(), pc = std::min(m, stopColumns);
    Elimination e;
    e.rowOrder.resize(n);
    e.colOrder.resize(m);
    for (std::size_t i = 0; i < n; ++i) e.rowOrder[i] = i;
    for (std::size_t j = 0; j < m; ++j) e.colOrder[j] = j;
    LaurentPoly prev(a.variables(), 1);
    for (std::size_t k = 0; k < std::min(n, pc); ++k) {
        std::size_t bi = SIZE_MAX, bj = SIZE_MAX;
        std::pair<std::size_t, long> best{SIZE_MAX, 0};
        const std::size_t jEnd = fullPivoting ? pc : k + 1;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < jEnd; ++j) {
                if (a(i, j).is_zero()) continue;
                const auto c = detail::pivot_cost(a(i, j));
                if (bi == SIZE_MAX || c < best) {
                    best = c;
                    bi = i;
                    bj = j;
                }
            }
        if (bi == SIZE_MAX) break;
        if (bi != k) {
            a.swap_rows(k, bi);
            std::swap(e.rowOrder[k], e.rowOrder[bi]);
            e.sign = -e.sign;
        }
        if (bj != k) {
            a.swap_cols(k, bj);
            std::swap(e.colOrder[k], e.colOrder[bj]);
            e.sign = -e.sign;
        }
        const LaurentPoly pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const LaurentPoly lead = a(i, k);
            for (std::size_t j = k + 1; j < m; ++j) {
                LaurentPoly v = pivot * a(i, j);
                if (!lead.is_zero() && !a(k, j).is_zero()) v -= lead * a(k, j);
                a(i, j) = detail::exact_or_throw(v, prev);
            }
            a(i, k) = LaurentPoly(a.variables());
        }
        prev = pivot;
        e.rank = k + 1;
    }
    e.lastPivot = prev;
    return e;
}

inline LaurentPoly determinant(PolyMatrix a) {
    if (a.rows() != a.cols()) throw DimensionError("determinant of a non-square matrix");
    if (a.rows() == 0) return LaurentPoly(a.variables(), 1);
    const Elimination e = bareiss(a);
    if (e.rank < a.rows()) return LaurentPoly(a.variables());
    return e.sign > 0 ? e.lastPivot : -e.lastPivot;
}

/// Solves a x = det(a) b for square nonsingular a; returns {det(a), x}.
/// The entries of x are the Cramer numerators, so no fractions arise.
inline std::pair<LaurentPoly, std::vector<LaurentPoly>> fraction_free_solve(const PolyMatrix& a,
                                                                             const std::vector<LaurentPoly>& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw DimensionError("fraction_free_solve: shape mismatch");
    PolyMatrix aug(n, n + 1, a.variables());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    const Elimination e = bareiss(aug, false, n);
    if (e.rank < n) throw DomainError("fraction_free_solve: singular matrix");
    const LaurentPoly det = aug(n - 1, n - 1);
    std::vector<LaurentPoly> x(n, LaurentPoly(a.variables()));
    for (std::size_t i = n; i-- > 0;) {
        LaurentPoly acc = det * aug(i, n);
        for (std::size_t j = i + 1; j < n; ++j)
            if (!aug(i, j).is_zero()) acc -= aug(i, j) * x[j];
        x[i] = detail::exact_or_throw(acc, aug(i, i));
    }
    // row swaps only permute equations; det picked up their sign
    if (e.sign < 0) {
        for (auto& v : x) v = -v;
        return {-det, std::move(x)};
    }
    return {det, std::move(x)};
}

inline std::string to_string(const PolyMatrix& a) {
    std::string s;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        s += "[";
        for (std::size_t j = 0; j < a.cols(); ++j) s += (j ? ", " : "") + to_string(a(i, j));
        s += "]\n";
    }
    return s;
}

}  // namespace ribboncheck
