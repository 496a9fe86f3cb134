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
 * @file alexander.hpp
 * @brief Rank and torsion order of the module presented by an Alexander
 * matrix, and the end-to-end link -> polynomial pipeline.
 *
 * The polynomial is the gcd of all r x r minors, r the rank over the
 * fraction field. For a module with positive rank (split links) this is the
 * order of the torsion part, so it is never zero.
 */
#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "foxcalc.hpp"
#include "laurent.hpp"
#include "linkcodec.hpp"
#include "polymatrix.hpp"
#include "wirtinger.hpp"

namespace ribboncheck {

struct RankCertificate {
    std::size_t rank = 0;
    std::vector<std::size_t> pivotRows;
    std::vector<std::size_t> pivotColumns;
};

struct Provenance {
    std::string diagramHash;  ///< empty when computed from a bare presentation
    std::size_t generators = 0;
    std::size_t relators = 0;
    std::size_t rank = 0;
};

struct AlexanderPolynomial {
    LaurentPoly value{1, 1};
    std::size_t variables = 1;
    Provenance source;
};

inline RankCertificate module_rank(const PolyMatrix& a) {
    PolyMatrix work = a;
    const Elimination e = bareiss(work);
    RankCertificate c;
    c.rank = e.rank;
    c.pivotRows.assign(e.rowOrder.begin(), e.rowOrder.begin() + static_cast<std::ptrdiff_t>(e.rank));
    c.pivotColumns.assign(e.colOrder.begin(), e.colOrder.begin() + static_cast<std::ptrdiff_t>(e.rank));
    std::sort(c.pivotRows.begin(), c.pivotRows.end());
    std::sort(c.pivotColumns.begin(), c.pivotColumns.end());
    return c;
}

inline RankCertificate module_rank(const AlexanderPresentation& a) { return module_rank(a.matrix); }

namespace detail {

/// Advances a sorted k-subset of {0..n-1} in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    return c;
}

inline bool is_one(const LaurentPoly& p) { return p.size() == 1 && p.leading().coefficient == 1 && p.leading().monomial.is_one(); }

/// Whether `row` of `a` is a Z[Z^m]-combination of the rows of `b`,
/// where b has full row rank with the given pivot columns.
inline bool in_row_span(const PolyMatrix& b, const std::vector<std::size_t>& pivotColumns, const PolyMatrix& a,
                        std::size_t row) {
    const std::size_t r = b.rows();
    std::vector<std::size_t> allRows = first_combination(r);
    const PolyMatrix bt = b.submatrix(allRows, pivotColumns).transposed();
    std::vector<LaurentPoly> rhs;
    for (std::size_t j : pivotColumns) rhs.push_back(a(row, j));
    auto [det, x] = fraction_free_solve(bt, rhs);
    std::vector<LaurentPoly> y;
    for (auto& v : x) {
        auto q = exact_divide(v, det);
        if (!q) return false;
        y.push_back(std::move(*q));
    }
    for (std::size_t j = 0; j < b.cols(); ++j) {
        LaurentPoly s(b.variables());
        for (std::size_t k = 0; k < r; ++k)
            if (!y[k].is_zero() && !b(k, j).is_zero()) s += y[k] * b(k, j);
        if (s != a(row, j)) return false;
    }
    return true;
}

inline constexpr std::size_t kMaxComplement = 3;
inline constexpr std::size_t kMaxMinors = 20000;

}  // namespace detail

/// Canonical gcd of the rank-indexed minors. Dropping the presentation's
/// redundant rows is used only after checking they lie in the span of the
/// remaining rows; otherwise every minor is enumerated.
inline AlexanderPolynomial torsion_order(const AlexanderPresentation& a) {
    const PolyMatrix& mat = a.matrix;
    const std::size_t m = a.variables;
    const RankCertificate cert = module_rank(mat);
    const std::size_t r = cert.rank;
    AlexanderPolynomial out;
    out.variables = m;
    out.value = LaurentPoly(m, 1);
    out.source.generators = mat.cols();
    out.source.relators = mat.rows();
    out.source.rank = r;
    if (r == 0) return out;

    LaurentPoly g(m);
    auto fold = [&](const PolyMatrix& s, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
        const LaurentPoly d = determinant(s.submatrix(rows, cols));
        if (!d.is_zero()) g = gcd(g, d);
        return detail::is_one(g);
    };

    bool done = false;
    if (!a.redundantRows.empty() && mat.rows() - a.redundantRows.size() == r && mat.cols() - r <= detail::kMaxComplement) {
        const PolyMatrix b = mat.without_rows(a.redundantRows);
        const RankCertificate cb = module_rank(b);
        bool spans = cb.rank == r;
        for (std::size_t i = 0; spans && i < a.redundantRows.size(); ++i)
            spans = detail::in_row_span(b, cb.pivotColumns, mat, a.redundantRows[i]);
        if (spans) {
            const std::vector<std::size_t> rows = detail::first_combination(r);
            std::vector<std::size_t> cols = detail::first_combination(r);
            do {
                if (fold(b, rows, cols)) break;
            } while (detail::next_combination(cols, mat.cols()));
            done = true;
        }
    }
    if (!done) {
        std::size_t budget = detail::kMaxMinors;
        std::vector<std::size_t> rows = detail::first_combination(r);
        bool stop = false;
        do {
            std::vector<std::size_t> cols = detail::first_combination(r);
            do {
                if (budget-- == 0) throw ComputationError("too many minors to enumerate");
                stop = fold(mat, rows, cols);
            } while (!stop && detail::next_combination(cols, mat.cols()));
        } while (!stop && detail::next_combination(rows, mat.rows()));
    }
    if (g.is_zero()) throw ComputationError("every rank-sized minor vanished; rank miscounted");
    out.value = canonicalize(g);
    return out;
}

/// 64-bit FNV-1a over the diagram's crossings and component map.
inline std::string diagram_hash(const LinkDiagram& d) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](long long v) {
        for (int i = 0; i < 8; ++i) {
            h ^= static_cast<std::uint64_t>(v >> (8 * i)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    mix(static_cast<long long>(d.componentCount));
    for (std::size_t c : d.arcComponent) mix(static_cast<long long>(c));
    for (const auto& x : d.crossings) {
        mix(static_cast<long long>(x.over));
        mix(static_cast<long long>(x.underIn));
        mix(static_cast<long long>(x.underOut));
        mix(x.sign);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline AlexanderPolynomial alexander_polynomial(const LinkDiagram& d) {
    const auto [p, phi] = wirtinger_presentation(d);
    AlexanderPolynomial a = torsion_order(jacobian(p, phi));
    a.source.diagramHash = diagram_hash(d);
    return a;
}

inline AlexanderPolynomial alexander_polynomial(std::string_view spec) {
    return alexander_polynomial(diagram_from_spec(spec));
}

}  // namespace ribboncheck
