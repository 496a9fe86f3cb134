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
 * @file smith.hpp
 * @brief Smith normal form over Z and finitely generated abelian groups.
 */
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"

namespace ribboncheck {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Nonzero invariant factors d1 | d2 | ... (all positive) of an integer
/// matrix with `cols` columns. Rows must all have that length.
inline std::vector<Integer> smith_diagonal(IntegerMatrix a, std::size_t cols) {
    const std::size_t rows = a.size();
    for (const auto& row : a)
        if (row.size() != cols) throw DimensionError("ragged integer matrix");
    using boost::multiprecision::abs;
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) return diag;
            std::swap(a[t], a[pi]);
            for (auto& row : a) std::swap(row[t], row[pj]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                const Integer q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                const Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // pivot must divide the whole trailing block
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

inline std::size_t integer_rank(const IntegerMatrix& a, std::size_t cols) { return smith_diagonal(a, cols).size(); }

/// Z^freeRank + Z/d1 + ... + Z/dk with d1 | ... | dk, each di >= 2.
struct AbelianGroupInvariants {
    std::size_t freeRank = 0;
    std::vector<Integer> torsionFactors;

    Integer torsion_order() const {
        Integer p = 1;
        for (const auto& d : torsionFactors) p *= d;
        return p;
    }
    friend bool operator==(const AbelianGroupInvariants&, const AbelianGroupInvariants&) = default;
};

/// Group presented by `cols` generators and the rows of `relations`.
inline AbelianGroupInvariants abelian_group(const IntegerMatrix& relations, std::size_t cols) {
    const auto diag = smith_diagonal(relations, cols);
    AbelianGroupInvariants g;
    g.freeRank = cols - diag.size();
    for (const auto& d : diag)
        if (d > 1) g.torsionFactors.push_back(d);
    return g;
}

inline std::string to_string(const AbelianGroupInvariants& g) {
    std::string s;
    auto add = [&](const std::string& part) { s += (s.empty() ? "" : " + ") + part; };
    if (g.freeRank == 1) add("Z");
    if (g.freeRank > 1) add("Z^" + std::to_string(g.freeRank));
    for (const auto& d : g.torsionFactors) add("Z/" + d.str());
    return s.empty() ? "0" : s;
}

}  // namespace ribboncheck
