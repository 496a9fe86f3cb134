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
 * @file oracles.hpp
 * @brief Checks of computed Alexander polynomials that do not go through
 * the Fox Jacobian: homology of finite cyclic covers via Reidemeister-Schreier
 * rewriting, and the Torres condition for 2-component links.
 *
 * For a knot with polynomial D and the k-fold cyclic cover of its exterior,
 * H_1 = Z + T with |T| = |Res(D, 1 + t + ... + t^(k-1))| whenever that
 * resultant is nonzero. The torsion part agrees with H_1 of the k-fold
 * branched cover.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "alexander.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "linkcodec.hpp"
#include "smith.hpp"
#include "wirtinger.hpp"

namespace ribboncheck {

/// Presentation of the index-k subgroup ker(G -> Z -> Z/k) on the Schreier
/// generators s_{i,j} = x_0^i x_j x_0^-(i+1 mod k), numbered i * g + j.
struct SchreierPresentation {
    std::size_t sheets = 0;
    GroupPresentation presentation;
    /// s_{i,0} for i < k - 1; these are trivial (the transversal's tree).
    std::vector<std::size_t> treeGenerators;
};

inline SchreierPresentation schreier_rewrite(const GroupPresentation& p, const AbelianizationMap& phi, int k) {
    if (phi.componentCount != 1) throw UnsupportedError("cyclic covers are implemented for knots only");
    if (k < 2) throw DomainError("cover degree must be at least 2");
    if (p.generatorCount == 0) throw DomainError("presentation has no generators");
    const std::size_t g = p.generatorCount, sheets = static_cast<std::size_t>(k);
    SchreierPresentation s;
    s.sheets = sheets;
    s.presentation.generatorCount = sheets * g;
    for (std::size_t i = 0; i + 1 < sheets; ++i) s.treeGenerators.push_back(i * g);
    for (const auto& r : p.relators) {
        for (std::size_t start = 0; start < sheets; ++start) {
            FreeWord w;
            std::size_t c = start;
            for (const Letter& l : r) {
                if (l.generator >= g) throw DomainError("relator uses an unknown generator");
                if (l.exponent > 0) {
                    w.push_back({c * g + l.generator, 1});
                    c = (c + 1) % sheets;
                } else {
                    c = (c + sheets - 1) % sheets;
                    w.push_back({c * g + l.generator, -1});
                }
            }
            if (c != start) throw DomainError("relator does not lie in the kernel of the abelianization");
            s.presentation.relators.push_back(std::move(w));
        }
    }
    return s;
}

/// Abelian invariants of the group of a Schreier presentation, with the tree
/// generators set to 1.
inline AbelianGroupInvariants abelianize(const SchreierPresentation& s) {
    const std::size_t n = s.presentation.generatorCount;
    std::vector<std::size_t> column(n, SIZE_MAX);
    std::size_t cols = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(s.treeGenerators.begin(), s.treeGenerators.end(), i) == s.treeGenerators.end()) column[i] = cols++;
    IntegerMatrix m;
    for (const auto& r : s.presentation.relators) {
        std::vector<Integer> row(cols, 0);
        for (const Letter& l : r)
            if (column[l.generator] != SIZE_MAX) row[column[l.generator]] += l.exponent;
        m.push_back(std::move(row));
    }
    return abelian_group(m, cols);
}

/// H_1 of the k-fold cyclic cover of a knot exterior.
inline AbelianGroupInvariants reidemeister_schreier(const GroupPresentation& p, const AbelianizationMap& phi, int k) {
    return abelianize(schreier_rewrite(p, phi, k));
}

/// Fraction-free integer determinant.
inline Integer integer_determinant(IntegerMatrix a) {
    const std::size_t n = a.size();
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return n == 0 ? Integer(1) : sign * a[n - 1][n - 1];
}

/// Dense coefficients c_0..c_d of p * t^-minexp, for a one-variable p.
inline std::vector<Integer> dense_coefficients(const LaurentPoly& p) {
    if (p.variables() != 1) throw DimensionError("expected a one-variable polynomial");
    if (p.is_zero()) return {};
    const int lo = p.min_exponents()[0], hi = p.max_exponents()[0];
    std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1), 0);
    for (const auto& t : p.terms()) c[static_cast<std::size_t>(t.monomial[0] - lo)] = t.coefficient;
    return c;
}

/// Resultant of two integer polynomials given by dense coefficients
/// (constant term first), as the determinant of their Sylvester matrix.
inline Integer resultant(const std::vector<Integer>& f, const std::vector<Integer>& g) {
    if (f.empty() || g.empty()) return 0;
    const std::size_t a = f.size() - 1, b = g.size() - 1, n = a + b;
    if (n == 0) return 1;
    IntegerMatrix s(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j <= a; ++j) s[i][i + j] = f[a - j];
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j <= b; ++j) s[b + i][i + j] = g[b - j];
    return integer_determinant(std::move(s));
}

/// |prod_{j=1}^{k-1} D(zeta^j)|, zeta a primitive k-th root of unity.
inline Integer cover_resultant(const LaurentPoly& delta, int k) {
    if (k < 2) throw DomainError("cover degree must be at least 2");
    const std::vector<Integer> phi(static_cast<std::size_t>(k), 1);
    return boost::multiprecision::abs(resultant(dense_coefficients(delta), phi));
}

inline bool cyclic_cover_check(const AlexanderPolynomial& delta, int k, const AbelianGroupInvariants& g) {
    if (delta.variables != 1) throw DomainError("cyclic cover check needs a knot polynomial");
    return cover_resultant(delta.value, k) == g.torsion_order();
}

enum class TorresStatus { Passed, Failed, Degenerate };

inline std::string to_string(TorresStatus s) {
    switch (s) {
        case TorresStatus::Passed: return "passed";
        case TorresStatus::Failed: return "failed";
        case TorresStatus::Degenerate: return "degenerate";
    }
    return "?";
}

/// D_L(t, 1) = (t^l - 1)/(t - 1) * D_{L1}(t) up to units, l the linking
/// number and L1 the first component. l = 0 is reported as Degenerate.
inline TorresStatus torres_check(const LinkDiagram& d) {
    if (d.componentCount != 2) throw DomainError("Torres check needs a 2-component link");
    const long l = linking_number(d, 0, 1);
    if (l == 0) return TorresStatus::Degenerate;
    LaurentPoly lhs(1), rhs(1);
    try {
        lhs = specialize_to_one(alexander_polynomial(d).value, 1);
        LaurentPoly factor(1);
        for (long e = 0; e < std::abs(l); ++e) factor += LaurentPoly(Monomial({static_cast<int>(e)}));
        rhs = factor * alexander_polynomial(sublink(d, {0})).value;
    } catch (const ComputationError&) {
        throw;
    } catch (const Error& e) {
        throw ComputationError(std::string("Torres check: ") + e.what());
    }
    return associates(lhs, rhs) ? TorresStatus::Passed : TorresStatus::Failed;
}

struct OracleResult {
    std::string kind;  ///< "cyclic_cover" or "torres"
    int k = 0;         ///< cover degree, 0 for torres
    bool pass = false;
    std::string detail;
};

/// Cyclic cover checks at each k for knots, the Torres check for
/// 2-component links; nothing for other links.
inline std::vector<OracleResult> run_oracles(const LinkDiagram& d, const std::vector<int>& ks = {2, 3, 5}) {
    std::vector<OracleResult> out;
    if (d.componentCount == 1) {
        const auto [p, phi] = wirtinger_presentation(d);
        const AlexanderPolynomial delta = torsion_order(jacobian(p, phi));
        for (int k : ks) {
            const AbelianGroupInvariants h = reidemeister_schreier(p, phi, k);
            const Integer res = cover_resultant(delta.value, k);
            out.push_back({"cyclic_cover", k, cyclic_cover_check(delta, k, h),
                           "H1 = " + to_string(h) + ", |resultant| = " + res.str()});
        }
    } else if (d.componentCount == 2) {
        const TorresStatus s = torres_check(d);
        out.push_back({"torres", 0, s != TorresStatus::Failed, to_string(s)});
    }
    return out;
}

}  // namespace ribboncheck
