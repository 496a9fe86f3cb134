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
 * @file foxcalc.hpp
 * @brief Fox free derivatives and the Alexander matrix of a presentation.
 */
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "polymatrix.hpp"
#include "wirtinger.hpp"

namespace ribboncheck {

/// Element of Z[F]: finite Z-combination of reduced words.
class GroupRingElement {
   public:
    GroupRingElement() = default;
    static GroupRingElement word(const FreeWord& w, const Integer& c = 1) {
        GroupRingElement e;
        e.add(w, c);
        return e;
    }

    void add(const FreeWord& w, const Integer& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(free_reduce(w), c);
        if (!fresh && (it->second += c) == 0) terms_.erase(it);
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<FreeWord, Integer>& terms() const noexcept { return terms_; }

    GroupRingElement& operator+=(const GroupRingElement& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    GroupRingElement& operator-=(const GroupRingElement& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }

    /// u * this, for a group element u.
    GroupRingElement left_multiplied(const FreeWord& u) const {
        GroupRingElement r;
        for (const auto& [w, c] : terms_) r.add(concat(u, w), c);
        return r;
    }

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

   private:
    std::map<FreeWord, Integer> terms_;
};

inline LaurentPoly apply_phi(const GroupRingElement& e, const AbelianizationMap& phi) {
    std::vector<Term> terms;
    for (const auto& [w, c] : e.terms()) terms.push_back({apply_phi(w, phi), c});
    return LaurentPoly::from_terms(phi.componentCount, std::move(terms));
}

/// d w / d x_j, from d(uv) = du + u dv, d x_j = 1 and d x_j^-1 = -x_j^-1.
inline GroupRingElement fox_derivative(const FreeWord& w, std::size_t j) {
    GroupRingElement r;
    FreeWord prefix;
    for (const Letter& l : w) {
        if (l.generator == j && l.exponent > 0) r.add(prefix, 1);
        prefix = concat(std::move(prefix), FreeWord{l});
        if (l.generator == j && l.exponent < 0) r.add(prefix, -1);
    }
    return r;
}

inline std::string to_string(const GroupRingElement& e) {
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& [w, c] : e.terms()) {
        const bool neg = c < 0;
        const Integer a = neg ? Integer(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (a != 1) s += a.str() + "*";
        s += "(" + to_string(w) + ")";
    }
    return s;
}

/// Alexander matrix: rows are relators, columns generators.
struct AlexanderPresentation {
    PolyMatrix matrix{0, 0, 1};
    std::size_t variables = 1;
    std::vector<std::size_t> generatorComponent;
    /// Row indices carried over from GroupPresentation::redundantRelators.
    std::vector<std::size_t> redundantRows;
};

/// Entry (i, j) is phi(d r_i / d x_j). Each relator is scanned once,
/// tracking phi of the prefix instead of the prefix word.
inline AlexanderPresentation jacobian(const GroupPresentation& p, const AbelianizationMap& phi) {
    if (phi.componentOf.size() != p.generatorCount)
        throw DimensionError("abelianization map does not cover every generator");
    const std::size_t m = phi.componentCount;
    AlexanderPresentation a;
    a.matrix = PolyMatrix(p.relators.size(), p.generatorCount, m);
    a.variables = m;
    a.generatorComponent = phi.componentOf;
    a.redundantRows = p.redundantRelators;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        std::vector<std::vector<Term>> row(p.generatorCount);
        Monomial prefix(m);
        for (const Letter& l : p.relators[i]) {
            if (l.generator >= p.generatorCount) throw DomainError("relator uses an unknown generator");
            const std::size_t c = phi.componentOf[l.generator];
            if (l.exponent > 0) {
                row[l.generator].push_back({prefix, 1});
                prefix.set(c, prefix[c] + 1);
            } else {
                prefix.set(c, prefix[c] - 1);
                row[l.generator].push_back({prefix, -1});
            }
        }
        for (std::size_t j = 0; j < p.generatorCount; ++j)
            a.matrix(i, j) = LaurentPoly::from_terms(m, std::move(row[j]));
    }
    return a;
}

}  // namespace ribboncheck
