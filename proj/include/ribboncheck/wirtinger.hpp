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
 * @file wirtinger.hpp
 * @brief Wirtinger presentations of link groups and the abelianization onto
 * Z^m sending each meridian to the basis vector of its component.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "linkcodec.hpp"

namespace ribboncheck {

struct Letter {
    std::size_t generator = 0;
    int exponent = 1;  ///< +1 or -1
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using FreeWord = std::vector<Letter>;

inline FreeWord inverse(const FreeWord& w) {
    FreeWord r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->generator, -it->exponent});
    return r;
}

/// Cancels adjacent x x^-1 pairs.
inline FreeWord free_reduce(const FreeWord& w) {
    FreeWord r;
    r.reserve(w.size());
    for (const Letter& l : w) {
        if (!r.empty() && r.back().generator == l.generator && r.back().exponent == -l.exponent)
            r.pop_back();
        else
            r.push_back(l);
    }
    return r;
}

inline FreeWord concat(FreeWord a, const FreeWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return free_reduce(a);
}

struct GroupPresentation {
    std::size_t generatorCount = 0;
    std::vector<FreeWord> relators;
    /// Relators that may be dropped together without changing the normal
    /// closure of the rest. For planar Wirtinger presentations this is one
    /// relator per connected piece of the diagram. Consumers must treat it as
    /// a hint and verify it.
    std::vector<std::size_t> redundantRelators;
};

/// phi: generator -> basis vector e_{componentOf[g]} of Z^m.
struct AbelianizationMap {
    std::vector<std::size_t> componentOf;
    std::size_t componentCount = 1;
};

/// Image of a word in Z^m, as a monomial in t_1..t_m.
inline Monomial apply_phi(const FreeWord& w, const AbelianizationMap& phi) {
    Monomial m(phi.componentCount);
    for (const Letter& l : w) {
        if (l.generator >= phi.componentOf.size()) throw DomainError("apply_phi: generator out of range");
        const std::size_t c = phi.componentOf[l.generator];
        m.set(c, m[c] + l.exponent);
    }
    return m;
}

/// One meridian generator per arc and, for the crossing with over-arc o,
/// under-arcs u -> v and sign e, the relator v (o^e u o^-e)^-1.
inline std::pair<GroupPresentation, AbelianizationMap> wirtinger_presentation(const LinkDiagram& d) {
    validate(d);
    GroupPresentation p;
    p.generatorCount = d.arc_count();
    for (const auto& x : d.crossings) {
        const FreeWord r{{x.underOut, 1}, {x.over, x.sign}, {x.underIn, -1}, {x.over, -x.sign}};
        p.relators.push_back(free_reduce(r));
    }

    // connected pieces of the diagram: arcs joined through shared crossings
    std::vector<std::size_t> parent(d.arc_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& x : d.crossings) {
        parent[find(x.underIn)] = find(x.over);
        parent[find(x.underOut)] = find(x.over);
    }
    std::vector<std::size_t> lastInPiece(d.arc_count(), SIZE_MAX);
    for (std::size_t k = 0; k < d.crossings.size(); ++k) lastInPiece[find(d.crossings[k].over)] = k;
    for (std::size_t k : lastInPiece)
        if (k != SIZE_MAX) p.redundantRelators.push_back(k);
    std::sort(p.redundantRelators.begin(), p.redundantRelators.end());

    AbelianizationMap phi{d.arcComponent, d.componentCount};
    return {std::move(p), std::move(phi)};
}

inline std::string to_string(const FreeWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += "x" + std::to_string(w[i].generator + 1);
        if (w[i].exponent != 1) s += "^" + std::to_string(w[i].exponent);
    }
    return s;
}

/// Debug dump: "< x1, x2, x3 | x3 x1 x2^-1 x1^-1, ... >".
inline std::string to_string(const GroupPresentation& p) {
    std::string s = "<";
    for (std::size_t g = 0; g < p.generatorCount; ++g) s += (g ? ", x" : " x") + std::to_string(g + 1);
    s += " |";
    for (std::size_t r = 0; r < p.relators.size(); ++r) s += (r ? ", " : " ") + to_string(p.relators[r]);
    return s + " >";
}

}  // namespace ribboncheck
