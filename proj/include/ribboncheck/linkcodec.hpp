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
 * @file linkcodec.hpp
 * @brief Link diagram encodings: PD codes, braid words, and the oriented,
 * ordered diagrams built from them.
 *
 * PD convention: X(i,j,k,l) lists the incoming under-edge first and then the
 * other three edges counterclockwise, so the under-strand runs i -> k. The
 * over-strand direction is recovered from the orientation of its strand;
 * X(i,j,k,l) is a positive crossing when the over-strand runs l -> j.
 *
 * Braid convention: strands run upward, positions are numbered 1..n from the
 * left, and the letter +i is a positive crossing in which the strand entering
 * at position i passes over the strand entering at position i+1.
 *
 * Planarity is not checked; virtual inputs still yield a diagram.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace ribboncheck {

struct PDCode {
    std::vector<std::array<int, 4>> crossings;
    friend bool operator==(const PDCode&, const PDCode&) = default;
};

struct BraidWord {
    int strandCount = 1;
    std::vector<int> letters;
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// One crossing of a diagram in terms of Wirtinger arcs.
struct Crossing {
    std::size_t over = 0;
    std::size_t underIn = 0;
    std::size_t underOut = 0;
    int sign = 1;
    friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented, ordered link diagram. Arcs run from one undercrossing to the
/// next; a component without undercrossings is a single arc.
struct LinkDiagram {
    std::vector<Crossing> crossings;
    std::vector<std::size_t> arcComponent;  ///< arc index -> component index
    std::size_t componentCount = 0;
    std::size_t edgeCount = 0;  ///< PD-style edges (crossing-to-crossing segments plus free loops)

    std::size_t arc_count() const noexcept { return arcComponent.size(); }
    std::size_t crossing_count() const noexcept { return crossings.size(); }
    friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

using LinkSpec = std::variant<PDCode, BraidWord>;

/// Throws StructuralError unless the diagram is internally consistent:
/// indices in range, signs +-1, components nonempty, and within each
/// component the underpasses chain the arcs into one cycle.
inline void validate(const LinkDiagram& d) {
    const std::size_t arcs = d.arc_count();
    if (d.componentCount == 0) throw StructuralError("diagram has no components");
    std::vector<std::size_t> arcsPerComponent(d.componentCount, 0);
    for (std::size_t c : d.arcComponent) {
        if (c >= d.componentCount) throw StructuralError("arc assigned to nonexistent component");
        ++arcsPerComponent[c];
    }
    for (std::size_t c = 0; c < d.componentCount; ++c)
        if (arcsPerComponent[c] == 0) throw StructuralError("component " + std::to_string(c) + " has no arcs");

    std::vector<std::optional<std::size_t>> next(arcs);
    std::vector<bool> isOut(arcs, false);
    for (std::size_t k = 0; k < d.crossings.size(); ++k) {
        const auto& x = d.crossings[k];
        if (x.over >= arcs || x.underIn >= arcs || x.underOut >= arcs)
            throw StructuralError("crossing " + std::to_string(k) + " refers to a missing arc");
        if (x.sign != 1 && x.sign != -1) throw StructuralError("crossing sign must be +1 or -1");
        if (d.arcComponent[x.underIn] != d.arcComponent[x.underOut])
            throw StructuralError("under-strand changes component at crossing " + std::to_string(k));
        if (next[x.underIn] || isOut[x.underOut])
            throw StructuralError("arc passes under more than once at its end (crossing " + std::to_string(k) + ")");
        next[x.underIn] = x.underOut;
        isOut[x.underOut] = true;
    }
    std::vector<bool> seen(arcs, false);
    for (std::size_t a = 0; a < arcs; ++a) {
        if (seen[a]) continue;
        const std::size_t comp = d.arcComponent[a];
        if (!next[a]) {
            if (arcsPerComponent[comp] != 1 || isOut[a])
                throw StructuralError("arc " + std::to_string(a) + " does not end at an undercrossing");
            seen[a] = true;
            continue;
        }
        std::size_t len = 0;
        std::size_t cur = a;
        do {
            if (!next[cur] || seen[cur]) throw StructuralError("arcs do not close up into strands");
            seen[cur] = true;
            ++len;
            cur = *next[cur];
        } while (cur != a);
        if (len != arcsPerComponent[comp])
            throw StructuralError("component " + std::to_string(comp) + " is not a single closed strand");
    }
}

namespace detail {

// A crossing given by its four edge labels in PD slot order plus its sign.
struct SlotCrossing {
    std::array<int, 4> labels;
    int sign;
};

inline int over_head_slot(int sign) { return sign > 0 ? 3 : 1; }

// Assembles arcs and components from oriented slot crossings plus free
// loops (components without crossings). Components are ordered by their
// least edge label; arcs are numbered per component in traversal order
// starting from that least label.
inline LinkDiagram assemble(const std::vector<SlotCrossing>& xs, const std::vector<int>& loops) {
    struct End {
        std::size_t crossing;
        int slot;
    };
    std::map<int, End> head, tail;
    for (std::size_t c = 0; c < xs.size(); ++c)
        for (int s = 0; s < 4; ++s) {
            const int label = xs[c].labels[static_cast<std::size_t>(s)];
            const bool entering = s == 0 || s == over_head_slot(xs[c].sign);
            auto& side = entering ? head : tail;
            if (!side.emplace(label, End{c, s}).second)
                throw ArcConsistencyError("edge " + std::to_string(label) + " is oriented inconsistently");
        }
    for (const auto& [label, end] : head)
        if (!tail.count(label)) throw ArcConsistencyError("edge " + std::to_string(label) + " never leaves a crossing");
    for (const auto& [label, end] : tail)
        if (!head.count(label)) throw ArcConsistencyError("edge " + std::to_string(label) + " never enters a crossing");

    std::set<int> loopSet(loops.begin(), loops.end());
    std::set<int> labels(loopSet);
    for (const auto& [label, end] : head) {
        if (loopSet.count(label)) throw ArcConsistencyError("free loop label reused by a crossing");
        labels.insert(label);
    }

    LinkDiagram d;
    d.edgeCount = labels.size();
    std::map<int, std::size_t> edgeArc;
    for (int start : labels) {
        if (edgeArc.count(start)) continue;
        const std::size_t comp = d.componentCount++;
        if (loopSet.count(start)) {
            edgeArc[start] = d.arcComponent.size();
            d.arcComponent.push_back(comp);
            continue;
        }
        std::vector<int> cycle;
        int e = start;
        do {
            cycle.push_back(e);
            const End& h = head.at(e);
            e = xs[h.crossing].labels[static_cast<std::size_t>((h.slot + 2) % 4)];
        } while (e != start);

        const std::size_t firstArc = d.arcComponent.size();
        std::size_t arc = firstArc;
        d.arcComponent.push_back(comp);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            edgeArc[cycle[i]] = arc;
            const bool endsUnder = head.at(cycle[i]).slot == 0;
            if (endsUnder && i + 1 < cycle.size()) {
                arc = d.arcComponent.size();
                d.arcComponent.push_back(comp);
            } else if (!endsUnder && i + 1 == cycle.size() && arc != firstArc) {
                // the last segment runs on into the first one
                for (std::size_t j = i + 1; j-- > 0 && edgeArc[cycle[j]] == arc;) edgeArc[cycle[j]] = firstArc;
                d.arcComponent.pop_back();
            }
        }
    }
    for (const auto& x : xs) {
        Crossing c;
        c.underIn = edgeArc.at(x.labels[0]);
        c.underOut = edgeArc.at(x.labels[2]);
        c.over = edgeArc.at(x.labels[1]);
        c.sign = x.sign;
        if (edgeArc.at(x.labels[3]) != c.over) throw ArcConsistencyError("over-strand is broken at a crossing");
        d.crossings.push_back(c);
    }
    return d;
}

class Cursor {
   public:
    explicit Cursor(std::string_view text, std::size_t offset = 0) : text_(text), offset_(offset) {}

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip();
        return pos_ >= text_.size();
    }
    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    long integer() {
        skip();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (digits == pos_) {
            pos_ = start;
            fail("expected integer");
        }
        if (pos_ - digits > 9) fail("integer too large");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }
    std::size_t position() const { return offset_ + pos_; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, position()); }

   private:
    std::string_view text_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses "X(1,4,2,5);X(3,6,4,1);..." and checks that labels 1..2n each
/// occur exactly twice.
inline PDCode parse_pd(std::string_view text, std::size_t offset = 0) {
    detail::Cursor in(text, offset);
    PDCode pd;
    if (in.done()) in.fail("empty PD code");
    while (!in.done()) {
        if (!in.accept('X') && !in.accept('x')) in.fail("expected 'X('");
        in.expect('(');
        std::array<int, 4> t{};
        for (std::size_t i = 0; i < 4; ++i) {
            if (i > 0 && !in.accept(',')) in.fail("PD tuple must have exactly 4 entries");
            const long v = in.integer();
            if (v <= 0) in.fail("PD labels must be positive");
            t[i] = static_cast<int>(v);
        }
        if (in.peek() == ',') in.fail("PD tuple must have exactly 4 entries");
        in.expect(')');
        pd.crossings.push_back(t);
        if (!in.accept(';')) break;
    }
    if (!in.done()) in.fail("unexpected trailing input");

    const int labels = static_cast<int>(2 * pd.crossings.size());
    std::vector<int> count(static_cast<std::size_t>(labels) + 1, 0);
    for (const auto& t : pd.crossings)
        for (int v : t) {
            if (v > labels)
                throw ArcConsistencyError("label " + std::to_string(v) + " exceeds 2 x crossing count (" +
                                          std::to_string(labels) + ")");
            ++count[static_cast<std::size_t>(v)];
        }
    for (int v = 1; v <= labels; ++v)
        if (count[static_cast<std::size_t>(v)] != 2)
            throw ArcConsistencyError("label " + std::to_string(v) + " occurs " +
                                      std::to_string(count[static_cast<std::size_t>(v)]) + " times, expected 2");
    return pd;
}

/// Parses "n=3: 1 -2 1 -2" (letters separated by spaces or commas).
inline BraidWord parse_braid(std::string_view text, std::size_t offset = 0) {
    detail::Cursor in(text, offset);
    if (!in.accept('n')) in.fail("expected 'n='");
    in.expect('=');
    const long n = in.integer();
    if (n < 1) in.fail("strand count must be at least 1");
    in.expect(':');
    BraidWord b;
    b.strandCount = static_cast<int>(n);
    while (!in.done()) {
        const long v = in.integer();
        if (v == 0 || v >= n || v <= -n)
            throw GeneratorRangeError("braid generator " + std::to_string(v) + " out of range for " +
                                      std::to_string(n) + " strands");
        b.letters.push_back(static_cast<int>(v));
        in.accept(',');
    }
    return b;
}

/// "pd:..." or "braid:n=...".
inline LinkSpec parse_link_spec(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
    const std::string_view body = text.substr(start);
    if (body.rfind("pd:", 0) == 0) return parse_pd(body.substr(3), start + 3);
    if (body.rfind("braid:", 0) == 0) return parse_braid(body.substr(6), start + 6);
    throw ParseError("link spec must start with 'pd:' or 'braid:'", start);
}

inline std::string to_string(const BraidWord& b) {
    std::string s = "braid:n=" + std::to_string(b.strandCount) + ":";
    for (std::size_t i = 0; i < b.letters.size(); ++i) s += (i ? " " : "") + std::to_string(b.letters[i]);
    return s;
}

inline std::string to_string(const PDCode& pd) {
    std::string s = "pd:";
    for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
        const auto& t = pd.crossings[i];
        s += (i ? ";X(" : "X(") + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
             "," + std::to_string(t[3]) + ")";
    }
    return s;
}

/// Orients the strands of a PD code and assembles the diagram. Under-slots fix
/// each strand's direction; a strand that only passes over follows label
/// succession (x exits into x+1, cyclically within the strand).
inline LinkDiagram pd_diagram(const PDCode& pd) {
    if (pd.crossings.empty()) throw DomainError("empty link");
    struct End {
        std::size_t crossing;
        int slot;
        bool operator==(const End&) const = default;
    };
    std::map<int, std::vector<End>> occ;
    for (std::size_t c = 0; c < pd.crossings.size(); ++c)
        for (int s = 0; s < 4; ++s) occ[pd.crossings[c][static_cast<std::size_t>(s)]].push_back({c, s});
    for (const auto& [label, ends] : occ)
        if (ends.size() != 2) throw ArcConsistencyError("label " + std::to_string(label) + " must occur exactly twice");

    auto other = [&](int label, End e) { return occ[label][0] == e ? occ[label][1] : occ[label][0]; };

    std::map<int, End> entering;
    for (const auto& [startLabel, startEnds] : occ) {
        if (entering.count(startLabel)) continue;
        // walk the strand in an arbitrary direction, recording entered ends
        std::vector<std::pair<int, End>> walk;
        int label = startLabel;
        End in = startEnds[0];
        do {
            walk.push_back({label, in});
            const End out{in.crossing, (in.slot + 2) % 4};
            label = pd.crossings[out.crossing][static_cast<std::size_t>(out.slot)];
            in = other(label, out);
        } while (!(label == startLabel && in == startEnds[0]));

        int votes = 0;
        bool conflict = false;
        for (const auto& [l, e] : walk) {
            const int v = e.slot == 0 ? 1 : e.slot == 2 ? -1 : 0;
            if (v != 0 && votes != 0 && v != votes) conflict = true;
            if (v != 0) votes = v;
        }
        if (conflict)
            throw ArcConsistencyError("strand through label " + std::to_string(startLabel) +
                                      " is traversed both ways by its undercrossings");
        bool forward = votes > 0;
        if (votes == 0 && walk.size() > 1) {
            std::vector<int> ls;
            for (const auto& w : walk) ls.push_back(w.first);
            std::sort(ls.begin(), ls.end());
            const auto it = std::upper_bound(ls.begin(), ls.end(), walk[0].first);
            const int succ = it == ls.end() ? ls.front() : *it;
            forward = walk[1].first == succ;
        } else if (votes == 0) {
            forward = true;
        }
        for (const auto& [l, e] : walk) entering[l] = forward ? e : other(l, e);
    }

    std::vector<detail::SlotCrossing> xs;
    for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
        const auto& t = pd.crossings[c];
        const bool overEntersAt1 = entering.at(t[1]) == End{c, 1};
        xs.push_back({t, overEntersAt1 ? -1 : 1});
    }
    return detail::assemble(xs, {});
}

/// Permutation of strand positions induced by the braid, as cycles.
inline std::vector<std::vector<int>> braid_cycles(const BraidWord& b) {
    std::vector<int> at(static_cast<std::size_t>(b.strandCount));  // position -> starting strand
    std::iota(at.begin(), at.end(), 0);
    for (int l : b.letters) {
        const auto i = static_cast<std::size_t>(std::abs(l) - 1);
        std::swap(at[i], at[i + 1]);
    }
    // strand starting at p ends at position end[p]
    std::vector<int> end(at.size());
    for (std::size_t p = 0; p < at.size(); ++p) end[static_cast<std::size_t>(at[p])] = static_cast<int>(p);
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(at.size(), false);
    for (std::size_t p = 0; p < at.size(); ++p) {
        if (seen[p]) continue;
        std::vector<int> cyc;
        for (auto q = p; !seen[q]; q = static_cast<std::size_t>(end[q])) {
            seen[q] = true;
            cyc.push_back(static_cast<int>(q));
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

inline bool closure_is_knot(const BraidWord& b) { return braid_cycles(b).size() == 1; }

/// Closure of a braid. Components are ordered by their least strand position.
inline LinkDiagram braid_closure(const BraidWord& b) {
    const auto n = static_cast<std::size_t>(b.strandCount);
    if (n == 0) throw DomainError("braid needs at least one strand");
    std::vector<std::size_t> last(n, SIZE_MAX);
    for (std::size_t k = 0; k < b.letters.size(); ++k) {
        const auto i = static_cast<std::size_t>(std::abs(b.letters[k]) - 1);
        if (i + 1 >= n) throw GeneratorRangeError("braid generator out of range");
        last[i] = last[i + 1] = k;
    }
    // bottom edges carry labels 1..n so that least label == least position
    std::vector<int> cur(n);
    std::iota(cur.begin(), cur.end(), 1);
    int fresh = static_cast<int>(n);
    auto outgoing = [&](std::size_t pos, std::size_t k) {
        return last[pos] == k ? static_cast<int>(pos) + 1 : ++fresh;
    };
    std::vector<detail::SlotCrossing> xs;
    for (std::size_t k = 0; k < b.letters.size(); ++k) {
        const auto i = static_cast<std::size_t>(std::abs(b.letters[k]) - 1);
        const int left = cur[i], right = cur[i + 1];
        const int outLeft = outgoing(i, k), outRight = outgoing(i + 1, k);
        if (b.letters[k] > 0) {
            // over: bottom-left -> top-right; under: bottom-right -> top-left
            xs.push_back({{right, outRight, outLeft, left}, 1});
        } else {
            // over: bottom-right -> top-left; under: bottom-left -> top-right
            xs.push_back({{left, right, outRight, outLeft}, -1});
        }
        cur[i] = outLeft;
        cur[i + 1] = outRight;
    }
    std::vector<int> loops;
    for (std::size_t p = 0; p < n; ++p)
        if (last[p] == SIZE_MAX) loops.push_back(static_cast<int>(p) + 1);
    return detail::assemble(xs, loops);
}

inline LinkDiagram diagram_from_spec(const LinkSpec& spec) {
    if (const auto* pd = std::get_if<PDCode>(&spec)) return pd_diagram(*pd);
    return braid_closure(std::get<BraidWord>(spec));
}

inline LinkDiagram diagram_from_spec(std::string_view text) { return diagram_from_spec(parse_link_spec(text)); }

/// Half the signed count of crossings between components i and j.
inline long linking_number(const LinkDiagram& d, std::size_t i, std::size_t j) {
    if (i >= d.componentCount || j >= d.componentCount)
        throw DomainError("linking_number: component index out of range");
    if (i == j) throw DomainError("linking_number: components must differ");
    long sum = 0;
    for (const auto& x : d.crossings) {
        const std::size_t a = d.arcComponent[x.over], b = d.arcComponent[x.underIn];
        if ((a == i && b == j) || (a == j && b == i)) sum += x.sign;
    }
    return sum / 2;
}

inline BraidWord mirror(BraidWord b) {
    for (int& l : b.letters) l = -l;
    return b;
}

inline BraidWord reverse(BraidWord b) {
    std::reverse(b.letters.begin(), b.letters.end());
    return b;
}

/// Concordance inverse -K: reversed mirror image.
inline BraidWord concordance_inverse(const BraidWord& b) { return reverse(mirror(b)); }

/// Connected sum of two braids whose closures are knots; b2 is shifted onto
/// strands n1..n1+n2-1 so the two braids share one strand.
inline BraidWord connected_sum(const BraidWord& b1, const BraidWord& b2) {
    if (!closure_is_knot(b1) || !closure_is_knot(b2))
        throw DomainError("connected_sum: both braid closures must be knots");
    BraidWord r{b1.strandCount + b2.strandCount - 1, b1.letters};
    for (int l : b2.letters) r.letters.push_back(l > 0 ? l + b1.strandCount - 1 : l - (b1.strandCount - 1));
    return r;
}

/// Sub-diagram on the given components (renumbered in increasing order).
/// Crossings with a removed component disappear and the arcs passing under
/// them are joined.
inline LinkDiagram sublink(const LinkDiagram& d, const std::vector<std::size_t>& components) {
    std::vector<std::optional<std::size_t>> newComp(d.componentCount);
    std::vector<std::size_t> sorted(components);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) throw DomainError("sublink: no components selected");
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] >= d.componentCount) throw DomainError("sublink: component index out of range");
        newComp[sorted[k]] = k;
    }
    std::vector<std::size_t> parent(d.arc_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::vector<const Crossing*> kept;
    for (const auto& x : d.crossings) {
        const bool underKept = newComp[d.arcComponent[x.underIn]].has_value();
        const bool overKept = newComp[d.arcComponent[x.over]].has_value();
        if (underKept && overKept)
            kept.push_back(&x);
        else if (underKept) {
            const std::size_t a = find(x.underIn), b = find(x.underOut);
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
    LinkDiagram r;
    r.componentCount = sorted.size();
    std::vector<std::optional<std::size_t>> newArc(d.arc_count());
    for (std::size_t a = 0; a < d.arc_count(); ++a) {
        if (!newComp[d.arcComponent[a]]) continue;
        const std::size_t root = find(a);
        if (!newArc[root]) {
            newArc[root] = r.arcComponent.size();
            r.arcComponent.push_back(*newComp[d.arcComponent[a]]);
        }
    }
    // keep components in their new order with arcs grouped per component
    for (const Crossing* x : kept)
        r.crossings.push_back({*newArc[find(x->over)], *newArc[find(x->underIn)], *newArc[find(x->underOut)], x->sign});
    r.edgeCount = 2 * r.crossings.size();
    for (std::size_t c = 0; c < r.componentCount; ++c) {
        bool crosses = false;
        for (const auto& x : r.crossings) crosses = crosses || r.arcComponent[x.over] == c || r.arcComponent[x.underIn] == c;
        if (!crosses) ++r.edgeCount;
    }
    return r;
}

}  // namespace ribboncheck
