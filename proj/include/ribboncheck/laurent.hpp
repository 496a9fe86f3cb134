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
 * @file laurent.hpp
 * @brief Sparse exact arithmetic in Z[t1^{+-1}, ..., tm^{+-1}].
 *
 * Terms are kept sorted by the graded-lexicographic order (total degree
 * first, then lexicographic on the exponent vector), leading term first.
 * Units of the ring are exactly the signed monomials, so divisibility and
 * gcd are "up to units"; canonicalize() picks one representative per class.
 */
#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace ribboncheck {

using Integer = boost::multiprecision::cpp_int;

/// t1^{a1} ... tm^{am}; exponents may be negative.
class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::size_t variables) : exponents_(variables, 0) {}
    explicit Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) { recount(); }
    Monomial(std::initializer_list<int> exponents) : exponents_(exponents) { recount(); }

    static Monomial variable(std::size_t variables, std::size_t index, int power = 1) {
        Monomial m(variables);
        m.exponents_.at(index) = power;
        m.degree_ = power;
        return m;
    }

    std::size_t variables() const noexcept { return exponents_.size(); }
    int operator[](std::size_t i) const { return exponents_[i]; }
    std::span<const int> exponents() const noexcept { return exponents_; }
    long total_degree() const noexcept { return degree_; }
    bool is_one() const noexcept {
        return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
    }

    void set(std::size_t i, int e) {
        degree_ += e - exponents_[i];
        exponents_[i] = e;
    }

    Monomial& operator*=(const Monomial& o) {
        for (std::size_t i = 0; i < exponents_.size(); ++i) exponents_[i] += o.exponents_[i];
        degree_ += o.degree_;
        return *this;
    }
    Monomial& operator/=(const Monomial& o) {
        for (std::size_t i = 0; i < exponents_.size(); ++i) exponents_[i] -= o.exponents_[i];
        degree_ -= o.degree_;
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
    friend Monomial operator/(Monomial a, const Monomial& b) { return a /= b; }
    Monomial inverse() const {
        Monomial m(variables());
        return m /= *this;
    }
    bool nonnegative() const noexcept {
        return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e >= 0; });
    }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.exponents_ == b.exponents_;
    }
    /// Graded-lexicographic order.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
        if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
        return std::lexicographical_compare_three_way(a.exponents_.begin(), a.exponents_.end(),
                                                      b.exponents_.begin(), b.exponents_.end());
    }

   private:
    void recount() { degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0L); }

    std::vector<int> exponents_;
    long degree_ = 0;
};

struct Term {
    Monomial monomial;
    Integer coefficient;
};

class LaurentPoly {
   public:
    /// The zero polynomial in `variables` indeterminates.
    explicit LaurentPoly(std::size_t variables = 1) : variables_(variables) {
        if (variables == 0) throw DimensionError("Laurent ring needs at least one variable");
    }
    LaurentPoly(std::size_t variables, const Integer& constant) : LaurentPoly(variables) {
        if (constant != 0) terms_.push_back({Monomial(variables), constant});
    }
    explicit LaurentPoly(const Monomial& m, const Integer& coefficient = 1) : LaurentPoly(m.variables()) {
        if (coefficient != 0) terms_.push_back({m, coefficient});
    }

    /// Builds a polynomial from unsorted terms; repeated monomials are summed.
    static LaurentPoly from_terms(std::size_t variables, std::vector<Term> terms) {
        LaurentPoly p(variables);
        for (const auto& t : terms)
            if (t.monomial.variables() != variables)
                throw DimensionError("monomial length does not match variable count");
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }
    static LaurentPoly variable(std::size_t variables, std::size_t index) {
        return LaurentPoly(Monomial::variable(variables, index));
    }

    std::size_t variables() const noexcept { return variables_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    const Term& leading() const { return terms_.front(); }

    bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
    /// Units of Z[Z^m] are +-monomials.
    bool is_unit() const {
        return terms_.size() == 1 && (terms_[0].coefficient == 1 || terms_[0].coefficient == -1);
    }
    Integer constant_value() const {
        for (const auto& t : terms_)
            if (t.monomial.is_one()) return t.coefficient;
        return 0;
    }

    Monomial min_exponents() const {
        Monomial m(variables_);
        if (is_zero()) return m;
        for (std::size_t i = 0; i < variables_; ++i) {
            int lo = terms_[0].monomial[i];
            for (const auto& t : terms_) lo = std::min(lo, t.monomial[i]);
            m.set(i, lo);
        }
        return m;
    }
    Monomial max_exponents() const {
        Monomial m(variables_);
        if (is_zero()) return m;
        for (std::size_t i = 0; i < variables_; ++i) {
            int hi = terms_[0].monomial[i];
            for (const auto& t : terms_) hi = std::max(hi, t.monomial[i]);
            m.set(i, hi);
        }
        return m;
    }
    bool depends_on(std::size_t var) const {
        return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.monomial[var] != 0; });
    }

    /// Multiplication by a unit monomial; preserves the term order.
    LaurentPoly shifted(const Monomial& m) const {
        check(m.variables());
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.monomial *= m;
        return r;
    }

    /// Value at t1 = ... = tm = 1.
    Integer coefficient_sum() const {
        Integer s = 0;
        for (const auto& t : terms_) s += t.coefficient;
        return s;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.coefficient = -t.coefficient;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = combine(*this, o, 1); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = combine(*this, o, -1); }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = multiply(*this, o); }
    LaurentPoly& operator*=(const Integer& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.coefficient *= c;
        return *this;
    }
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, 1); }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, -1); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return multiply(a, b); }
    friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
    friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.variables_ != b.variables_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].coefficient != b.terms_[i].coefficient ||
                a.terms_[i].monomial != b.terms_[i].monomial)
                return false;
        return true;
    }

    /// this -= c * m * d, used by exact division.
    void subtract_multiple(const LaurentPoly& d, const Monomial& m, const Integer& c) {
        std::vector<Term> out;
        out.reserve(terms_.size() + d.terms_.size());
        auto i = terms_.begin();
        auto j = d.terms_.begin();
        while (i != terms_.end() || j != d.terms_.end()) {
            if (j == d.terms_.end()) {
                out.push_back(std::move(*i++));
                continue;
            }
            Monomial mj = j->monomial * m;
            if (i == terms_.end() || mj > i->monomial) {
                out.push_back({std::move(mj), -(c * j->coefficient)});
                ++j;
            } else if (mj == i->monomial) {
                Integer v = i->coefficient - c * j->coefficient;
                if (v != 0) out.push_back({std::move(mj), std::move(v)});
                ++i;
                ++j;
            } else {
                out.push_back(std::move(*i++));
            }
        }
        terms_ = std::move(out);
    }

   private:
    void check(std::size_t other) const {
        if (other != variables_)
            throw DimensionError("variable count mismatch: " + std::to_string(variables_) + " vs " +
                                 std::to_string(other));
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().monomial == t.monomial)
                out.back().coefficient += t.coefficient;
            else
                out.push_back(std::move(t));
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coefficient == 0; }),
                  out.end());
        terms_ = std::move(out);
    }

    static LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, int sign) {
        a.check(b.variables_);
        LaurentPoly r(a.variables_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->monomial > j->monomial)) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->monomial > i->monomial) {
                r.terms_.push_back({j->monomial, sign * j->coefficient});
                ++j;
            } else {
                Integer v = i->coefficient + sign * j->coefficient;
                if (v != 0) r.terms_.push_back({i->monomial, std::move(v)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    static LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) {
        a.check(b.variables_);
        if (a.is_zero() || b.is_zero()) return LaurentPoly(a.variables_);
        const LaurentPoly& big = a.size() >= b.size() ? a : b;
        const LaurentPoly& small = a.size() >= b.size() ? b : a;
        if (small.size() == 1) {
            LaurentPoly r = big;
            for (auto& t : r.terms_) {
                t.monomial *= small.terms_[0].monomial;
                t.coefficient *= small.terms_[0].coefficient;
            }
            return r;
        }
        std::vector<Term> prods;
        prods.reserve(a.size() * b.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) prods.push_back({x.monomial * y.monomial, x.coefficient * y.coefficient});
        return from_terms(a.variables_, std::move(prods));
    }

    std::size_t variables_;
    std::vector<Term> terms_;  // graded-lex descending, nonzero coefficients
};

// ---------------------------------------------------------------------------
// Normal forms, divisibility, gcd
// ---------------------------------------------------------------------------

/// Unit-shifted representative: every variable has minimum exponent 0 and the
/// graded-lex leading coefficient is positive.
inline LaurentPoly canonicalize(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly r = p.shifted(p.min_exponents().inverse());
    return r.leading().coefficient < 0 ? -r : r;
}

inline bool is_canonical(const LaurentPoly& p) { return canonicalize(p) == p; }

/// p and q generate the same principal ideal.
inline bool associates(const LaurentPoly& p, const LaurentPoly& q) { return canonicalize(p) == canonicalize(q); }

inline Integer content(const LaurentPoly& p) {
    Integer g = 0;
    for (const auto& t : p.terms()) {
        g = boost::multiprecision::gcd(g, t.coefficient);
        if (g == 1) break;
    }
    return g;
}

namespace detail {

// Exact division of ordinary polynomials (all exponents >= 0) by leading-term
// elimination in graded-lex order.
inline std::optional<LaurentPoly> divide_polynomial(const LaurentPoly& p, const LaurentPoly& d) {
    const std::size_t m = p.variables();
    if (p.is_zero()) return LaurentPoly(m);
    const Monomial pmax = p.max_exponents();
    const Monomial dmax = d.max_exponents();
    for (std::size_t i = 0; i < m; ++i)
        if (pmax[i] < dmax[i]) return std::nullopt;

    const Term& lead = d.leading();
    std::vector<Term> quotient;
    LaurentPoly rem = p;
    Integer qc, r;
    while (!rem.is_zero()) {
        const Term& lt = rem.leading();
        Monomial qm = lt.monomial / lead.monomial;
        if (!qm.nonnegative()) return std::nullopt;
        boost::multiprecision::divide_qr(lt.coefficient, lead.coefficient, qc, r);
        if (r != 0) return std::nullopt;
        rem.subtract_multiple(d, qm, qc);
        quotient.push_back({std::move(qm), qc});
    }
    return LaurentPoly::from_terms(m, std::move(quotient));
}

}  // namespace detail

/// Returns q with d * q == p, or nullopt when d does not divide p in the
/// Laurent ring. Throws DomainError for d == 0.
inline std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& d) {
    if (p.variables() != d.variables()) throw DimensionError("exact_divide: variable count mismatch");
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    if (p.is_zero()) return LaurentPoly(p.variables());
    if (d.size() == 1) {
        // division by a single term only needs the coefficients to divide
        LaurentPoly q = p.shifted(d.leading().monomial.inverse());
        std::vector<Term> terms(q.terms().begin(), q.terms().end());
        Integer qc, r;
        for (auto& t : terms) {
            boost::multiprecision::divide_qr(t.coefficient, d.leading().coefficient, qc, r);
            if (r != 0) return std::nullopt;
            t.coefficient = qc;
        }
        return LaurentPoly::from_terms(p.variables(), std::move(terms));
    }
    const Monomial pmin = p.min_exponents();
    const Monomial dmin = d.min_exponents();
    auto q = detail::divide_polynomial(p.shifted(pmin.inverse()), d.shifted(dmin.inverse()));
    if (!q) return std::nullopt;
    return q->shifted(pmin / dmin);
}

/// d | p in Z[Z^m]. divides(d, 0) is true; divides(0, p) holds only for p == 0.
inline bool divides(const LaurentPoly& d, const LaurentPoly& p) {
    if (p.variables() != d.variables()) throw DimensionError("divides: variable count mismatch");
    if (d.is_zero()) return p.is_zero();
    return exact_divide(p, d).has_value();
}

namespace detail {

// Polynomial in one distinguished variable with coefficients in the
// subring of the remaining (lower-indexed) variables; index = degree.
using Univariate = std::vector<LaurentPoly>;

inline Univariate split_by_variable(const LaurentPoly& p, std::size_t var) {
    const std::size_t m = p.variables();
    int top = 0;
    for (const auto& t : p.terms()) top = std::max(top, t.monomial[var]);
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(top) + 1);
    for (const auto& t : p.terms()) {
        Monomial mono = t.monomial;
        const int e = mono[var];
        mono.set(var, 0);
        buckets[static_cast<std::size_t>(e)].push_back({std::move(mono), t.coefficient});
    }
    Univariate u;
    u.reserve(buckets.size());
    for (auto& b : buckets) u.push_back(LaurentPoly::from_terms(m, std::move(b)));
    return u;
}

inline LaurentPoly join_by_variable(const Univariate& u, std::size_t var, std::size_t m) {
    std::vector<Term> terms;
    for (std::size_t e = 0; e < u.size(); ++e)
        for (const auto& t : u[e].terms()) {
            Monomial mono = t.monomial;
            mono.set(var, static_cast<int>(e));
            terms.push_back({std::move(mono), t.coefficient});
        }
    return LaurentPoly::from_terms(m, std::move(terms));
}

inline void trim(Univariate& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

inline LaurentPoly exact_quotient(const LaurentPoly& p, const LaurentPoly& d) {
    auto q = exact_divide(p, d);
    if (!q) throw ComputationError("expected exact division failed in gcd");
    return std::move(*q);
}

inline LaurentPoly power(const LaurentPoly& base, long e) {
    LaurentPoly r(base.variables(), 1);
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

// lc(B)^(deg A - deg B + 1) * A mod B
inline Univariate pseudo_remainder(Univariate a, const Univariate& b) {
    const std::size_t db = b.size() - 1;
    const LaurentPoly& lcb = b.back();
    long pending = static_cast<long>(a.size()) - static_cast<long>(db);
    while (!a.empty() && a.size() - 1 >= db) {
        const LaurentPoly lca = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= lcb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= lca * b[i];
        trim(a);
        --pending;
    }
    if (pending > 0) {
        const LaurentPoly f = power(lcb, pending);
        for (auto& c : a) c *= f;
    }
    return a;
}

inline LaurentPoly gcd_recursive(const LaurentPoly& a, const LaurentPoly& b, std::size_t level);

inline LaurentPoly content_recursive(const Univariate& u, std::size_t level) {
    LaurentPoly g(u.front().variables());
    for (const auto& c : u) {
        if (c.is_zero()) continue;
        g = gcd_recursive(g, c, level);
        if (g.is_unit() && g.is_constant()) break;
    }
    return g;
}

inline Univariate primitive(Univariate u, const LaurentPoly& c) {
    for (auto& x : u)
        if (!x.is_zero()) x = exact_quotient(x, c);
    return u;
}

// Subresultant PRS for primitive inputs; returns the primitive gcd.
inline Univariate subresultant_gcd(Univariate a, Univariate b, std::size_t level) {
    if (a.size() < b.size()) std::swap(a, b);
    const std::size_t m = a.front().variables();
    LaurentPoly g(m, 1), h(m, 1);
    for (;;) {
        const long delta = static_cast<long>(a.size()) - static_cast<long>(b.size());
        Univariate r = pseudo_remainder(a, b);
        if (r.empty()) break;
        if (r.size() == 1) return Univariate{LaurentPoly(m, 1)};
        a = std::move(b);
        const LaurentPoly divisor = g * power(h, delta);
        for (auto& c : r)
            if (!c.is_zero()) c = exact_quotient(c, divisor);
        b = std::move(r);
        g = a.back();
        if (delta > 0) h = exact_quotient(power(g, delta), power(h, delta - 1));
    }
    return primitive(b, content_recursive(b, level));
}

// gcd in Z[t_0, ..., t_{level-1}] of polynomials with nonnegative exponents.
inline LaurentPoly gcd_recursive(const LaurentPoly& a, const LaurentPoly& b, std::size_t level) {
    const std::size_t m = a.variables();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (level == 0) return LaurentPoly(m, boost::multiprecision::gcd(a.constant_value(), b.constant_value()));
    const std::size_t var = level - 1;
    if (!a.depends_on(var) && !b.depends_on(var)) return gcd_recursive(a, b, level - 1);

    Univariate ua = split_by_variable(a, var);
    Univariate ub = split_by_variable(b, var);
    const LaurentPoly ca = content_recursive(ua, level - 1);
    const LaurentPoly cb = content_recursive(ub, level - 1);
    const LaurentPoly c = gcd_recursive(ca, cb, level - 1);
    if (ua.size() == 1 || ub.size() == 1) return c;
    Univariate g = subresultant_gcd(primitive(std::move(ua), ca), primitive(std::move(ub), cb), level - 1);
    return c * join_by_variable(g, var, m);
}

}  // namespace detail

/// Greatest common divisor up to units, in canonical form. Integer content is
/// part of the result (gcd(2t - 2, 4) = 2).
inline LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.variables() != q.variables()) throw DimensionError("gcd: variable count mismatch");
    if (p.is_zero()) return canonicalize(q);
    if (q.is_zero()) return canonicalize(p);
    const LaurentPoly a = p.shifted(p.min_exponents().inverse());
    const LaurentPoly b = q.shifted(q.min_exponents().inverse());
    return canonicalize(detail::gcd_recursive(a, b, p.variables()));
}

// ---------------------------------------------------------------------------
// Substitutions
// ---------------------------------------------------------------------------

/// t_i -> t_i^{-1} for every variable.
inline LaurentPoly invert_variables(const LaurentPoly& p) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) terms.push_back({t.monomial.inverse(), t.coefficient});
    return LaurentPoly::from_terms(p.variables(), std::move(terms));
}

/// Sets t_var = 1 and removes the variable. A one-variable polynomial
/// collapses to a constant, still in one variable.
inline LaurentPoly specialize_to_one(const LaurentPoly& p, std::size_t var) {
    if (var >= p.variables()) throw DimensionError("specialize_to_one: variable index out of range");
    const std::size_t m = p.variables();
    if (m == 1) return LaurentPoly(1, p.coefficient_sum());
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        std::vector<int> e;
        e.reserve(m - 1);
        for (std::size_t i = 0; i < m; ++i)
            if (i != var) e.push_back(t.monomial[i]);
        terms.push_back({Monomial(std::move(e)), t.coefficient});
    }
    return LaurentPoly::from_terms(m - 1, std::move(terms));
}

/// Re-embeds p into a ring with more variables (new ones appended, unused).
inline LaurentPoly extend_variables(const LaurentPoly& p, std::size_t variables) {
    if (variables < p.variables()) throw DimensionError("extend_variables: cannot drop variables");
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        std::vector<int> e(t.monomial.exponents().begin(), t.monomial.exponents().end());
        e.resize(variables, 0);
        terms.push_back({Monomial(std::move(e)), t.coefficient});
    }
    return LaurentPoly::from_terms(variables, std::move(terms));
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

inline std::string variable_name(std::size_t variables, std::size_t index) {
    return variables == 1 ? std::string("t") : "t" + std::to_string(index + 1);
}

inline std::string to_string(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.variables(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += variable_name(m.variables(), i);
        if (m[i] != 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

/// "t^2 - 3*t + 1", "t1*t2 - t1 - t2 + 1"; terms in graded-lex descending order.
inline std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool negative = t.coefficient < 0;
        const Integer mag = negative ? Integer(-t.coefficient) : t.coefficient;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        if (t.monomial.is_one())
            s += mag.str();
        else if (mag == 1)
            s += to_string(t.monomial);
        else
            s += mag.str() + "*" + to_string(t.monomial);
    }
    return s;
}

namespace detail {

class PolyParser {
   public:
    PolyParser(std::string_view text, std::size_t variables) : text_(text), variables_(variables) {}

    LaurentPoly parse() {
        std::vector<Term> terms;
        skip();
        if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
        bool firstTerm = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!firstTerm) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            firstTerm = false;
            terms.push_back(term(sign));
            skip();
        }
        return LaurentPoly::from_terms(variables_, std::move(terms));
    }

   private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Integer integer() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    int exponent() {
        skip();
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
            skip();
        }
        const std::size_t at = pos_;
        Integer e = integer();
        if (e > 1'000'000) throw ParseError("exponent too large", at);
        return sign * e.convert_to<int>();
    }

    Term term(int sign) {
        Term t{Monomial(variables_), Integer(sign)};
        for (;;) {
            skip();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                t.coefficient *= integer();
            } else if (peek() == 't') {
                const std::size_t at = pos_++;
                std::size_t index = 0;
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    Integer k = integer();
                    if (k < 1 || k > variables_) throw ParseError("unknown variable", at);
                    index = k.convert_to<std::size_t>() - 1;
                } else if (variables_ != 1) {
                    throw ParseError("bare 't' needs a one-variable ring", at);
                }
                skip();
                int e = 1;
                if (peek() == '^') {
                    ++pos_;
                    e = exponent();
                }
                t.monomial.set(index, t.monomial[index] + e);
            } else {
                throw ParseError("expected coefficient or variable", pos_);
            }
            skip();
            if (peek() != '*') break;
            ++pos_;
        }
        return t;
    }

    std::string_view text_;
    std::size_t variables_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the text format above. Also accepts negative exponents, explicit
/// coefficients anywhere in a product, and arbitrary whitespace.
inline LaurentPoly parse_laurent(std::string_view text, std::size_t variables) {
    return detail::PolyParser(text, variables).parse();
}

}  // namespace ribboncheck
