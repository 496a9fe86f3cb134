// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ribboncheck/alexander.hpp"
#include "ribboncheck/foxcalc.hpp"
#include "ribboncheck/obstruct.hpp"
#include "ribboncheck/oracles.hpp"
#include "test_support.hpp"

namespace {

using namespace ribboncheck;
using testing::poly;

struct Outcome {
    bool pass = true;
    std::string note;
};

void require(Outcome& o, bool cond, const std::string& what) {
    if (!cond && o.pass) {
        o.pass = false;
        o.note = what;
    }
}

std::vector<LinkDiagram> bundled_diagrams() {
    std::vector<LinkDiagram> ds;
    for (const auto& row : testing::load_table("knots.csv")) {
        ds.push_back(diagram_from_spec(row.at("spec")));
        ds.push_back(diagram_from_spec(row.at("pd")));
    }
    for (const auto& row : testing::load_table("links2.csv")) ds.push_back(diagram_from_spec(row.at("spec")));
    return ds;
}

bool fox_identity(const FreeWord& w, std::size_t generators, const AbelianizationMap& phi) {
    const std::size_t m = phi.componentCount;
    LaurentPoly lhs(m);
    for (std::size_t j = 0; j < generators; ++j)
        lhs += apply_phi(fox_derivative(w, j), phi) *
               (LaurentPoly::variable(m, phi.componentOf[j]) - LaurentPoly(m, 1));
    return lhs == LaurentPoly(apply_phi(w, phi)) - LaurentPoly(m, 1);
}

LaurentPoly delta(const BraidWord& b) { return alexander_polynomial(diagram_from_spec(b)).value; }

Outcome remark_reproduction() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const BraidWord trefoil = parse_braid("n=2:1 1 1"), fig8 = parse_braid("n=3:1 -2 1 -2");
    const LinkDiagram j = diagram_from_spec(connected_sum(trefoil, concordance_inverse(trefoil)));
    const LinkDiagram l = diagram_from_spec(connected_sum(fig8, concordance_inverse(fig8)));
    const auto jl = ribbon_obstruction(j, l), lj = ribbon_obstruction(l, j);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const LaurentPoly p = poly("t^2 - t + 1"), q = poly("t^2 - 3*t + 1");
    require(o, jl.deltaJ.value == p * p, "Delta_J = " + to_string(jl.deltaJ.value));
    require(o, jl.deltaL.value == q * q, "Delta_L = " + to_string(jl.deltaL.value));
    require(o, jl.gcdValue && *jl.gcdValue == poly("1"), "gcd is not 1");
    require(o, jl.verdict == Verdict::Obstructed, "J -> L not obstructed");
    require(o, lj.verdict == Verdict::Obstructed, "L -> J not obstructed");
    require(o, secs < 1.0, "took " + std::to_string(secs) + " s");
    if (o.pass)
        o.note = "Delta_J = " + to_string(jl.deltaJ.value) + ", Delta_L = " + to_string(jl.deltaL.value) +
                 ", both directions obstructed, " + std::to_string(secs) + " s";
    return o;
}

Outcome oracle_agreement() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    int checks = 0;
    for (const auto& row : testing::load_table("knots.csv")) {
        const auto [p, phi] = wirtinger_presentation(diagram_from_spec(row.at("pd")));
        const LaurentPoly d = torsion_order(jacobian(p, phi)).value;
        for (int k : {2, 3, 5}) {
            const Integer cover = reidemeister_schreier(p, phi, k).torsion_order();
            const Integer res = cover_resultant(d, k);
            require(o, cover == res, row.at("name") + " k=" + std::to_string(k) + ": " + cover.str() + " vs " + res.str());
            ++checks;
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(o, secs < 300, "took " + std::to_string(secs) + " s");
    if (o.pass) o.note = std::to_string(checks) + " (knot, k) pairs agree, " + std::to_string(secs) + " s";
    return o;
}

Outcome fox_fundamental_identity() {
    Outcome o;
    int relators = 0;
    for (const auto& d : bundled_diagrams()) {
        const auto [p, phi] = wirtinger_presentation(d);
        for (const auto& r : p.relators) {
            require(o, fox_identity(r, p.generatorCount, phi), "relator " + to_string(r));
            ++relators;
        }
    }
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> gens(1, 6), comps(1, 3), len(0, 40);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int it = 0; it < 500; ++it) {
        const std::size_t g = gens(rng), m = std::min(g, comps(rng));
        AbelianizationMap phi{std::vector<std::size_t>(g), m};
        std::uniform_int_distribution<std::size_t> comp(0, m - 1), gen(0, g - 1);
        for (auto& c : phi.componentOf) c = comp(rng);
        FreeWord w;
        for (std::size_t n = len(rng); n > 0; --n) w.push_back({gen(rng), sign(rng) ? 1 : -1});
        require(o, fox_identity(w, g, phi), "random word " + to_string(w));
    }
    if (o.pass) o.note = std::to_string(relators) + " Wirtinger relators and 500 random words";
    return o;
}

Outcome multiplicativity() {
    Outcome o;
    std::mt19937_64 rng(4);
    for (int it = 0; it < 25; ++it) {
        const BraidWord a = testing::random_knot_braid(rng, 4, 8), b = testing::random_knot_braid(rng, 4, 8);
        require(o, delta(connected_sum(a, b)) == canonicalize(delta(a) * delta(b)), to_string(a) + " # " + to_string(b));
    }
    if (o.pass) o.note = "25 random pairs";
    return o;
}

Outcome symmetry_and_normalization() {
    Outcome o;
    int knots = 0, links = 0;
    for (const auto& row : testing::load_table("knots.csv")) {
        const LaurentPoly d = alexander_polynomial(row.at("spec")).value;
        require(o, canonicalize(invert_variables(d)) == d, row.at("name") + " not symmetric");
        require(o, boost::multiprecision::abs(d.coefficient_sum()) == 1, row.at("name") + ": Delta(1) != +-1");
        ++knots;
    }
    for (const auto& row : testing::load_table("links2.csv")) {
        const LinkDiagram d = diagram_from_spec(row.at("spec"));
        if (linking_number(d, 0, 1) == 0) continue;
        require(o, torres_check(d) == TorresStatus::Passed, row.at("name") + ": Torres check failed");
        ++links;
    }
    if (o.pass) o.note = std::to_string(knots) + " knots, " + std::to_string(links) + " links with nonzero linking";
    return o;
}

Outcome encoding_independence() {
    Outcome o;
    const std::pair<const char*, const char*> pairs[] = {
        {"pd:X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)", "braid:n=2:1 1 1"},
        {"pd:X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)", "braid:n=3:1 -2 1 -2"},
    };
    for (const auto& [pd, braid] : pairs)
        require(o, alexander_polynomial(pd).value == alexander_polynomial(braid).value, std::string(pd) + " vs " + braid);
    if (o.pass) o.note = "trefoil and figure-eight";
    return o;
}

Outcome theorem_consistency() {
    Outcome o;
    std::mt19937_64 rng(7);
    for (int it = 0; it < 25; ++it) {
        const BraidWord k = testing::random_knot_braid(rng, 4, 8), w = testing::random_knot_braid(rng, 4, 8);
        const BraidWord j = connected_sum(k, connected_sum(w, concordance_inverse(w)));
        const auto r = ribbon_obstruction(diagram_from_spec(j), diagram_from_spec(k));
        require(o, r.verdict == Verdict::NotObstructed, to_string(k) + " / " + to_string(w));
    }
    if (o.pass) o.note = "25 random (K, W) pairs not obstructed";
    return o;
}

Outcome split_and_degenerate() {
    Outcome o;
    const auto unlink = alexander_polynomial("braid:n=2:");
    require(o, unlink.value == poly("1", 2), "unlink Delta = " + to_string(unlink.value));
    require(o, unlink.source.rank == 0, "unlink rank " + std::to_string(unlink.source.rank));
    const auto [p, phi] = wirtinger_presentation(diagram_from_spec("braid:n=2:"));
    require(o, module_rank(jacobian(p, phi)).rank == 0, "rank certificate not 0");
    require(o, alexander_polynomial("braid:n=1:").value == poly("1"), "unknot Delta != 1");
    if (o.pass) o.note = "unlink Delta = 1 with r = 0, unknot Delta = 1";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 coprime slice knots obstruct both ways", remark_reproduction},
        {"2 cyclic cover oracle agreement", oracle_agreement},
        {"3 Fox fundamental identity", fox_fundamental_identity},
        {"4 connected sum multiplicativity", multiplicativity},
        {"5 symmetry, normalization, Torres", symmetry_and_normalization},
        {"6 encoding independence", encoding_independence},
        {"7 stabilization is never obstructed", theorem_consistency},
        {"8 split and degenerate links", split_and_degenerate},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.note << std::endl;
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
