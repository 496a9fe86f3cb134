#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "ribboncheck/oracles.hpp"
#include "test_support.hpp"

namespace ribboncheck {
namespace {

using testing::poly;

AbelianGroupInvariants cover_h1(const std::string& spec, int k) {
    const auto [p, phi] = wirtinger_presentation(diagram_from_spec(spec));
    return reidemeister_schreier(p, phi, k);
}

// Floating-point evaluation at roots of unity, used only as a test oracle
// for small values where rounding is unambiguous.
long double numeric_cover_product(const LaurentPoly& delta, int k) {
    std::complex<long double> prod = 1;
    for (int j = 1; j < k; ++j) {
        const long double a = 2 * std::numbers::pi_v<long double> * j / k;
        const std::complex<long double> z(std::cos(a), std::sin(a));
        std::complex<long double> v = 0;
        for (const auto& t : delta.terms()) v += static_cast<long double>(t.coefficient) * std::pow(z, t.monomial[0]);
        prod *= v;
    }
    return std::abs(prod);
}

TEST(ReidemeisterSchreier, Examples) {
    const auto t2 = cover_h1("braid:n=2:1 1 1", 2);
    EXPECT_EQ(t2.freeRank, 1u);
    EXPECT_EQ(t2.torsionFactors, (std::vector<Integer>{3}));
    const auto t3 = cover_h1("braid:n=2:1 1 1", 3);
    EXPECT_EQ(t3.freeRank, 1u);
    EXPECT_EQ(t3.torsion_order(), 4);
    EXPECT_EQ(t3.torsionFactors, (std::vector<Integer>{2, 2}));
    const auto f2 = cover_h1("braid:n=3:1 -2 1 -2", 2);
    EXPECT_EQ(f2.freeRank, 1u);
    EXPECT_EQ(f2.torsionFactors, (std::vector<Integer>{5}));
    for (int k : {2, 3, 7}) {
        const auto u = cover_h1("braid:n=1:", k);
        EXPECT_EQ(u.freeRank, 1u);
        EXPECT_TRUE(u.torsionFactors.empty());
    }
}

TEST(ReidemeisterSchreier, Errors) {
    const auto [p, phi] = wirtinger_presentation(diagram_from_spec("braid:n=2:1 1"));
    EXPECT_THROW(reidemeister_schreier(p, phi, 2), UnsupportedError);
    const auto [q, psi] = wirtinger_presentation(diagram_from_spec("braid:n=2:1 1 1"));
    EXPECT_THROW(reidemeister_schreier(q, psi, 1), DomainError);
}

TEST(ReidemeisterSchreier, EulerCharacteristicBookkeeping) {
    for (const auto& row : testing::load_table("knots.csv")) {
        const auto [p, phi] = wirtinger_presentation(diagram_from_spec(row.at("spec")));
        for (int k : {2, 3, 5}) {
            const SchreierPresentation s = schreier_rewrite(p, phi, k);
            const long g = static_cast<long>(p.generatorCount), r = static_cast<long>(p.relators.size());
            EXPECT_EQ(static_cast<long>(s.presentation.generatorCount) - static_cast<long>(s.presentation.relators.size()),
                      k * (g - r));
            EXPECT_EQ(s.treeGenerators.size(), static_cast<std::size_t>(k - 1));
        }
    }
}

TEST(ReidemeisterSchreier, TwoFoldCoverMatchesPublishedDeterminant) {
    for (const auto& row : testing::load_table("knots.csv"))
        EXPECT_EQ(cover_h1(row.at("spec"), 2).torsion_order(), Integer(row.at("determinant"))) << row.at("name");
}

TEST(Resultant, Examples) {
    EXPECT_EQ(cover_resultant(poly("t^2 - t + 1"), 2), 3);
    EXPECT_EQ(cover_resultant(poly("t^2 - t + 1"), 3), 4);
    EXPECT_EQ(cover_resultant(poly("t^2 - 3*t + 1"), 2), 5);
    EXPECT_EQ(cover_resultant(poly("1"), 5), 1);
    EXPECT_EQ(cover_resultant(poly("t^2 + t + 1"), 3), 0);
    EXPECT_EQ(resultant({-1, 1}, {1, 1}), 2);  // Res(t - 1, t + 1) = (1 + 1)
    EXPECT_THROW(cover_resultant(poly("t"), 1), DomainError);
}

TEST(Resultant, AgreesWithNumericEvaluation) {
    for (const auto& row : testing::load_table("knots.csv")) {
        const LaurentPoly d = canonicalize(poly(row.at("alexander")));
        for (int k : {2, 3, 4, 5, 6}) {
            const Integer r = cover_resultant(d, k);
            EXPECT_EQ(r, Integer(std::llround(numeric_cover_product(d, k)))) << row.at("name") << " k=" << k;
        }
    }
}

TEST(CyclicCoverCheck, Examples) {
    const auto trefoil = alexander_polynomial("braid:n=2:1 1 1");
    EXPECT_TRUE(cyclic_cover_check(trefoil, 3, cover_h1("braid:n=2:1 1 1", 3)));
    EXPECT_TRUE(cyclic_cover_check(trefoil, 2, cover_h1("braid:n=2:1 1 1", 2)));
    EXPECT_FALSE(cyclic_cover_check(trefoil, 2, cover_h1("braid:n=3:1 -2 1 -2", 2)));
    const auto unknot = alexander_polynomial("braid:n=1:");
    EXPECT_TRUE(cyclic_cover_check(unknot, 4, cover_h1("braid:n=1:", 4)));
    EXPECT_THROW(cyclic_cover_check(alexander_polynomial("braid:n=2:1 1"), 2, {}), DomainError);
}

TEST(CyclicCoverCheck, AllTableKnots) {
    for (const auto& row : testing::load_table("knots.csv")) {
        const LinkDiagram d = diagram_from_spec(row.at("pd"));
        for (const auto& r : run_oracles(d, {2, 3, 5})) {
            EXPECT_TRUE(r.pass) << row.at("name") << " k=" << r.k << " " << r.detail;
            // free part is exactly Z
            EXPECT_EQ(r.detail.rfind("H1 = Z", 0), 0u) << row.at("name") << " " << r.detail;
            EXPECT_EQ(r.detail.find("Z^"), std::string::npos) << row.at("name") << " " << r.detail;
        }
    }
}

TEST(Torres, Examples) {
    EXPECT_EQ(torres_check(diagram_from_spec("braid:n=2:1 1")), TorresStatus::Passed);
    EXPECT_EQ(torres_check(diagram_from_spec("braid:n=2:")), TorresStatus::Degenerate);
    EXPECT_EQ(torres_check(diagram_from_spec("braid:n=2:1 1 1 1")), TorresStatus::Passed);
    EXPECT_THROW(torres_check(diagram_from_spec("braid:n=2:1 1 1")), DomainError);
}

TEST(Torres, AllTableLinksWithNonzeroLinking) {
    int checked = 0;
    for (const auto& row : testing::load_table("links2.csv")) {
        const LinkDiagram d = diagram_from_spec(row.at("spec"));
        const TorresStatus s = torres_check(d);
        if (std::stol(row.at("linking")) == 0) {
            EXPECT_EQ(s, TorresStatus::Degenerate) << row.at("name");
            continue;
        }
        EXPECT_EQ(s, TorresStatus::Passed) << row.at("name");
        ++checked;
    }
    EXPECT_GT(checked, 15);
}

TEST(Torres, DetectsWrongPolynomial) {
    // a knotted first component changes the right-hand side
    const LinkDiagram d = diagram_from_spec("braid:n=3:1 1 1 2 2");
    ASSERT_EQ(d.componentCount, 2u);
    EXPECT_EQ(torres_check(d), TorresStatus::Passed);
}

}  // namespace
}  // namespace ribboncheck
