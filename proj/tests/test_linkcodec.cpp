#include <gtest/gtest.h>

#include <random>
#include <string>

#include "ribboncheck/linkcodec.hpp"
#include "test_support.hpp"

namespace ribboncheck {
namespace {

constexpr const char* kTrefoilPD = "pd:X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)";

int crossing_count_from_name(const std::string& name) { return std::stoi(name.substr(0, name.find('_'))); }

TEST(ParsePD, TrefoilShape) {
    const LinkDiagram d = diagram_from_spec(kTrefoilPD);
    EXPECT_EQ(d.crossing_count(), 3u);
    EXPECT_EQ(d.componentCount, 1u);
    EXPECT_EQ(d.arc_count(), 3u);
    EXPECT_EQ(d.edgeCount, 6u);
    for (const auto& x : d.crossings) EXPECT_EQ(x.sign, d.crossings.front().sign);
}

TEST(ParsePD, WhitespaceAndRoundTrip) {
    const PDCode pd = parse_pd("X(1, 4, 2, 5) ; X(3,6,4,1);X(5,2,6,3)");
    ASSERT_EQ(pd.crossings.size(), 3u);
    EXPECT_EQ(std::get<PDCode>(parse_link_spec(to_string(pd))), pd);
}

TEST(ParsePD, OneCrossingKinkIsValid) {
    const LinkDiagram d = diagram_from_spec("pd:X(1,1,2,2)");
    EXPECT_EQ(d.componentCount, 1u);
    EXPECT_EQ(d.crossing_count(), 1u);
}

TEST(ParsePD, MalformedTupleIsParseError) {
    EXPECT_THROW(parse_link_spec("pd:X(1,2,3)"), ParseError);
    EXPECT_THROW(parse_link_spec("pd:X(1,2,3,4"), ParseError);
    EXPECT_THROW(parse_link_spec("pd:Y(1,2,3,4)"), ParseError);
    EXPECT_THROW(parse_link_spec("knot:3_1"), ParseError);
}

TEST(ParsePD, LabelMultiplicityIsArcConsistencyError) {
    EXPECT_THROW(diagram_from_spec("pd:X(1,1,2,3)"), ArcConsistencyError);
    EXPECT_THROW(diagram_from_spec("pd:X(1,4,2,5);X(3,6,4,1);X(5,2,6,7)"), ArcConsistencyError);
}

TEST(ParsePD, ErrorsAreInputErrors) {
    EXPECT_THROW(diagram_from_spec("pd:X(1,1,2,3)"), InputError);
    EXPECT_THROW(diagram_from_spec("pd:X(1,2)"), InputError);
    EXPECT_THROW(diagram_from_spec("braid:n=2:2"), InputError);
}

TEST(ParsePD, ParseErrorReportsPosition) {
    try {
        parse_link_spec("pd:X(1,2,3)");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
    }
}

TEST(ParseBraid, Examples) {
    const BraidWord b = parse_braid("n=3: 1 -2 1 -2");
    EXPECT_EQ(b.strandCount, 3);
    EXPECT_EQ(b.letters, (std::vector<int>{1, -2, 1, -2}));
    EXPECT_EQ(std::get<BraidWord>(parse_link_spec(to_string(b))), b);
    EXPECT_TRUE(parse_braid("n=2:").letters.empty());
    EXPECT_THROW(parse_braid("n=2:2"), GeneratorRangeError);
    EXPECT_THROW(parse_braid("n=3:0"), GeneratorRangeError);
    EXPECT_THROW(parse_braid("n=x:1"), ParseError);
}

TEST(BraidClosure, Trefoil) {
    const LinkDiagram d = diagram_from_spec("braid:n=2:1 1 1");
    EXPECT_EQ(d.componentCount, 1u);
    EXPECT_EQ(d.crossing_count(), 3u);
    EXPECT_EQ(d.arc_count(), 3u);
    for (const auto& x : d.crossings) EXPECT_EQ(x.sign, 1);
}

TEST(BraidClosure, EmptyBraidIsUnlink) {
    const LinkDiagram d = diagram_from_spec("braid:n=2:");
    EXPECT_EQ(d.componentCount, 2u);
    EXPECT_EQ(d.crossing_count(), 0u);
    EXPECT_EQ(d.arc_count(), 2u);
}

TEST(LinkingNumber, HopfAndTorusLinks) {
    EXPECT_EQ(linking_number(diagram_from_spec("braid:n=2:1 1"), 0, 1), 1);
    EXPECT_EQ(linking_number(diagram_from_spec("braid:n=2:-1 -1"), 0, 1), -1);
    EXPECT_EQ(linking_number(diagram_from_spec("braid:n=2:1 1 1 1"), 0, 1), 2);
    EXPECT_EQ(linking_number(diagram_from_spec("braid:n=2:"), 0, 1), 0);
    EXPECT_THROW(linking_number(diagram_from_spec("braid:n=2:1 1"), 0, 0), DomainError);
    EXPECT_THROW(linking_number(diagram_from_spec("braid:n=2:1 1"), 0, 2), DomainError);
}

TEST(LinkingNumber, AgreesWithLinkTable) {
    for (const auto& row : testing::load_table("links2.csv")) {
        const LinkDiagram d = diagram_from_spec(row.at("spec"));
        ASSERT_EQ(d.componentCount, 2u) << row.at("name");
        // component orientation conventions may differ, so compare magnitudes
        EXPECT_EQ(std::abs(linking_number(d, 0, 1)), std::abs(std::stol(row.at("linking")))) << row.at("name");
    }
}

TEST(KnotTable, BothEncodingsParse) {
    const auto rows = testing::load_table("knots.csv");
    ASSERT_GE(rows.size(), 80u);
    for (const auto& row : rows) {
        const LinkDiagram fromPD = diagram_from_spec(row.at("pd"));
        const LinkDiagram fromBraid = diagram_from_spec(row.at("spec"));
        EXPECT_EQ(fromPD.componentCount, 1u) << row.at("name");
        EXPECT_EQ(fromBraid.componentCount, 1u) << row.at("name");
        EXPECT_EQ(fromPD.crossing_count(), static_cast<std::size_t>(crossing_count_from_name(row.at("name"))));
        EXPECT_NO_THROW(validate(fromPD));
    }
}

TEST(Sublink, DropsCrossingsWithRemovedComponents) {
    const LinkDiagram hopf = diagram_from_spec("braid:n=2:1 1");
    const LinkDiagram k = sublink(hopf, {0});
    EXPECT_EQ(k.componentCount, 1u);
    EXPECT_EQ(k.crossing_count(), 0u);
    EXPECT_EQ(k.arc_count(), 1u);
    EXPECT_THROW(sublink(hopf, {}), DomainError);
    EXPECT_THROW(sublink(hopf, {2}), DomainError);
}

TEST(Sublink, KeepsSelfCrossings) {
    // 7_1-like strand (component 0) linked with a second strand
    const LinkDiagram d = diagram_from_spec("braid:n=3:1 1 1 2 2");
    ASSERT_EQ(d.componentCount, 2u);
    for (std::size_t c = 0; c < 2; ++c) {
        const LinkDiagram s = sublink(d, {c});
        EXPECT_NO_THROW(validate(s));
        EXPECT_EQ(s.componentCount, 1u);
    }
}

TEST(BraidOps, ConnectedSumAndInverse) {
    const BraidWord t = parse_braid("n=2:1 1 1");
    const BraidWord f = parse_braid("n=3:1 -2 1 -2");
    const BraidWord s = connected_sum(t, f);
    EXPECT_EQ(s.strandCount, 4);
    EXPECT_TRUE(closure_is_knot(s));
    EXPECT_EQ(diagram_from_spec(s).crossing_count(), 7u);
    EXPECT_EQ(concordance_inverse(t).letters, (std::vector<int>{-1, -1, -1}));
    EXPECT_EQ(mirror(mirror(f)), f);
    EXPECT_EQ(reverse(reverse(f)), f);
    EXPECT_THROW(connected_sum(parse_braid("n=2:1 1"), t), DomainError);
}

TEST(BraidOps, ShiftConstruction) {
    const BraidWord s = connected_sum(parse_braid("n=2:1 1 1"), parse_braid("n=3:1 -2 1 -2"));
    EXPECT_EQ(s, (BraidWord{4, {1, 1, 1, 2, -3, 2, -3}}));
    EXPECT_EQ(connected_sum(parse_braid("n=2:1 1 1"), parse_braid("n=1:")), (BraidWord{2, {1, 1, 1}}));
    EXPECT_EQ(reverse(BraidWord{3, {1, -2}}).letters, (std::vector<int>{-2, 1}));
    EXPECT_EQ(mirror(BraidWord{2, {1, 1, 1}}).letters, (std::vector<int>{-1, -1, -1}));
}

TEST(BraidClosure, HopfLink) {
    const LinkDiagram d = diagram_from_spec("braid:n=2:1 1");
    EXPECT_EQ(d.componentCount, 2u);
    EXPECT_EQ(d.crossing_count(), 2u);
    // each component passes under once, so it is a single arc
    EXPECT_EQ(d.arcComponent, (std::vector<std::size_t>{0, 1}));
}

TEST(BraidProperties, ComponentsArePermutationCycles) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const BraidWord b = testing::random_braid(rng, 5, 14);
        const LinkDiagram d = diagram_from_spec(b);
        EXPECT_EQ(d.componentCount, braid_cycles(b).size()) << to_string(b);
        EXPECT_NO_THROW(validate(d)) << to_string(b);
    }
}

TEST(BraidProperties, EdgeAndArcCounts) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        const BraidWord b = testing::random_braid(rng, 5, 14);
        const LinkDiagram d = diagram_from_spec(b);
        std::size_t freeLoops = 0;
        for (std::size_t c = 0; c < d.componentCount; ++c) {
            bool crosses = false;
            for (const auto& x : d.crossings) crosses |= d.arcComponent[x.underIn] == c || d.arcComponent[x.over] == c;
            if (!crosses) ++freeLoops;
        }
        EXPECT_EQ(d.edgeCount, 2 * d.crossing_count() + freeLoops) << to_string(b);
        // each arc ends at exactly one undercrossing unless it is a closed loop
        std::size_t loopArcs = 0;
        for (std::size_t c = 0; c < d.componentCount; ++c) {
            bool under = false;
            for (const auto& x : d.crossings) under |= d.arcComponent[x.underIn] == c;
            if (!under) ++loopArcs;
        }
        EXPECT_EQ(d.arc_count(), d.crossing_count() + loopArcs) << to_string(b);
    }
}

TEST(BraidProperties, LinkingNumberSymmetricAndOddUnderMirror) {
    std::mt19937_64 rng(13);
    int checked = 0;
    while (checked < 100) {
        const BraidWord b = testing::random_braid(rng, 4, 12);
        const LinkDiagram d = diagram_from_spec(b);
        if (d.componentCount < 2) continue;
        const LinkDiagram m = diagram_from_spec(mirror(b));
        for (std::size_t i = 0; i < d.componentCount; ++i)
            for (std::size_t j = i + 1; j < d.componentCount; ++j) {
                EXPECT_EQ(linking_number(d, i, j), linking_number(d, j, i));
                EXPECT_EQ(linking_number(m, i, j), -linking_number(d, i, j));
            }
        ++checked;
    }
}

TEST(BraidProperties, PDRoundTripThroughDiagram) {
    // braid closures of table knots agree in crossing count with the letters
    for (const auto& row : testing::load_table("knots.csv")) {
        const BraidWord b = std::get<BraidWord>(parse_link_spec(row.at("spec")));
        EXPECT_EQ(diagram_from_spec(b).crossing_count(), b.letters.size());
    }
}

}  // namespace
}  // namespace ribboncheck
