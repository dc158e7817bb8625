#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"

namespace trapnet {
namespace {

using testing::cfg;
using testing::cube;
using testing::pairs;

TEST(RandomNetwork, DeterministicAndCovering) {
    EXPECT_EQ(random_network(2, 99), random_network(2, 99));
    EXPECT_EQ(random_network(3, 5).size(), 8u);
    std::set<std::vector<Word>> seen;
    for (std::uint64_t s = 0; s < 200; ++s) {
        const BooleanNetwork f = random_network(1, s);
        seen.insert(std::vector<Word>(f.table().begin(), f.table().end()));
    }
    EXPECT_EQ(seen.size(), 4u);
}

Arrangement crossed_faces() { return Arrangement(3, {cube("**0"), cube("1**")}); }

TEST(Arrangement, DerivedParts) {
    const Arrangement a = crossed_faces();
    EXPECT_EQ(a.y(), cube("1*0"));
    EXPECT_EQ(a.content().count(), 6u);
    EXPECT_FALSE(a.content().contains(cfg("001").bits));
    EXPECT_EQ(a.free_dims(), mask_of(3, {2}));
    EXPECT_THROW(Arrangement(3, {cube("**0"), cube("**1")}), std::invalid_argument);
    EXPECT_THROW(Arrangement(3, {}), std::invalid_argument);
}

TEST(ArrangementNetwork, CrossedFacesGiveThreeNetworks) {
    const Arrangement a = crossed_faces();
    auto with = [&](Behavior b) { return arrangement_network(a, FreeDimBehavior::uniform(a, b)); };
    EXPECT_EQ(with(Behavior::const0), pairs(3, {{"000", "100"}, {"100", "100"}, {"010", "100"}, {"110", "100"},
                                                {"001", "001"}, {"101", "100"}, {"011", "011"}, {"111", "100"}}));
    EXPECT_EQ(with(Behavior::negate), pairs(3, {{"000", "110"}, {"100", "110"}, {"010", "100"}, {"110", "100"},
                                                {"001", "001"}, {"101", "110"}, {"011", "011"}, {"111", "100"}}));
    EXPECT_EQ(with(Behavior::const1), pairs(3, {{"000", "110"}, {"100", "110"}, {"010", "110"}, {"110", "110"},
                                                {"001", "001"}, {"101", "110"}, {"011", "011"}, {"111", "110"}}));
    const HypercubeGraph g = build_graph(with(Behavior::negate), GraphKind::asynchronous);
    EXPECT_TRUE(g.has_arc(cfg("000").bits, cfg("010").bits));
    EXPECT_TRUE(g.has_arc(cfg("010").bits, cfg("000").bits));
    EXPECT_TRUE(g.has_arc(cfg("101").bits, cfg("100").bits));
    EXPECT_FALSE(g.has_arc(cfg("100").bits, cfg("101").bits));
}

TEST(ArrangementNetwork, SingleSubcubeNegationAndErrors) {
    const Arrangement x(3, {cube("1**")});
    EXPECT_EQ(arrangement_network(x, FreeDimBehavior::uniform(x, Behavior::negate)),
              negation_on_subcubes(3, {cube("1**")}));
    const Arrangement whole(1, {Subcube::full(1)});
    EXPECT_EQ(arrangement_network(whole, FreeDimBehavior::uniform(whole, Behavior::negate)), BooleanNetwork::negation(1));
    EXPECT_THROW(arrangement_network(x, FreeDimBehavior{}), std::invalid_argument);
}

TEST(ArrangementNetwork, BehaviorsMustMatchFreeDimensions) {
    // Content {00, 10, 01} has no free dimension.
    const Arrangement a(2, {cube("*0"), cube("0*")});
    EXPECT_EQ(a.free_dims().bits, 0u);
    FreeDimBehavior b;
    b.by_coordinate[1] = Behavior::negate;
    EXPECT_THROW(arrangement_network(a, b), std::invalid_argument);
    EXPECT_EQ(arrangement_network(a, FreeDimBehavior{}), pairs(2, {{"00", "00"}, {"10", "00"}, {"01", "00"}, {"11", "11"}}));
}

TEST(NegationOnSubcubes, Examples) {
    EXPECT_EQ(negation_on_subcubes(3, {Subcube::full(3)}), BooleanNetwork::negation(3));
    EXPECT_EQ(negation_on_subcubes(3, {}), BooleanNetwork::identity(3));
    const BooleanNetwork f = negation_on_subcubes(3, {cube("**0"), cube("*01")});
    EXPECT_TRUE(graph_property(build_graph(f, GraphKind::asynchronous), GraphProperty::symmetric));
    EXPECT_TRUE(classify_network(f).marseille);
    EXPECT_THROW(negation_on_subcubes(3, {cube("**0"), cube("1**")}), std::invalid_argument);
}

TEST(ConstantOnArrangements, Examples) {
    const Configuration t = cfg("011");
    EXPECT_EQ(constant_on_arrangements(3, {{Arrangement(3, {Subcube::full(3)}), t}}),
              BooleanNetwork::from_function(3, [&](Word) { return t.bits; }));
    EXPECT_EQ(constant_on_arrangements(3, {}), BooleanNetwork::identity(3));
    const BooleanNetwork f = constant_on_arrangements(
        3, {{Arrangement(3, {cube("01*"), cube("*10")}), cfg("010")}, {Arrangement(3, {cube("1*1"), cube("*01")}), cfg("101")}});
    for (Word x = 0; x < f.size(); ++x) {
        EXPECT_TRUE(f.raw(x) == cfg("010").bits || f.raw(x) == cfg("101").bits || f.raw(x) == x);
    }
    const ClassReport c = classify_network(f);
    EXPECT_TRUE(c.idempotent);
    EXPECT_TRUE(c.lille);
    EXPECT_TRUE(graph_property(build_graph(f, GraphKind::asynchronous), GraphProperty::oriented));
    EXPECT_THROW(constant_on_arrangements(3, {{Arrangement(3, {cube("01*")}), cfg("111")}}), std::invalid_argument);
    EXPECT_THROW(constant_on_arrangements(3, {{Arrangement(3, {cube("01*")}), cfg("010")},
                                              {Arrangement(3, {cube("*11")}), cfg("111")}}),
                 std::invalid_argument);
}

TEST(UnionDisjoint, Examples) {
    const BooleanNetwork a = negation_on_subcubes(3, {cube("00*")});
    const BooleanNetwork b = negation_on_subcubes(3, {cube("11*")});
    const BooleanNetwork u = union_disjoint({a, b});
    EXPECT_EQ(u, negation_on_subcubes(3, {cube("00*"), cube("11*")}));
    EXPECT_TRUE(classify_network(u).marseille);
    EXPECT_EQ(union_disjoint({a}), a);
    const HypercubeGraph ga = build_graph(a, GraphKind::asynchronous);
    const HypercubeGraph gb = build_graph(b, GraphKind::asynchronous);
    const HypercubeGraph gu = build_graph(u, GraphKind::asynchronous);
    for (Word x = 0; x < u.size(); ++x) {
        VertexSet s = ga.out(x);
        s |= gb.out(x);
        EXPECT_EQ(s, gu.out(x));
    }
    EXPECT_THROW(union_disjoint({a, negation_on_subcubes(3, {cube("0**")})}), std::invalid_argument);
    EXPECT_THROW(union_disjoint({}), std::invalid_argument);
}

TEST(UnionDisjoint, ArrangementPartsAreCommutative) {
    const Arrangement a = crossed_faces();
    const Arrangement rest(3, {cube("0*1")});
    for (Behavior b : {Behavior::const0, Behavior::const1, Behavior::negate}) {
        const BooleanNetwork p1 = arrangement_network(a, FreeDimBehavior::uniform(a, b));
        const BooleanNetwork p2 = arrangement_network(rest, FreeDimBehavior::uniform(rest, b));
        EXPECT_TRUE(classify_network(union_disjoint({p1, p2})).commutative);
    }
}

TEST(LongTransient, ChainAndDynamics) {
    const BooleanNetwork f = long_transient_trapping(4);
    const std::vector<const char*> chain{"0101", "1010", "1101", "1110", "1111"};
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) EXPECT_EQ(f(cfg(chain[i])), cfg(chain[i + 1]));
    EXPECT_EQ(f(cfg("1111")), cfg("1111"));
    EXPECT_EQ(f(cfg("0000")), cfg("0001"));
    EXPECT_EQ(f(cfg("0001")), cfg("0000"));
    const TransientPeriod tp = transient_and_period(f);
    EXPECT_EQ(tp.transient, 4u);
    EXPECT_EQ(tp.period, 2u);
    for (int n = 3; n <= 8; ++n) {
        const BooleanNetwork g = long_transient_trapping(n);
        EXPECT_TRUE(classify_network(g).trapping) << n;
        EXPECT_EQ(transient_and_period(g).transient, static_cast<unsigned>(n));
        EXPECT_EQ(transient_and_period(g).period, 2u);
    }
    EXPECT_THROW(long_transient_trapping(2), std::invalid_argument);
}

TEST(RandomStructured, OutputsHaveTheirClasses) {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + trial % 5;
        const BooleanNetwork c = random_commutative(n, rng(), 1 + trial % 3);
        const ClassReport rc = classify_network(c);
        ASSERT_TRUE(rc.commutative) << write_truth_table(c);
        ASSERT_TRUE(is_convex(principal_trapspaces(c)));
        const BooleanNetwork m = random_negation_on_subcubes(n, rng());
        ASSERT_TRUE(classify_network(m).marseille);
        ASSERT_TRUE(graph_property(build_graph(m, GraphKind::asynchronous), GraphProperty::symmetric));
        const BooleanNetwork l = random_constant_on_arrangements(n, rng());
        ASSERT_TRUE(classify_network(l).lille) << write_truth_table(l);
        ASSERT_TRUE(graph_property(build_graph(l, GraphKind::asynchronous), GraphProperty::oriented));
    }
    EXPECT_EQ(random_commutative(4, 12, 2), random_commutative(4, 12, 2));
    EXPECT_THROW(random_commutative(3, 1, 0), std::invalid_argument);
}

std::set<BooleanNetwork> commutative_census() {
    std::set<BooleanNetwork> out;
    for (const BooleanNetwork& f : exhaustive_population(2))
        if (classify_network(f).commutative) out.insert(f);
    return out;
}

TEST(RandomStructured, CommutativeSamplesLieInTheCensus) {
    const std::set<BooleanNetwork> census = commutative_census();
    for (std::uint64_t s = 0; s < 500; ++s) ASSERT_TRUE(census.count(random_commutative(2, s, 1 + s % 3)));
}

// Every arrangement network on B^2 with its content, then all unions over
// pairwise disjoint contents.
TEST(RandomStructured, UnionsOfArrangementNetworksAreExactlyCommutativeOnB2) {
    std::vector<Subcube> cubes;
    detail::for_each_subcube(2, [&](const Subcube& c) { cubes.push_back(c); });
    std::vector<std::pair<BooleanNetwork, Word>> pieces;
    for (std::uint32_t pick = 1; pick < (1u << cubes.size()); ++pick) {
        std::vector<Subcube> members;
        for (std::size_t i = 0; i < cubes.size(); ++i)
            if ((pick >> i) & 1u) members.push_back(cubes[i]);
        std::optional<Arrangement> a;
        try {
            a.emplace(2, members);
        } catch (const std::invalid_argument&) {
            continue;
        }
        std::vector<int> free;
        for (int i = 1; i <= 2; ++i)
            if (a->free_dims().test(i)) free.push_back(i);
        int combos = 1;
        for (std::size_t k = 0; k < free.size(); ++k) combos *= 3;
        Word content = 0;
        a->content().for_each([&](Word x) { content |= Word{1} << x; });
        for (int code = 0; code < combos; ++code) {
            FreeDimBehavior b;
            int rest = code;
            for (int i : free) {
                b.by_coordinate[i] = static_cast<Behavior>(rest % 3);
                rest /= 3;
            }
            try {
                pieces.emplace_back(arrangement_network(*a, b), content);
            } catch (const ValidationFailed&) {
            }
        }
    }
    std::set<BooleanNetwork> reached{BooleanNetwork::identity(2)};
    std::vector<std::pair<BooleanNetwork, Word>> frontier{{BooleanNetwork::identity(2), 0}};
    std::set<std::pair<BooleanNetwork, Word>> visited(frontier.begin(), frontier.end());
    while (!frontier.empty()) {
        const auto [f, used] = frontier.back();
        frontier.pop_back();
        for (const auto& [p, content] : pieces) {
            if (content & used) continue;
            std::vector<Word> image(f.table().begin(), f.table().end());
            for (Word x = 0; x < 4; ++x)
                if ((content >> x) & 1u) image[x] = p.raw(x);
            const BooleanNetwork g(2, std::move(image));
            if (visited.insert({g, used | content}).second) {
                reached.insert(g);
                frontier.emplace_back(g, used | content);
            }
        }
    }
    EXPECT_EQ(reached, commutative_census());
}

}  // namespace
}  // namespace trapnet
