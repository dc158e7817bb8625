#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace trapnet {
namespace {

using testing::fixture;
using testing::fixtures_dir;

std::string describe_all(const std::vector<DiagramViolation>& v) {
    std::string out;
    for (const DiagramViolation& x : v) out += x.diagram + ": " + x.what + "\n" + write_truth_table(x.network);
    return out;
}

TEST(Diagrams, EdgesReferToDeclaredNodes) {
    for (const DiagramSpec& d : all_diagrams()) {
        for (const DiagramEdge& e : d.edges) {
            EXPECT_NO_THROW((void)d.node(e.from)) << d.id << " " << e.from;
            EXPECT_NO_THROW((void)d.node(e.to)) << d.id << " " << e.to;
        }
        for (const Counterexample& c : d.counterexamples) {
            EXPECT_NO_THROW((void)d.node(c.from));
            EXPECT_NO_THROW((void)d.node(c.to));
        }
    }
    EXPECT_THROW((void)symmetric_diagram().node("nope"), std::invalid_argument);
    EXPECT_EQ(describe(DiagramEdge{"SA", "SGA", Guard::trapping}), "SA -> SGA [trapping]");
}

TEST(Diagrams, NoViolationsOnExhaustiveB2) {
    const std::vector<BooleanNetwork> population = exhaustive_population(2);
    for (const DiagramSpec& d : all_diagrams()) {
        const FixtureSet fx = load_diagram_fixtures(d, fixtures_dir());
        const std::vector<DiagramViolation> v = verify_diagram(d, population, fx);
        EXPECT_TRUE(v.empty()) << describe_all(v);
    }
}

TEST(Diagrams, NoViolationsOnSampledAndGeneratedNetworks) {
    std::mt19937_64 rng(89);
    for (int n = 3; n <= 4; ++n) {
        const std::vector<BooleanNetwork> population = sampled_population(n, 150, rng());
        for (const DiagramSpec& d : all_diagrams()) {
            const std::vector<DiagramViolation> v = verify_diagram(d, population, load_diagram_fixtures(d, fixtures_dir()));
            EXPECT_TRUE(v.empty()) << describe_all(v);
        }
    }
}

TEST(Diagrams, EachFixtureReproducesItsFailure) {
    for (const DiagramSpec& d : all_diagrams())
        for (const Counterexample& c : d.counterexamples) {
            const BooleanNetwork f = fixture(d.id + "/" + c.label + ".tt");
            const NetworkProfile p = profile_network(f);
            EXPECT_TRUE(guard_holds(c.guard, p)) << describe(c);
            EXPECT_TRUE(d.node(c.from).holds(p)) << describe(c);
            EXPECT_FALSE(d.node(c.to).holds(p)) << describe(c);
        }
}

TEST(Diagrams, NamedFixtures) {
    const NetworkProfile b = profile_network(fixture("symmetric/b.tt"));
    EXPECT_TRUE(b.graphs.a(GraphProperty::symmetric));
    EXPECT_FALSE(b.graphs.tg(GraphProperty::symmetric));
    const BooleanNetwork d = fixture("marseille/d.tt");
    const ClassReport c = classify_network(d);
    EXPECT_TRUE(c.bijective);
    EXPECT_FALSE(c.involutive);
    EXPECT_EQ(write_truth_table(d).substr(write_truth_table(d).find('\n') + 1), "00 10\n10 11\n01 00\n11 01\n");
}

TEST(Diagrams, BrokenFixtureIsReported) {
    const DiagramSpec d = marseille_diagram();
    FixtureSet fx = load_diagram_fixtures(d, fixtures_dir());
    fx.at("d") = BooleanNetwork::negation(2);
    const std::vector<DiagramViolation> v = verify_counterexamples(d, fx);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].what, "(d) B =/=> I [all]");
}

TEST(Diagrams, MissingFixtureThrows) {
    EXPECT_THROW(load_diagram_fixtures(lille_diagram(), fixtures_dir() / "nowhere"), MissingFixture);
    EXPECT_THROW(verify_counterexamples(lille_diagram(), FixtureSet{}), MissingFixture);
}

TEST(Diagrams, ViolatingPopulationIsCaught) {
    // B -> I without a guard is false; fixture (d) must surface it.
    DiagramSpec d = marseille_diagram();
    d.edges.push_back({"B", "I", Guard::all});
    const std::vector<BooleanNetwork> population{fixture("marseille/d.tt")};
    const std::vector<NetworkProfile> profiles{profile_network(population[0])};
    const std::vector<DiagramViolation> v = verify_diagram_profiles(d, population, profiles);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].what, "B -> I [all]");
}

}  // namespace
}  // namespace trapnet
