#include <gtest/gtest.h>

#include <map>

#include "test_support.hpp"

namespace trapnet {
namespace {

using testing::fixtures_dir;
using testing::pairs;

std::map<std::string, int> count_by_check(const VerifyResult& r) {
    std::map<std::string, int> out;
    for (const Violation& v : r.violations) ++out[v.suite + ": " + v.check];
    return out;
}

TEST(Populations, Shapes) {
    EXPECT_EQ(exhaustive_population(1).size(), 4u);
    EXPECT_EQ(exhaustive_population(2).size(), 256u);
    EXPECT_THROW(exhaustive_population(3), DimensionError);
    const std::vector<BooleanNetwork> gen = generated_population(4, 20, 3);
    EXPECT_EQ(gen.size(), 20u);
    EXPECT_EQ(gen.front(), long_transient_trapping(4));
    EXPECT_EQ(sampled_population(3, 50, 9).size(), 60u);
    EXPECT_EQ(sampled_population(3, 50, 9), sampled_population(3, 50, 9));
    EXPECT_EQ(exhaustive_collections(1).size(), 8u);
    EXPECT_EQ(exhaustive_collections(2).size(), 512u);
}

// The only failing check at n = 2 is the literal globally idempotent item,
// whose lower bound alone is weaker than the other two.
TEST(VerifyPopulation, ExhaustiveB2OnlyGloballyIdempotentItemDiverges) {
    VerifyOptions options;
    options.fixtures = fixtures_dir();
    const std::vector<BooleanNetwork> population = exhaustive_population(2);
    const VerifyResult r = verify_population(population, options);
    EXPECT_EQ(r.networks, 256u);
    EXPECT_GT(r.checks, 256u * 40u);
    const std::map<std::string, int> expected{
        {"theorems: alternate definitions constant: globally_idempotent3", 26}};
    EXPECT_EQ(count_by_check(r), expected);
    for (const Violation& v : r.violations) {
        const std::vector<bool> items = check_alternate_definitions(v.network, Theorem::globally_idempotent3);
        EXPECT_EQ(items, (std::vector<bool>{false, false, true}));
    }
}

TEST(VerifyPopulation, SuitesSelectChecks) {
    const std::vector<BooleanNetwork> population = exhaustive_population(1);
    VerifyOptions closure;
    closure.suite = Suite::closure;
    VerifyOptions diagrams;
    diagrams.suite = Suite::diagrams;
    VerifyOptions all;
    const VerifyResult rc = verify_population(population, closure);
    const VerifyResult rd = verify_population(population, diagrams);
    const VerifyResult ra = verify_population(population, all);
    EXPECT_TRUE(rc.ok());
    EXPECT_TRUE(rd.ok());
    EXPECT_GT(ra.checks, rc.checks + rd.checks);
    EXPECT_STREQ(to_string(Suite::theorems), "theorems");
}

TEST(VerifyPopulation, SampledDimensionsThreeToFive) {
    for (int n = 3; n <= 5; ++n) {
        const std::vector<BooleanNetwork> population = sampled_population(n, 100, 7 + static_cast<std::uint64_t>(n));
        VerifyOptions options;
        options.suite = Suite::closure;
        const VerifyResult closure = verify_population(population, options);
        EXPECT_TRUE(closure.ok()) << n << " " << closure.violations.front().check;
        options.suite = Suite::diagrams;
        EXPECT_TRUE(verify_population(population, options).ok()) << n;
    }
}

TEST(VerifyPopulation, ViolationCarriesNetwork) {
    const BooleanNetwork f = pairs(2, {{"00", "00"}, {"10", "00"}, {"01", "00"}, {"11", "10"}});
    const std::vector<BooleanNetwork> population{f};
    VerifyOptions options;
    options.suite = Suite::theorems;
    const VerifyResult r = verify_population(population, options);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0].suite, "theorems");
    EXPECT_EQ(r.violations[0].network, f);
    EXPECT_EQ(parse_truth_table(write_truth_table(r.violations[0].network)).network, f);
}

TEST(VerifyCollections, ExhaustiveCollectionsPass) {
    for (int n = 1; n <= 2; ++n) {
        const std::vector<SubcubeCollection> all = exhaustive_collections(n);
        const std::vector<CollectionViolation> v = verify_collections(all);
        EXPECT_TRUE(v.empty()) << v.front().check << "\n" << v.front().collection.str();
    }
}

TEST(VerifyCollections, CountsOfRecognisedCollectionsOnB1) {
    int pre_principal = 0, pre_ideal = 0, min_ideal = 0;
    for (const SubcubeCollection& a : exhaustive_collections(1)) {
        const CollectionFlags f = classify_collection(a);
        pre_principal += f.pre_principal;
        pre_ideal += f.pre_ideal;
        min_ideal += f.min_ideal;
    }
    // Subcubes of B^1 are 0, 1 and *. Pre-principal: {*}, {0,1}, {0,*}, {1,*}.
    EXPECT_EQ(pre_principal, 4);
    // Pre-ideal: {*}, {0,*}, {1,*}, {0,1,*}.
    EXPECT_EQ(pre_ideal, 4);
    // Pairwise disjoint: {}, {0}, {1}, {*}, {0,1}.
    EXPECT_EQ(min_ideal, 5);
}

}  // namespace
}  // namespace trapnet
