#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "expression_oracle.hpp"
#include "test_support.hpp"

namespace trapnet {
namespace {

using testing::cfg;
using testing::f_ex3;
using testing::read_file;
using testing::Tree;

std::string parse_error_message(std::string_view text) {
    try {
        parse_network(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

TEST(TruthTable, ParsesWorkedExample) {
    const NetworkDocument doc = parse_truth_table(read_file(testing::fixtures_dir() / "examples/f_ex3.tt"));
    EXPECT_EQ(doc.n, 3);
    EXPECT_EQ(doc.source, DocumentSource::truth_table);
    EXPECT_EQ(doc.network(cfg("000")), cfg("110"));
    EXPECT_EQ(doc.network(cfg("111")), cfg("110"));
    ASSERT_TRUE(doc.name);
    EXPECT_EQ(*doc.name, "f_ex3 worked example network");
}

TEST(TruthTable, IdentityOnB1) {
    EXPECT_EQ(parse_truth_table("n=1\n0 0\n1 1").network, BooleanNetwork::identity(1));
}

TEST(TruthTable, MissingRowIsReported) {
    const std::string text = "n=3\n000 000\n100 000\n010 000\n110 000\n001 000\n101 000\n111 000\n";
    EXPECT_NE(parse_error_message(text).find("missing configuration 011"), std::string::npos);
}

TEST(TruthTable, ErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_message("n=2\n00 00\n00 11\n10 00\n11 00\n"), "line 3, column 1: duplicate configuration 00");
    EXPECT_EQ(parse_error_message("n=2\n00 00\n10 0\n01 00\n11 00\n"), "line 3: ragged row: expected width 2");
    EXPECT_EQ(parse_error_message("n=2\n00 00\n10 02\n01 00\n11 00\n"), "line 3, column 5: bad character '2'");
    EXPECT_EQ(parse_error_message("n=2\n0a 00\n"), "line 2, column 2: bad character 'a'");
    EXPECT_EQ(parse_error_message("n=0\n"), "line 1, column 3: dimension 0 outside 1..20");
    EXPECT_EQ(parse_error_message("n=2\n00\n"), "line 2: expected '<config> <image>'");
    EXPECT_EQ(parse_error_message("# only a comment\n"), "line 2: missing header 'n=<k>'");
}

TEST(TruthTable, CommentsAndBlankLinesAreSkipped) {
    const NetworkDocument doc = parse_truth_table("# name\n\nn=1\n# row comment\n1 0\n0 1\n");
    EXPECT_EQ(doc.network, BooleanNetwork::negation(1));
    EXPECT_EQ(*doc.name, "name");
}

TEST(TruthTable, WriteIsCanonicalAndSorted) {
    EXPECT_EQ(write_truth_table(BooleanNetwork::identity(2)), "n=2\n00 00\n10 10\n01 01\n11 11\n");
    const std::string shuffled = "n=2\n11 00\n00 10\n01 01\n10 11\n";
    EXPECT_EQ(write_truth_table(parse_truth_table(shuffled)), "n=2\n00 10\n10 11\n01 01\n11 00\n");
}

TEST(TruthTable, RoundTrips) {
    const std::string text = read_file(testing::fixtures_dir() / "examples/f_ex3.tt");
    const NetworkDocument once = parse_truth_table(text);
    EXPECT_EQ(write_truth_table(once), text);
    const NetworkDocument twice = parse_truth_table(write_truth_table(once));
    EXPECT_EQ(twice.network, once.network);
    EXPECT_EQ(twice.name, once.name);
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 8; ++n) {
        const BooleanNetwork f = random_network(n, rng());
        EXPECT_EQ(parse_truth_table(write_truth_table(f)).network, f);
        const std::string canonical = write_truth_table(f, "random");
        EXPECT_EQ(write_truth_table(parse_truth_table(canonical)), canonical);
    }
}

TEST(Expression, Examples) {
    const NetworkDocument doc = parse_expression_network("x1, x1 | x2\nx2, x2");
    EXPECT_EQ(doc.source, DocumentSource::expression);
    EXPECT_EQ(doc.network, testing::pairs(2, {{"00", "00"}, {"01", "11"}, {"10", "10"}, {"11", "11"}}));
    EXPECT_EQ(parse_expression_network("x1, !x1").network, BooleanNetwork::negation(1));
    EXPECT_NE(parse_error_message("x1, x2 &").find("syntax error at end of line"), std::string::npos);
}

TEST(Expression, Errors) {
    EXPECT_NE(parse_error_message("x1, x3\nx2, x1").find("undefined variable x3"), std::string::npos);
    EXPECT_NE(parse_error_message("x1, x1\nx3, x1").find("missing coordinate line"), std::string::npos);
    EXPECT_NE(parse_error_message("x1, (x1 | 0").find("line 1"), std::string::npos);
    EXPECT_NE(parse_error_message("x1, x1 $ x1").find("column"), std::string::npos);
}

TEST(Expression, LinesInAnyOrderAndPrecedence) {
    const BooleanNetwork a = parse_expression_network("x2, x1 & x2\nx1, !x1 | x2 & x1").network;
    const BooleanNetwork b = parse_expression_network("x1, (!x1) | (x2 & x1)\nx2, x2 & x1").network;
    EXPECT_EQ(a, b);
    // ^ binds tighter than |, & tighter than ^.
    const BooleanNetwork c = parse_expression_network("x1, 1 | 1 ^ 1\nx2, 1 ^ 1 & 0\nx3, x3").network;
    EXPECT_EQ(c(cfg("000")), cfg("110"));
}

TEST(Expression, MatchesIndependentEvaluator) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + trial % 6;
        std::vector<std::unique_ptr<Tree>> trees;
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(order.begin(), order.end(), rng);
        std::string text;
        trees.resize(static_cast<std::size_t>(n) + 1);
        for (int i : order) {
            trees[static_cast<std::size_t>(i)] = testing::random_tree(rng, n, 4);
            text += "x" + std::to_string(i) + ", " + testing::print(*trees[static_cast<std::size_t>(i)], rng) + "\n";
        }
        text.pop_back();
        const BooleanNetwork f = parse_expression_network(text).network;
        ASSERT_EQ(f.n(), n) << text;
        for (Word x = 0; x < f.size(); ++x) {
            Word expected = 0;
            for (int i = 1; i <= n; ++i)
                if (testing::eval(*trees[static_cast<std::size_t>(i)], x)) expected |= Word{1} << (i - 1);
            ASSERT_EQ(f.raw(x), expected) << text;
        }
    }
}

TEST(ParseNetwork, DispatchesOnHeader) {
    EXPECT_EQ(parse_network("# c\nn=1\n0 1\n1 0\n").source, DocumentSource::truth_table);
    EXPECT_EQ(parse_network("# c\nx1, !x1\n").source, DocumentSource::expression);
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t c = 0;
    for (std::size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++c;
    return c;
}

TEST(Dot, AsynchronousGraphOfWorkedExample) {
    const std::string dot = export_dot(build_graph(f_ex3(), GraphKind::asynchronous));
    EXPECT_EQ(count(dot, "->"), 8u);
    EXPECT_EQ(count(dot, "[color=blue]"), 8u);
    EXPECT_NE(dot.find("\"000\" -> \"100\" [color=blue];"), std::string::npos);
    EXPECT_EQ(dot.rfind("digraph {\n", 0), 0u);
}

TEST(Dot, GeneralAsynchronousExtras) {
    const BooleanNetwork f = f_ex3();
    const std::vector<HypercubeGraph> layers{build_graph(f, GraphKind::asynchronous), build_graph(f, GraphKind::general)};
    const std::string dot = export_dot(layers);
    EXPECT_EQ(count(dot, "[color=magenta]"), 3u);
    EXPECT_NE(dot.find("\"000\" -> \"110\" [color=magenta];"), std::string::npos);
    EXPECT_NE(dot.find("\"001\" -> \"100\" [color=magenta];"), std::string::npos);
    EXPECT_NE(dot.find("\"011\" -> \"110\" [color=magenta];"), std::string::npos);
}

TEST(Dot, IdentityHasNoArcs) {
    const std::string dot = export_dot(build_graph(BooleanNetwork::identity(2), GraphKind::asynchronous));
    EXPECT_EQ(count(dot, "->"), 0u);
    EXPECT_EQ(count(dot, "\";\n"), 4u);
}

TEST(Dot, RejectsNonNestedLayers) {
    const BooleanNetwork f = f_ex3();
    const std::vector<HypercubeGraph> layers{build_graph(f, GraphKind::general), build_graph(f, GraphKind::asynchronous)};
    EXPECT_THROW(export_dot(layers), std::invalid_argument);
}

TEST(Dot, ByteStableAcrossRuns) {
    const BooleanNetwork f = f_ex3();
    const std::vector<HypercubeGraph> layers{build_graph(f, GraphKind::asynchronous), build_graph(f, GraphKind::general),
                                             trapping_graph(f)};
    const std::vector<std::string> labels{"A", "GA", "TG"};
    EXPECT_EQ(export_dot(layers, labels), export_dot(layers, labels));
    EXPECT_NE(export_dot(layers, labels).find("\"001\" -> \"111\" [color=orange];"), std::string::npos);
}

}  // namespace
}  // namespace trapnet
