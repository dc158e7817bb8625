#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace trapnet::cli;
    CLI::App app{"Trapspace analysis of Boolean networks"};
    app.require_subcommand(1);

    AnalyzeOptions analyze;
    auto* a = app.add_subcommand("analyze", "Classify a network and count its trapspaces");
    a->add_option("file", analyze.file, "Truth-table or expression file")->required();
    a->add_option("--format", analyze.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"text", OutputFormat::text}, {"json", OutputFormat::json}}));
    a->add_flag("--minimal-only", analyze.minimal_only, "Only minimal trapspaces (n <= 16)");

    GraphOptions graph;
    auto* g = app.add_subcommand("graph", "Write a dynamics graph as DOT");
    g->add_option("file", graph.file, "Truth-table or expression file")->required();
    g->add_option("--kind", graph.kind, "Graph kind")
        ->transform(CLI::CheckedTransformer(std::map<std::string, GraphChoice>{
            {"async", GraphChoice::async}, {"ga", GraphChoice::ga}, {"tg", GraphChoice::tg}}));
    g->add_flag("--layered", graph.layered, "Stack async, ga and tg up to --kind");

    EquivOptions equiv;
    auto* e = app.add_subcommand("equiv", "Compare two networks");
    e->add_option("first", equiv.first, "First network")->required();
    e->add_option("second", equiv.second, "Second network")->required();
    e->add_option("--mode", equiv.mode, "Equivalence notion")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, EquivMode>{{"trapspace", EquivMode::trapspace}, {"min", EquivMode::min}}));

    VerifyCliOptions verify;
    std::size_t samples = 0;
    std::string fixtures;
    std::string reproducers;
    auto* v = app.add_subcommand("verify", "Check theorems over a network population");
    v->add_option("--n", verify.n, "Dimension")->required();
    auto* exhaustive = v->add_flag("--exhaustive", verify.exhaustive, "All networks (n <= 2)");
    auto* sampled = v->add_option("--samples", samples, "Random networks (3 <= n <= 6)");
    exhaustive->excludes(sampled);
    v->add_option("--seed", verify.seed, "Sampling seed");
    v->add_option("--suite", verify.suite, "Suite")
        ->transform(CLI::CheckedTransformer(std::map<std::string, trapnet::Suite>{
            {"all", trapnet::Suite::all},
            {"theorems", trapnet::Suite::theorems},
            {"closure", trapnet::Suite::closure},
            {"diagrams", trapnet::Suite::diagrams}}));
    v->add_option("--fixtures", fixtures, "Counterexample fixture directory")->check(CLI::ExistingDirectory);
    v->add_option("--reproducers", reproducers, "Directory for violation truth tables");

    GenOptions gen;
    std::string gen_out;
    auto* n = app.add_subcommand("gen", "Generate a network");
    n->add_option("--kind", gen.kind, "Generator")
        ->required()
        ->transform(CLI::CheckedTransformer(std::map<std::string, GenKind>{
            {"random", GenKind::random},
            {"commutative", GenKind::commutative},
            {"negation", GenKind::negation},
            {"constant", GenKind::constant},
            {"long-transient", GenKind::long_transient}}));
    n->add_option("--n", gen.n, "Dimension")->required();
    n->add_option("--seed", gen.seed, "Seed");
    n->add_option("--parts", gen.parts, "Arrangement parts for commutative");
    n->add_option("--out", gen_out, "Output file (standard output if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (a->parsed()) return cmd_analyze(analyze, std::cout);
        if (g->parsed()) return cmd_graph(graph, std::cout);
        if (e->parsed()) return cmd_equiv(equiv, std::cout);
        if (v->parsed()) {
            if (sampled->count() > 0) verify.samples = samples;
            if (!fixtures.empty()) verify.fixtures = fixtures;
            if (!reproducers.empty()) verify.reproducers = reproducers;
            return cmd_verify(verify, std::cout);
        }
        if (n->parsed()) {
            if (!gen_out.empty()) gen.out = gen_out;
            return cmd_gen(gen, std::cout, std::cerr);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
