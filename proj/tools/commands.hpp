#pragma once

// Command implementations behind the trapnet executable. Each command writes
// to the given streams and returns the process exit code.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "trapnet/trapnet.hpp"

namespace trapnet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kMaxMinimalOnlyDimension = 16;
inline constexpr int kMinSampledDimension = 3;
inline constexpr int kMaxSampledDimension = 6;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline NetworkDocument load_network(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_network(text.str());
    } catch (const ParseError& e) {
        throw UsageError(path.string() + ": " + e.what());
    }
}

namespace detail {

inline nlohmann::ordered_json graph_table_json(const GraphPropertyTable& g) {
    nlohmann::ordered_json out;
    const std::pair<const char*, bool (GraphPropertyTable::*)(GraphProperty) const> kinds[] = {
        {"asynchronous", &GraphPropertyTable::a},
        {"general_asynchronous", &GraphPropertyTable::ga},
        {"trapping", &GraphPropertyTable::tg},
    };
    for (const auto& [name, get] : kinds) {
        nlohmann::ordered_json row;
        for (GraphProperty p : kAllGraphProperties) row[to_string(p)] = (g.*get)(p);
        out[name] = row;
    }
    return out;
}

inline std::string one_line_summary(const BooleanNetwork& f) {
    const ClassReport c = classify_network(f);
    const TransientPeriod tp = transient_and_period(f);
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::string out = "n=" + std::to_string(f.n());
    out += std::string(" trapping: ") + b(c.trapping);
    out += std::string(" commutative: ") + b(c.commutative);
    out += std::string(" marseille: ") + b(c.marseille);
    out += std::string(" lille: ") + b(c.lille);
    out += std::string(" globally_idempotent: ") + b(c.globally_idempotent);
    out += " transient: " + std::to_string(tp.transient);
    out += " period: " + std::to_string(tp.period);
    return out;
}

}  // namespace detail

inline nlohmann::ordered_json report_json(const AnalysisReport& r) {
    nlohmann::ordered_json out;
    out["name"] = r.name ? nlohmann::ordered_json(*r.name) : nlohmann::ordered_json(nullptr);
    out["n"] = r.n;
    nlohmann::ordered_json classes;
    for (const auto& [flag, value] : r.classes.flags()) classes[flag] = value;
    out["classes"] = classes;
    nlohmann::ordered_json counts;
    counts["principal_distinct"] = r.principal_distinct;
    counts["all"] = r.trapspaces;
    counts["minimal"] = r.minimal.size();
    out["trapspaces"] = counts;
    nlohmann::ordered_json minimal = nlohmann::ordered_json::array();
    for (const Subcube& m : r.minimal) minimal.push_back(m.str());
    out["minimal_trapspaces"] = minimal;
    out["min_configurations"] = r.min_configs;
    out["dynamics"] = {{"transient", r.dynamics.transient}, {"period", r.dynamics.period}};
    out["graphs"] = detail::graph_table_json(r.graphs);
    return out;
}

enum class OutputFormat { text, json };

struct AnalyzeOptions {
    std::filesystem::path file;
    OutputFormat format = OutputFormat::text;
    bool minimal_only = false;
};

inline int cmd_analyze(const AnalyzeOptions& o, std::ostream& out) {
    const NetworkDocument doc = load_network(o.file);
    const BooleanNetwork& f = doc.network;
    if (o.minimal_only) {
        if (f.n() > kMaxMinimalOnlyDimension)
            throw UsageError("minimal-only analysis needs n <= " + std::to_string(kMaxMinimalOnlyDimension));
        const MinimalTrapspaces mt = minimal_trapspaces(f);
        if (o.format == OutputFormat::json) {
            nlohmann::ordered_json j;
            j["name"] = doc.name ? nlohmann::ordered_json(*doc.name) : nlohmann::ordered_json(nullptr);
            j["n"] = f.n();
            nlohmann::ordered_json minimal = nlohmann::ordered_json::array();
            for (const Subcube& m : mt.minimal) minimal.push_back(m.str());
            j["minimal_trapspaces"] = minimal;
            j["min_configurations"] = mt.min_configs.size();
            j["fixed_points"] = fixed_points(f).size();
            out << j.dump(2) << "\n";
        } else {
            if (doc.name) out << "network: " << *doc.name << "\n";
            out << "n: " << f.n() << "\n";
            out << "minimal: " << mt.minimal.size() << "\n";
            for (const Subcube& m : mt.minimal) out << "  " << m.str() << "\n";
            out << "min configurations: " << mt.min_configs.size() << "\n";
            out << "fixed points: " << fixed_points(f).size() << "\n";
        }
        return kExitOk;
    }
    if (f.n() > kMaxAnalyzeDimension)
        throw UsageError("full analysis needs n <= " + std::to_string(kMaxAnalyzeDimension) +
                         "; use --minimal-only up to n = " + std::to_string(kMaxMinimalOnlyDimension));
    const AnalysisReport r = analyze_network(f, doc.name);
    if (o.format == OutputFormat::json)
        out << report_json(r).dump(2) << "\n";
    else
        out << render_text(r);
    return kExitOk;
}

enum class GraphChoice { async, ga, tg };

struct GraphOptions {
    std::filesystem::path file;
    GraphChoice kind = GraphChoice::async;
    bool layered = false;
};

inline int cmd_graph(const GraphOptions& o, std::ostream& out) {
    const NetworkDocument doc = load_network(o.file);
    const BooleanNetwork& f = doc.network;
    if (o.kind == GraphChoice::tg) trapnet::detail::require_enumerable(f.n());
    std::vector<HypercubeGraph> layers;
    std::vector<std::string> labels{"asynchronous", "general asynchronous", "trapping"};
    const auto last = static_cast<std::size_t>(o.kind);
    for (std::size_t k = o.layered ? 0 : last; k <= last; ++k) {
        switch (k) {
        case 0: layers.push_back(build_graph(f, GraphKind::asynchronous)); break;
        case 1: layers.push_back(build_graph(f, GraphKind::general)); break;
        default: layers.push_back(trapping_graph(f)); break;
        }
    }
    const auto& palette = default_layer_colors();
    const std::size_t first = o.layered ? 0 : last;
    const std::vector<std::string> colors(palette.begin() + static_cast<std::ptrdiff_t>(first), palette.end());
    const std::vector<std::string> used(labels.begin() + static_cast<std::ptrdiff_t>(first), labels.end());
    out << export_dot(layers, used, colors);
    return kExitOk;
}

enum class EquivMode { trapspace, min };

struct EquivOptions {
    std::filesystem::path first;
    std::filesystem::path second;
    EquivMode mode = EquivMode::trapspace;
};

inline int cmd_equiv(const EquivOptions& o, std::ostream& out) {
    const NetworkDocument a = load_network(o.first);
    const NetworkDocument b = load_network(o.second);
    if (a.n != b.n)
        throw UsageError("dimension mismatch: " + std::to_string(a.n) + " vs " + std::to_string(b.n));
    trapnet::detail::require_enumerable(a.n);
    std::vector<std::string> names;
    std::vector<bool> values;
    if (o.mode == EquivMode::trapspace) {
        names = {"PT(f) = PT(g)", "T(f) = T(g)", "T_f = T_g pointwise", "TG(f) = TG(g)", "f^T = g^T"};
        values = trapspace_equivalent(a.network, b.network);
    } else {
        names = {"MT(f) = MT(g)", "M(f) = M(g) and T_f = T_g on M(f)", "T_f = T_g on M(f) and M(g)",
                 "f^M = g^M"};
        values = min_trapspace_equivalent(a.network, b.network);
    }
    for (std::size_t k = 0; k < values.size(); ++k)
        out << (values[k] ? "true " : "false") << "  " << names[k] << "\n";
    const bool equivalent = std::all_of(values.begin(), values.end(), [](bool v) { return v; });
    if (!is_constant(values)) out << "warning: conditions disagree\n";
    out << (equivalent ? "equivalent" : "not equivalent") << "\n";
    return equivalent ? kExitOk : kExitNegative;
}

struct VerifyCliOptions {
    int n = 2;
    bool exhaustive = false;
    std::optional<std::size_t> samples;
    std::uint64_t seed = 7;
    Suite suite = Suite::all;
    std::optional<std::filesystem::path> fixtures;
    std::optional<std::filesystem::path> reproducers;
};

inline int cmd_verify(const VerifyCliOptions& o, std::ostream& out) {
    if (o.exhaustive == o.samples.has_value()) throw UsageError("exactly one of --exhaustive or --samples is required");
    if (o.exhaustive && (o.n < 1 || o.n > kMaxExhaustiveDimension))
        throw UsageError("--exhaustive needs 1 <= n <= " + std::to_string(kMaxExhaustiveDimension));
    if (o.samples && (o.n < kMinSampledDimension || o.n > kMaxSampledDimension))
        throw UsageError("--samples needs " + std::to_string(kMinSampledDimension) + " <= n <= " +
                         std::to_string(kMaxSampledDimension) + " (use --exhaustive below)");
    if (o.samples && *o.samples == 0) throw UsageError("--samples must be positive");

    const std::vector<BooleanNetwork> population =
        o.exhaustive ? exhaustive_population(o.n) : sampled_population(o.n, *o.samples, o.seed);
    VerifyOptions vo;
    vo.suite = o.suite;
    vo.fixtures = o.fixtures;
    VerifyResult result = verify_population(population, vo);

    std::vector<CollectionViolation> collection_violations;
    std::size_t collections = 0;
    if (o.exhaustive && (o.suite == Suite::closure || o.suite == Suite::all)) {
        const std::vector<SubcubeCollection> all = exhaustive_collections(o.n);
        collections = all.size();
        collection_violations = verify_collections(all);
    }

    std::map<std::string, std::size_t> by_check;
    for (const Violation& v : result.violations) ++by_check[v.suite + ": " + v.check];
    for (const CollectionViolation& v : collection_violations) ++by_check["collections: " + v.check];

    for (std::size_t k = 0; k < result.violations.size(); ++k) {
        const Violation& v = result.violations[k];
        out << "violation " << k + 1 << " [" << v.suite << "] " << v.check << "\n";
        out << write_truth_table(v.network, v.suite + ": " + v.check);
        if (o.reproducers) {
            std::filesystem::create_directories(*o.reproducers);
            std::ofstream file(*o.reproducers / ("violation_" + std::to_string(k + 1) + ".tt"));
            file << write_truth_table(v.network, v.suite + ": " + v.check);
        }
    }
    for (const CollectionViolation& v : collection_violations)
        out << "collection violation: " << v.check << "\n" << v.collection.str();

    const std::size_t total = result.violations.size() + collection_violations.size();
    out << "networks: " << result.networks << "\n";
    if (collections > 0) out << "collections: " << collections << "\n";
    out << "checks: " << result.checks << "\n";
    out << "violations: " << total << "\n";
    for (const auto& [check, count] : by_check) out << "  " << count << "  " << check << "\n";
    return total == 0 ? kExitOk : kExitNegative;
}

enum class GenKind { random, commutative, negation, constant, long_transient };

struct GenOptions {
    GenKind kind = GenKind::random;
    int n = 0;
    std::uint64_t seed = 0;
    int parts = 2;
    std::optional<std::filesystem::path> out{};
};

inline BooleanNetwork generate(const GenOptions& o) {
    if (o.n < 1 || o.n > kMaxGlobalDimension)
        throw UsageError("--n must be in 1.." + std::to_string(kMaxGlobalDimension));
    switch (o.kind) {
    case GenKind::random: return random_network(o.n, o.seed);
    case GenKind::commutative:
        if (o.parts < 1) throw UsageError("--parts must be positive");
        return random_commutative(o.n, o.seed, o.parts);
    case GenKind::negation: return random_negation_on_subcubes(o.n, o.seed);
    case GenKind::constant: return random_constant_on_arrangements(o.n, o.seed);
    case GenKind::long_transient:
        if (o.n < 3) throw UsageError("long-transient needs n >= 3");
        return long_transient_trapping(o.n);
    }
    throw UsageError("unknown generator");
}

inline const char* to_string(GenKind k) {
    switch (k) {
    case GenKind::random: return "random";
    case GenKind::commutative: return "commutative";
    case GenKind::negation: return "negation";
    case GenKind::constant: return "constant";
    case GenKind::long_transient: return "long-transient";
    }
    return "?";
}

inline int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& info) {
    const BooleanNetwork f = generate(o);
    std::string name = std::string(to_string(o.kind)) + " n=" + std::to_string(o.n);
    if (o.kind != GenKind::long_transient) name += " seed=" + std::to_string(o.seed);
    const std::string table = write_truth_table(f, name);
    if (o.out) {
        std::ofstream file(*o.out, std::ios::binary);
        if (!file) throw UsageError("cannot write " + o.out->string());
        file << table;
        out << detail::one_line_summary(f) << "\n";
    } else {
        out << table;
        info << detail::one_line_summary(f) << "\n";
    }
    return kExitOk;
}

}  // namespace trapnet::cli
