#pragma once

// Summary of a single network: classes, trapspace counts, dynamics and the
// graph property table.

#include <optional>
#include <string>
#include <vector>

#include "trapnet/classes.hpp"
#include "trapnet/trapspaces.hpp"

namespace trapnet {

struct AnalysisReport {
    int n = 1;
    std::optional<std::string> name;
    ClassReport classes;
    std::size_t principal_distinct = 0;
    std::size_t trapspaces = 0;
    SubcubeCollection minimal;
    std::size_t min_configs = 0;
    TransientPeriod dynamics;
    GraphPropertyTable graphs;
};

inline constexpr int kMaxAnalyzeDimension = 13;

inline AnalysisReport analyze_network(const BooleanNetwork& f, std::optional<std::string> name = std::nullopt) {
    if (f.n() > kMaxAnalyzeDimension)
        throw DimensionError("full analysis needs n <= " + std::to_string(kMaxAnalyzeDimension));
    AnalysisReport r;
    r.n = f.n();
    r.name = std::move(name);
    r.classes = classify_network(f);
    r.principal_distinct = principal_trapspaces(f).size();
    r.trapspaces = enumerate_trapspaces(f).size();
    MinimalTrapspaces mt = minimal_trapspaces(f);
    r.minimal = std::move(mt.minimal);
    r.min_configs = mt.min_configs.size();
    r.dynamics = transient_and_period(f);
    r.graphs = graph_property_table(f);
    return r;
}

inline std::string render_text(const AnalysisReport& r) {
    auto yes_no = [](bool b) { return b ? "true" : "false"; };
    std::string out;
    if (r.name) out += "network: " + *r.name + "\n";
    out += "n: " + std::to_string(r.n) + "\n";
    out += "principal trapspaces: " + std::to_string(r.principal_distinct) + "\n";
    out += "trapspaces: " + std::to_string(r.trapspaces) + "\n";
    out += "minimal: " + std::to_string(r.minimal.size()) + "\n";
    for (const Subcube& m : r.minimal) out += "  " + m.str() + "\n";
    out += "min configurations: " + std::to_string(r.min_configs) + "\n";
    out += "transient: " + std::to_string(r.dynamics.transient) + "\n";
    out += "period: " + std::to_string(r.dynamics.period) + "\n";
    for (const auto& [flag, value] : r.classes.flags()) out += std::string(flag) + ": " + yes_no(value) + "\n";
    out += "graph properties (A GA TG):\n";
    for (GraphProperty p : kAllGraphProperties)
        out += std::string("  ") + to_string(p) + ": " + yes_no(r.graphs.a(p)) + " " + yes_no(r.graphs.ga(p)) + " " +
               yes_no(r.graphs.tg(p)) + "\n";
    return out;
}

}  // namespace trapnet
