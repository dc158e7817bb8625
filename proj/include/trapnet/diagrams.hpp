#pragma once

// Implication diagrams between network properties, with guarded arrows and
// counterexample fixtures, and a verifier over network populations.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "trapnet/classes.hpp"
#include "trapnet/netio.hpp"

namespace trapnet {

/// Everything a diagram node may ask about a network.
struct NetworkProfile {
    ClassReport classes;
    GraphPropertyTable graphs;
};

inline NetworkProfile profile_network(const BooleanNetwork& f) { return {classify_network(f), graph_property_table(f)}; }

/// Population an arrow applies to: all networks, trapping ones, or commutative ones.
enum class Guard { all, trapping, commutative };

inline const char* to_string(Guard g) {
    switch (g) {
    case Guard::all: return "all";
    case Guard::trapping: return "trapping";
    case Guard::commutative: return "commutative";
    }
    return "?";
}

inline bool guard_holds(Guard g, const NetworkProfile& p) {
    switch (g) {
    case Guard::all: return true;
    case Guard::trapping: return p.classes.trapping;
    case Guard::commutative: return p.classes.commutative;
    }
    return false;
}

struct DiagramNode {
    std::string id;
    std::string label;
    bool (*holds)(const NetworkProfile&);
};

struct DiagramEdge {
    std::string from;
    std::string to;
    Guard guard;
};

/// A drawn non-implication: the fixture satisfies `from` and the guard but not `to`.
struct Counterexample {
    std::string label;
    std::string from;
    std::string to;
    Guard guard;
};

struct DiagramSpec {
    std::string id;
    std::vector<DiagramNode> nodes;
    std::vector<DiagramEdge> edges;
    std::vector<Counterexample> counterexamples;

    [[nodiscard]] const DiagramNode& node(const std::string& node_id) const {
        for (const DiagramNode& n : nodes)
            if (n.id == node_id) return n;
        throw std::invalid_argument("diagram " + id + " has no node " + node_id);
    }
};

namespace detail {

using P = const NetworkProfile&;
using G = GraphProperty;

inline void both_ways(std::vector<DiagramEdge>& edges, const std::string& a, const std::string& b) {
    edges.push_back({a, b, Guard::all});
    edges.push_back({b, a, Guard::all});
}

}  // namespace detail

inline DiagramSpec symmetric_diagram() {
    using detail::G, detail::P;
    DiagramSpec d;
    d.id = "symmetric";
    d.nodes = {
        {"GI", "Globally Involutive", [](P p) { return p.classes.globally_involutive; }},
        {"SGA", "Symmetric GA", [](P p) { return p.graphs.ga(G::symmetric); }},
        {"M", "Marseille", [](P p) { return p.classes.marseille; }},
        {"ST", "Symmetric TG", [](P p) { return p.graphs.tg(G::symmetric); }},
        {"SA", "Symmetric A", [](P p) { return p.graphs.a(G::symmetric); }},
        {"LI", "Locally Involutive", [](P p) { return p.classes.locally_involutive; }},
        {"LB", "Locally Bijective", [](P p) { return p.classes.locally_bijective; }},
    };
    detail::both_ways(d.edges, "SGA", "M");
    detail::both_ways(d.edges, "SGA", "GI");
    d.edges.push_back({"SGA", "ST", Guard::all});
    d.edges.push_back({"ST", "SGA", Guard::trapping});
    d.edges.push_back({"SGA", "SA", Guard::all});
    d.edges.push_back({"SA", "SGA", Guard::trapping});
    detail::both_ways(d.edges, "SA", "LB");
    detail::both_ways(d.edges, "SA", "LI");
    d.counterexamples = {
        {"a", "ST", "SA", Guard::all},
        {"b", "SA", "ST", Guard::all},
    };
    return d;
}

inline DiagramSpec marseille_diagram() {
    using detail::P;
    DiagramSpec d;
    d.id = "marseille";
    d.nodes = {
        {"M", "Marseille", [](P p) { return p.classes.marseille; }},
        {"I", "Involutive", [](P p) { return p.classes.involutive; }},
        {"B3", "Globally Bijective", [](P p) { return p.classes.globally_bijective; }},
        {"B1", "Locally Bijective", [](P p) { return p.classes.locally_bijective; }},
        {"B", "Bijective", [](P p) { return p.classes.bijective; }},
    };
    d.edges = {
        {"M", "B3", Guard::all},         {"B3", "B1", Guard::all},        {"B3", "B", Guard::all},
        {"M", "I", Guard::all},          {"I", "B", Guard::all},          {"B3", "M", Guard::trapping},
        {"B1", "B3", Guard::trapping},   {"B", "I", Guard::trapping},     {"B", "B3", Guard::commutative},
        {"I", "M", Guard::commutative},
    };
    d.counterexamples = {
        {"c", "I", "B1", Guard::trapping},
        {"d", "B", "I", Guard::all},
    };
    return d;
}

inline DiagramSpec triangular_diagram() {
    using detail::G, detail::P;
    DiagramSpec d;
    d.id = "triangular";
    d.nodes = {
        {"TT", "Triangular TG", [](P p) { return p.graphs.tg(G::triangular); }},
        {"OT", "Oriented TG", [](P p) { return p.graphs.tg(G::oriented); }},
        {"DPT", "DPT", [](P p) { return p.classes.dpt; }},
        {"TGA", "Triangular GA", [](P p) { return p.graphs.ga(G::triangular); }},
        {"OGA", "Oriented GA", [](P p) { return p.graphs.ga(G::oriented); }},
        {"TA", "Triangular A", [](P p) { return p.graphs.a(G::triangular); }},
        {"OA", "Oriented A", [](P p) { return p.graphs.a(G::oriented); }},
        {"LI", "Locally Idempotent", [](P p) { return p.classes.locally_idempotent; }},
        {"STA", "Sink-terminal A", [](P p) { return p.graphs.a(G::sink_terminal); }},
        {"F", "Fixable", [](P p) { return p.classes.fixable; }},
        {"STGA", "Sink-terminal GA", [](P p) { return p.graphs.ga(G::sink_terminal); }},
        {"STT", "Sink-terminal TG", [](P p) { return p.graphs.tg(G::sink_terminal); }},
        {"TFP", "Trapspace-FP", [](P p) { return p.classes.trapspace_fp; }},
    };
    detail::both_ways(d.edges, "TT", "OT");
    d.edges.insert(d.edges.end(), {
                                      {"TGA", "OGA", Guard::all},
                                      {"OGA", "TGA", Guard::trapping},
                                      {"TA", "OA", Guard::all},
                                      {"OA", "TA", Guard::trapping},
                                      {"TT", "TGA", Guard::all},
                                      {"TGA", "TT", Guard::trapping},
                                      {"TGA", "TA", Guard::all},
                                      {"TA", "TGA", Guard::commutative},
                                      {"OGA", "OA", Guard::all},
                                      {"OA", "OGA", Guard::commutative},
                                      {"TA", "STA", Guard::all},
                                      {"STA", "TA", Guard::commutative},
                                      {"STA", "STGA", Guard::all},
                                      {"STGA", "STA", Guard::trapping},
                                      {"STGA", "STT", Guard::all},
                                      {"STT", "STGA", Guard::trapping},
                                  });
    detail::both_ways(d.edges, "TT", "DPT");
    detail::both_ways(d.edges, "OA", "LI");
    detail::both_ways(d.edges, "STA", "F");
    detail::both_ways(d.edges, "STT", "TFP");
    d.counterexamples = {
        {"e", "TGA", "TT", Guard::all},       {"f", "TA", "OGA", Guard::trapping}, {"g", "OGA", "STT", Guard::all},
        {"h", "STT", "STGA", Guard::all},     {"i", "STGA", "STA", Guard::all},    {"j", "STA", "OA", Guard::trapping},
    };
    return d;
}

inline DiagramSpec lille_diagram() {
    using detail::G, detail::P;
    DiagramSpec d;
    d.id = "lille";
    d.nodes = {
        {"IC", "Lille", [](P p) { return p.classes.lille; }},
        {"UFP", "Interval-UFP Idempotent", [](P p) { return p.classes.interval_ufp && p.classes.idempotent; }},
        {"GI", "Globally Idempotent", [](P p) { return p.classes.globally_idempotent; }},
        {"UFPI", "Interval-UFP", [](P p) { return p.classes.interval_ufp; }},
        {"I", "Idempotent", [](P p) { return p.classes.idempotent; }},
        {"DPT", "DPT", [](P p) { return p.classes.dpt; }},
        {"TGA", "Triangular GA", [](P p) { return p.graphs.ga(G::triangular); }},
        {"TA", "Triangular A", [](P p) { return p.graphs.a(G::triangular); }},
        {"OGA", "Oriented GA", [](P p) { return p.graphs.ga(G::oriented); }},
        {"OA", "Locally Idempotent", [](P p) { return p.classes.locally_idempotent; }},
        {"F", "Fixable", [](P p) { return p.classes.fixable; }},
        {"FI", "Interval-FP", [](P p) { return p.classes.interval_fp; }},
        {"FPT", "Trapspace-FP", [](P p) { return p.classes.trapspace_fp; }},
    };
    d.edges = {
        {"IC", "UFP", Guard::all},      {"UFP", "IC", Guard::trapping},    {"UFP", "UFPI", Guard::all},
        {"UFPI", "UFP", Guard::commutative}, {"UFPI", "FI", Guard::all},   {"FI", "UFPI", Guard::commutative},
        {"IC", "GI", Guard::all},       {"GI", "IC", Guard::commutative},  {"DPT", "TGA", Guard::all},
        {"TGA", "DPT", Guard::trapping}, {"GI", "I", Guard::all},          {"I", "GI", Guard::commutative},
        {"GI", "DPT", Guard::all},      {"DPT", "GI", Guard::commutative}, {"TGA", "TA", Guard::all},
        {"TA", "TGA", Guard::commutative}, {"TGA", "OGA", Guard::all},     {"OGA", "TGA", Guard::trapping},
        {"TA", "OA", Guard::all},       {"OA", "TA", Guard::trapping},     {"OGA", "OA", Guard::all},
        {"OA", "OGA", Guard::commutative}, {"TA", "F", Guard::all},        {"F", "TA", Guard::commutative},
        {"F", "FPT", Guard::all},       {"FPT", "F", Guard::trapping},     {"UFP", "I", Guard::all},
        {"I", "UFP", Guard::commutative}, {"I", "FI", Guard::all},         {"FI", "I", Guard::commutative},
        {"FI", "FPT", Guard::all},      {"FPT", "FI", Guard::trapping},
    };
    d.counterexamples = {
        {"k", "UFP", "F", Guard::all},        {"l", "UFP", "OA", Guard::all},       {"m", "UFPI", "I", Guard::trapping},
        {"n", "GI", "UFPI", Guard::all},      {"o", "DPT", "I", Guard::trapping},   {"p", "I", "OA", Guard::trapping},
        {"q", "UFPI", "OA", Guard::trapping},
    };
    return d;
}

inline std::vector<DiagramSpec> all_diagrams() {
    return {symmetric_diagram(), marseille_diagram(), triangular_diagram(), lille_diagram()};
}

struct DiagramViolation {
    std::string diagram;
    /// "from -> to [guard]" for an arrow, "(label) from =/=> to [guard]" for a fixture.
    std::string what;
    BooleanNetwork network;

    friend bool operator==(const DiagramViolation&, const DiagramViolation&) = default;
};

inline std::string describe(const DiagramEdge& e) {
    return e.from + " -> " + e.to + " [" + to_string(e.guard) + "]";
}
inline std::string describe(const Counterexample& c) {
    return "(" + c.label + ") " + c.from + " =/=> " + c.to + " [" + to_string(c.guard) + "]";
}

class MissingFixture : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using FixtureSet = std::map<std::string, BooleanNetwork>;

/// Reads <dir>/<diagram id>/<label>.tt for every counterexample of d.
inline FixtureSet load_diagram_fixtures(const DiagramSpec& d, const std::filesystem::path& dir) {
    FixtureSet out;
    for (const Counterexample& c : d.counterexamples) {
        const std::filesystem::path file = dir / d.id / (c.label + ".tt");
        std::ifstream in(file);
        if (!in) throw MissingFixture("missing fixture " + file.string());
        std::stringstream text;
        text << in.rdbuf();
        try {
            out.emplace(c.label, parse_truth_table(text.str()).network);
        } catch (const ParseError& e) {
            throw ParseError(e.line, e.column, file.string() + ": " + e.what());
        }
    }
    return out;
}

namespace detail {

inline void sort_violations(std::vector<DiagramViolation>& v) {
    std::sort(v.begin(), v.end(), [](const DiagramViolation& a, const DiagramViolation& b) {
        if (a.network != b.network) return a.network < b.network;
        if (a.diagram != b.diagram) return a.diagram < b.diagram;
        return a.what < b.what;
    });
}

}  // namespace detail

/// Arrow violations over a population of precomputed profiles.
inline std::vector<DiagramViolation> verify_diagram_profiles(const DiagramSpec& d,
                                                             std::span<const BooleanNetwork> population,
                                                             std::span<const NetworkProfile> profiles) {
    std::vector<DiagramViolation> out;
    for (std::size_t k = 0; k < population.size(); ++k) {
        const NetworkProfile& p = profiles[k];
        for (const DiagramEdge& e : d.edges) {
            if (!guard_holds(e.guard, p) || !d.node(e.from).holds(p)) continue;
            if (!d.node(e.to).holds(p)) out.push_back({d.id, describe(e), population[k]});
        }
    }
    detail::sort_violations(out);
    return out;
}

/// Counterexample fixtures that fail to refute their non-arrow.
inline std::vector<DiagramViolation> verify_counterexamples(const DiagramSpec& d, const FixtureSet& fixtures) {
    std::vector<DiagramViolation> out;
    for (const Counterexample& c : d.counterexamples) {
        const auto it = fixtures.find(c.label);
        if (it == fixtures.end()) throw MissingFixture("no fixture for counterexample (" + c.label + ")");
        const NetworkProfile p = profile_network(it->second);
        const bool refutes = guard_holds(c.guard, p) && d.node(c.from).holds(p) && !d.node(c.to).holds(p);
        if (!refutes) out.push_back({d.id, describe(c), it->second});
    }
    detail::sort_violations(out);
    return out;
}

/// Arrow correctness over the population plus fixture completeness.
inline std::vector<DiagramViolation> verify_diagram(const DiagramSpec& d, std::span<const BooleanNetwork> population,
                                                    const FixtureSet& fixtures) {
    std::vector<NetworkProfile> profiles;
    profiles.reserve(population.size());
    for (const BooleanNetwork& f : population) profiles.push_back(profile_network(f));
    std::vector<DiagramViolation> out = verify_diagram_profiles(d, population, profiles);
    std::vector<DiagramViolation> fx = verify_counterexamples(d, fixtures);
    out.insert(out.end(), fx.begin(), fx.end());
    detail::sort_violations(out);
    return out;
}

}  // namespace trapnet
