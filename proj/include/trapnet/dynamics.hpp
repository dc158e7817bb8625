#pragma once

// Asynchronous and general asynchronous graphs on B^n, graph predicates,
// strongly connected components, and the transient/period of f.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "trapnet/core.hpp"

namespace trapnet {

/// A subset of B^n stored as 2^n bits.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_((cube_size(n) + 63) / 64, 0) {}

    static VertexSet of_subcube(const Subcube& cube) {
        VertexSet s(cube.n());
        cube.for_each_member([&](Word m) { s.insert(m); });
        return s;
    }

    [[nodiscard]] int n() const { return n_; }
    void insert(Word x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
    void erase(Word x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }
    [[nodiscard]] bool contains(Word x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }

    [[nodiscard]] std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    [[nodiscard]] bool is_subset_of(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    VertexSet& operator|=(const VertexSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    template <class Visitor>
    void for_each(Visitor&& visit) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                visit(static_cast<Word>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    /// Smallest member >= from, if any.
    [[nodiscard]] std::optional<Word> next(std::size_t from) const {
        std::size_t i = from >> 6;
        if (i >= words_.size()) return std::nullopt;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return static_cast<Word>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            if (++i >= words_.size()) return std::nullopt;
            w = words_[i];
        }
    }

    [[nodiscard]] std::vector<Word> elements() const {
        std::vector<Word> out;
        for_each([&](Word x) { out.push_back(x); });
        return out;
    }

    /// Smallest subcube containing the set, if the set is one.
    [[nodiscard]] std::optional<Subcube> as_subcube() const {
        std::optional<Word> first;
        Word free = 0;
        for_each([&](Word x) {
            if (!first) first = x;
            free |= x ^ *first;
        });
        if (!first) return std::nullopt;
        Subcube cube(n_, free, *first);
        if (cube.size() != count()) return std::nullopt;
        return cube;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    int n_ = 1;
    std::vector<std::uint64_t> words_;
};

/// Digraph on B^n given by one out-neighbourhood per vertex.
class HypercubeGraph {
public:
    HypercubeGraph() = default;
    explicit HypercubeGraph(int n) : n_(n), out_(cube_size(n), VertexSet(n)) { check_dimension(n); }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::size_t vertex_count() const { return out_.size(); }
    [[nodiscard]] const VertexSet& out(Word x) const { return out_[x]; }
    VertexSet& out(Word x) { return out_[x]; }
    void add_arc(Word from, Word to) { out_[from].insert(to); }
    [[nodiscard]] bool has_arc(Word from, Word to) const { return out_[from].contains(to); }

    [[nodiscard]] std::size_t arc_count() const {
        std::size_t c = 0;
        for (const auto& s : out_) c += s.count();
        return c;
    }

    template <class Visitor>
    void for_each_out(Word x, Visitor&& visit) const {
        out_[x].for_each(visit);
    }
    [[nodiscard]] std::optional<Word> next_out(Word x, std::uint64_t& cursor) const {
        auto y = out_[x].next(cursor);
        if (y) cursor = std::uint64_t{*y} + 1;
        return y;
    }
    [[nodiscard]] bool out_subset(Word y, Word x) const { return out_[y].is_subset_of(out_[x]); }

    /// Arc-set inclusion.
    [[nodiscard]] bool is_subgraph_of(const HypercubeGraph& other) const {
        require_same_dimension(n_, other.n_);
        for (std::size_t x = 0; x < out_.size(); ++x)
            if (!out_[x].is_subset_of(other.out_[x])) return false;
        return true;
    }

    friend bool operator==(const HypercubeGraph&, const HypercubeGraph&) = default;

private:
    int n_ = 1;
    std::vector<VertexSet> out_;
};

/// Digraph on B^n whose out-neighbourhoods are subcubes, as in GA(f) and
/// TG(f). Arc queries are O(1) on the (free, base) form.
class SubcubeGraph {
public:
    SubcubeGraph() = default;
    SubcubeGraph(int n, std::vector<Subcube> out) : n_(n), out_(std::move(out)) {
        check_dimension(n);
        if (out_.size() != cube_size(n)) throw DimensionError("subcube graph needs 2^n neighbourhoods");
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::size_t vertex_count() const { return out_.size(); }
    [[nodiscard]] const Subcube& out(Word x) const { return out_[x]; }
    [[nodiscard]] bool has_arc(Word from, Word to) const { return out_[from].contains_raw(to); }
    [[nodiscard]] bool out_subset(Word y, Word x) const { return out_[y].is_subset_of(out_[x]); }

    template <class Visitor>
    void for_each_out(Word x, Visitor&& visit) const {
        out_[x].for_each_member(visit);
    }
    /// cursor walks the submasks of the free mask in increasing order.
    [[nodiscard]] std::optional<Word> next_out(Word x, std::uint64_t& cursor) const {
        const Subcube& c = out_[x];
        if (cursor > c.free_bits()) return std::nullopt;
        const Word sub = static_cast<Word>(cursor);
        const Word y = c.base_bits() | sub;
        if (sub == c.free_bits())
            cursor = std::uint64_t{c.free_bits()} + 1;
        else
            cursor = ((sub | ~c.free_bits()) + 1) & c.free_bits();
        return y;
    }

    [[nodiscard]] HypercubeGraph to_hypercube_graph() const {
        HypercubeGraph g(n_);
        for (Word x = 0; x < out_.size(); ++x) g.out(x) = VertexSet::of_subcube(out_[x]);
        return g;
    }

    friend bool operator==(const SubcubeGraph&, const SubcubeGraph&) = default;

private:
    int n_ = 1;
    std::vector<Subcube> out_;
};

/// GA(f) with subcube neighbourhoods [x, f(x)].
inline SubcubeGraph general_asynchronous_graph(const BooleanNetwork& f) {
    std::vector<Subcube> out;
    out.reserve(f.size());
    for (Word x = 0; x < f.size(); ++x) out.push_back(f.interval(x));
    return SubcubeGraph(f.n(), std::move(out));
}

enum class GraphKind { asynchronous, general };

/// A(f): x -> f^(i)(x) for each i, loops kept. GA(f): x -> every member of [x, f(x)].
inline HypercubeGraph build_graph(const BooleanNetwork& f, GraphKind kind) {
    const int n = f.n();
    HypercubeGraph g(n);
    for (Word x = 0; x < f.size(); ++x) {
        g.add_arc(x, x);
        const Word d = f.delta(x);
        if (kind == GraphKind::asynchronous) {
            for (Word rest = d; rest; rest &= rest - 1) g.add_arc(x, x ^ (rest & -rest));
        } else {
            f.interval(x).for_each_member([&](Word y) { g.add_arc(x, y); });
        }
    }
    return g;
}

class NotGeneralAsynchronous : public std::invalid_argument {
public:
    enum class Reason { not_reflexive, not_subcube };
    NotGeneralAsynchronous(Reason r, Word vertex, int n)
        : std::invalid_argument(std::string(r == Reason::not_reflexive ? "NotReflexive(" : "NotSubcube(") +
                                detail::format_bits(vertex, n) + ")"),
          reason(r),
          vertex(vertex) {}
    Reason reason;
    Word vertex;
};

/// Inverse of build_graph(·, general): f(x) = N^out(x) - x.
inline BooleanNetwork network_from_graph(const HypercubeGraph& g) {
    std::vector<Word> image(g.vertex_count());
    for (Word x = 0; x < image.size(); ++x) {
        if (!g.has_arc(x, x))
            throw NotGeneralAsynchronous(NotGeneralAsynchronous::Reason::not_reflexive, x, g.n());
        auto cube = g.out(x).as_subcube();
        if (!cube) throw NotGeneralAsynchronous(NotGeneralAsynchronous::Reason::not_subcube, x, g.n());
        image[x] = x ^ cube->free_bits();
    }
    return BooleanNetwork(g.n(), std::move(image));
}

struct SccResult {
    /// component[x] is the index of the component containing x.
    std::vector<std::uint32_t> component;
    /// Components in reverse topological order of the condensation (sinks first).
    std::vector<std::vector<Word>> members;
    std::vector<bool> terminal;
};

/// Iterative Tarjan. Graph needs vertex_count(), next_out(v, cursor) and
/// for_each_out(v, visit).
template <class Graph>
SccResult strongly_connected_components(const Graph& g) {
    const std::size_t size = g.vertex_count();
    constexpr std::uint32_t kUnvisited = ~std::uint32_t{0};
    std::vector<std::uint32_t> index(size, kUnvisited), low(size, 0);
    std::vector<bool> on_stack(size, false);
    std::vector<Word> stack;
    SccResult result;
    result.component.assign(size, kUnvisited);

    struct Frame {
        Word v;
        std::uint64_t cursor;
    };
    std::vector<Frame> call;
    std::uint32_t counter = 0;

    for (Word root = 0; root < size; ++root) {
        if (index[root] != kUnvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& fr = call.back();
            const Word v = fr.v;
            if (const std::optional<Word> next = g.next_out(v, fr.cursor)) {
                const Word w = *next;
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                const auto id = static_cast<std::uint32_t>(result.members.size());
                std::vector<Word> comp;
                Word w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    result.component[w] = id;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                result.members.push_back(std::move(comp));
            }
            call.pop_back();
            if (!call.empty()) {
                const Word parent = call.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }

    result.terminal.assign(result.members.size(), true);
    for (Word x = 0; x < size; ++x)
        g.for_each_out(x, [&](Word y) {
            if (result.component[x] != result.component[y]) result.terminal[result.component[x]] = false;
        });
    return result;
}

enum class GraphProperty { reflexive, symmetric, transitive, oriented, triangular, sink_terminal };

inline const char* to_string(GraphProperty p) {
    switch (p) {
    case GraphProperty::reflexive: return "reflexive";
    case GraphProperty::symmetric: return "symmetric";
    case GraphProperty::transitive: return "transitive";
    case GraphProperty::oriented: return "oriented";
    case GraphProperty::triangular: return "triangular";
    case GraphProperty::sink_terminal: return "sink-terminal";
    }
    return "?";
}

inline constexpr GraphProperty kAllGraphProperties[] = {
    GraphProperty::reflexive, GraphProperty::symmetric,  GraphProperty::transitive,
    GraphProperty::oriented,  GraphProperty::triangular, GraphProperty::sink_terminal};

template <class Graph>
bool graph_property(const Graph& g, GraphProperty p) {
    const Word size = static_cast<Word>(g.vertex_count());
    auto all_arcs = [&](auto&& pred) {
        for (Word x = 0; x < size; ++x) {
            bool ok = true;
            g.for_each_out(x, [&](Word y) {
                if (ok && !pred(x, y)) ok = false;
            });
            if (!ok) return false;
        }
        return true;
    };
    switch (p) {
    case GraphProperty::reflexive:
        for (Word x = 0; x < size; ++x)
            if (!g.has_arc(x, x)) return false;
        return true;
    case GraphProperty::symmetric:
        return all_arcs([&](Word x, Word y) { return g.has_arc(y, x); });
    case GraphProperty::oriented:
        return all_arcs([&](Word x, Word y) { return x == y || !g.has_arc(y, x); });
    case GraphProperty::transitive:
        return all_arcs([&](Word x, Word y) { return g.out_subset(y, x); });
    case GraphProperty::triangular: {
        const SccResult scc = strongly_connected_components(g);
        for (const auto& comp : scc.members)
            if (comp.size() > 1) return false;
        return true;
    }
    case GraphProperty::sink_terminal: {
        const SccResult scc = strongly_connected_components(g);
        for (std::size_t c = 0; c < scc.members.size(); ++c)
            if (scc.terminal[c] && scc.members[c].size() > 1) return false;
        return true;
    }
    }
    return false;
}

struct TransientPeriod {
    unsigned transient = 0;
    unsigned period = 1;
    friend bool operator==(const TransientPeriod&, const TransientPeriod&) = default;
};

/// Smallest t >= 0, p >= 1 with f^(t+p) = f^t, found by comparing whole
/// tables of successive powers. Throws if no repetition within max_steps.
inline TransientPeriod transient_and_period(const BooleanNetwork& f, std::size_t max_steps = 1u << 16) {
    struct TableHash {
        std::size_t operator()(const std::vector<Word>& t) const noexcept {
            std::size_t h = 1469598103934665603ull;
            for (Word w : t) h = (h ^ w) * 1099511628211ull;
            return h;
        }
    };
    std::unordered_map<std::vector<Word>, std::size_t, TableHash> seen;
    std::vector<Word> current(f.size());
    for (Word x = 0; x < current.size(); ++x) current[x] = x;
    for (std::size_t k = 0; k <= max_steps; ++k) {
        auto [it, inserted] = seen.emplace(current, k);
        if (!inserted)
            return {static_cast<unsigned>(it->second), static_cast<unsigned>(k - it->second)};
        for (Word& v : current) v = f.raw(v);
    }
    throw std::runtime_error("transient_and_period: no repetition within " + std::to_string(max_steps) +
                             " powers");
}

}  // namespace trapnet
