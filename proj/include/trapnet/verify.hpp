#pragma once

// Property sweeps over network populations. Each failed check is recorded
// with the offending network so it can be replayed from a truth table.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "trapnet/classes.hpp"
#include "trapnet/collections.hpp"
#include "trapnet/diagrams.hpp"
#include "trapnet/generators.hpp"
#include "trapnet/trapspaces.hpp"

namespace trapnet {

enum class Suite { theorems, closure, diagrams, all };

inline const char* to_string(Suite s) {
    switch (s) {
    case Suite::theorems: return "theorems";
    case Suite::closure: return "closure";
    case Suite::diagrams: return "diagrams";
    case Suite::all: return "all";
    }
    return "?";
}

struct Violation {
    std::string suite;
    std::string check;
    BooleanNetwork network;
};

struct VerifyResult {
    std::size_t networks = 0;
    std::size_t checks = 0;
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
};

inline constexpr int kMaxExhaustiveDimension = 2;

/// All (2^n)^(2^n) networks on B^n, n <= 2.
inline std::vector<BooleanNetwork> exhaustive_population(int n) {
    if (n < 1 || n > kMaxExhaustiveDimension)
        throw DimensionError("exhaustive populations need 1 <= n <= " + std::to_string(kMaxExhaustiveDimension));
    const std::size_t size = cube_size(n);
    std::size_t total = 1;
    for (std::size_t i = 0; i < size; ++i) total *= size;
    std::vector<BooleanNetwork> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<Word> image(size);
        std::size_t rest = code;
        for (std::size_t x = 0; x < size; ++x) {
            image[x] = static_cast<Word>(rest % size);
            rest /= size;
        }
        out.emplace_back(n, std::move(image));
    }
    return out;
}

/// Structured networks: commutative unions, negations on subcubes,
/// constants on arrangements, trapping closures, min-trapping extensions,
/// and the long-transient construction.
inline std::vector<BooleanNetwork> generated_population(int n, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<BooleanNetwork> out;
    out.reserve(count);
    if (n >= 3 && count > 0) out.push_back(long_transient_trapping(n));
    for (std::size_t i = out.size(); i < count; ++i) {
        const std::uint64_t s = rng();
        switch (i % 5) {
        case 0: out.push_back(random_commutative(n, s, 1 + static_cast<int>(s % 3))); break;
        case 1: out.push_back(random_negation_on_subcubes(n, s)); break;
        case 2: out.push_back(random_constant_on_arrangements(n, s)); break;
        case 3: out.push_back(trapping_closure(random_network(n, s))); break;
        default: out.push_back(min_trapping_extension(random_network(n, s))); break;
        }
    }
    return out;
}

/// m uniform random networks followed by m/5 generated ones.
inline std::vector<BooleanNetwork> sampled_population(int n, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<BooleanNetwork> out;
    out.reserve(m + m / 5);
    for (std::size_t i = 0; i < m; ++i) out.push_back(random_network(n, rng()));
    std::vector<BooleanNetwork> gen = generated_population(n, m / 5, rng());
    out.insert(out.end(), gen.begin(), gen.end());
    return out;
}

namespace detail {

class Recorder {
public:
    Recorder(VerifyResult& result, const char* suite) : result_(result), suite_(suite) {}

    void check(bool ok, const char* what, const BooleanNetwork& f) {
        ++result_.checks;
        if (!ok) result_.violations.push_back({suite_, what, f});
    }
    void check(bool ok, const std::string& what, const BooleanNetwork& f) {
        ++result_.checks;
        if (!ok) result_.violations.push_back({suite_, what, f});
    }

private:
    VerifyResult& result_;
    std::string suite_;
};

inline bool implies(bool a, bool b) { return !a || b; }

inline bool all_true(const std::vector<bool>& v) {
    return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

/// Every point on a cycle of f is fixed by f^2.
inline bool periodic_points_have_period_at_most_two(const BooleanNetwork& f) {
    for (Word x = 0; x < f.size(); ++x) {
        Word y = f.raw(x);
        bool periodic = y == x;
        for (std::size_t k = 1; k < f.size() && !periodic; ++k) {
            y = f.raw(y);
            periodic = y == x;
        }
        if (periodic && f.raw(f.raw(x)) != x) return false;
    }
    return true;
}

/// For y in [x, f(x)]: d(x,y) >= δx - δy >= 0, equality iff f(y) = f(x).
inline bool delta_lemma_holds(const BooleanNetwork& f) {
    for (Word x = 0; x < f.size(); ++x) {
        const int dx = std::popcount(f.delta(x));
        bool ok = true;
        f.interval(x).for_each_member([&](Word y) {
            const int dy = std::popcount(f.delta(y));
            const int dist = std::popcount(x ^ y);
            if (dx - dy < 0 || dist < dx - dy) ok = false;
            if ((dist == dx - dy) != (f.raw(y) == f.raw(x))) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

inline bool graph_union_equals(const HypercubeGraph& u, const HypercubeGraph& a, const HypercubeGraph& b) {
    for (Word x = 0; x < u.vertex_count(); ++x) {
        VertexSet s = a.out(x);
        s |= b.out(x);
        if (!(s == u.out(x))) return false;
    }
    return true;
}

inline void theorem_checks(Recorder& r, const BooleanNetwork& f, const BooleanNetwork& other,
                           const ClassReport& c) {
    const int n = f.n();
    if (n <= kMaxAlternateDimension)
        for (Theorem t : kAllTheorems) {
            const std::vector<bool> v = check_alternate_definitions(f, t);
            r.check(is_constant(v), std::string("alternate definitions constant: ") + to_string(t), f);
        }

    r.check(implies(c.marseille, c.commutative), "marseille => commutative", f);
    r.check(implies(c.commutative, c.trapping), "commutative => trapping", f);
    r.check(implies(c.lille, c.commutative), "lille => commutative", f);
    r.check(implies(c.globally_idempotent, c.trapping), "globally idempotent => trapping", f);
    r.check(implies(c.commutative, c.bijective == c.locally_bijective && c.bijective == c.globally_bijective),
            "commutative: bijective <=> locally <=> globally bijective", f);
    r.check(implies(c.commutative, c.idempotent == c.locally_idempotent && c.idempotent == c.globally_idempotent),
            "commutative: idempotent <=> locally <=> globally idempotent", f);
    r.check(implies(c.commutative, c.dynamically_local), "commutative => dynamically local", f);

    const TransientPeriod tp = transient_and_period(f);
    r.check(c.dynamically_local == (tp.transient <= 1 && tp.period <= 2),
            "dynamically local <=> transient <= 1 and period <= 2", f);

    const GraphPropertyTable g = graph_property_table(f);
    r.check(c.marseille == g.ga(GraphProperty::symmetric) && c.marseille == c.globally_involutive,
            "marseille <=> symmetric GA <=> globally involutive", f);
    r.check(implies(c.trapping && c.locally_bijective, c.marseille), "trapping and locally bijective => marseille", f);
    r.check(implies(c.trapping && c.trapspace_fp, c.fixable), "trapping and trapspace-FP => fixable", f);
    r.check(implies(c.commutative && c.fixable, c.lille), "commutative and fixable => lille", f);

    if (c.trapping) {
        r.check(power(f, static_cast<unsigned>(n + 2)) == power(f, static_cast<unsigned>(n)), "trapping: f^(n+2) = f^n",
                f);
        r.check(periodic_points_have_period_at_most_two(f), "trapping: periodic points have period <= 2", f);
    }
    if (c.commutative) r.check(delta_lemma_holds(f), "commutative: delta lemma", f);

    const BooleanNetwork ft = trapping_closure(f);
    const BooleanNetwork fm = min_trapping_extension(f);
    if (n <= kMaxEnumerationDimension) {
        r.check(all_true(trapspace_equivalent(f, ft)), "trapspace equivalent to its trapping closure", f);
        r.check(is_constant(trapspace_equivalent(f, other)), "trapspace equivalence conditions constant", f);
    }
    r.check(all_true(min_trapspace_equivalent(f, fm)), "min-trapspace equivalent to its min-trapping extension", f);
    r.check(is_constant(min_trapspace_equivalent(f, other)), "min-trapspace equivalence conditions constant", f);
}

inline void closure_checks(Recorder& r, const BooleanNetwork& f, const BooleanNetwork& other,
                           const ClassReport& c) {
    const int n = f.n();
    const BooleanNetwork ft = trapping_closure(f);
    r.check(order_leq(f, ft), "f <= f^T", f);
    r.check(trapping_closure(ft) == ft, "(f^T)^T = f^T", f);

    const BooleanNetwork up = join(f, other);
    const BooleanNetwork down = meet(f, other);
    r.check(order_leq(f, up) && order_leq(down, f), "join and meet bound f", f);
    r.check(order_leq(ft, trapping_closure(up)) && order_leq(trapping_closure(down), ft),
            "closure monotone along join and meet", f);
    const HypercubeGraph a = build_graph(f, GraphKind::asynchronous);
    const HypercubeGraph a_other = build_graph(other, GraphKind::asynchronous);
    r.check(graph_union_equals(build_graph(up, GraphKind::asynchronous), a, a_other), "A(f join g) = A(f) u A(g)", f);
    r.check(order_leq(f, other) == a.is_subgraph_of(a_other) &&
                order_leq(f, other) == build_graph(f, GraphKind::general).is_subgraph_of(
                                           build_graph(other, GraphKind::general)),
            "order <=> A inclusion <=> GA inclusion", f);

    const BooleanNetwork fm = min_trapping_extension(f);
    r.check(order_leq(f, fm) && order_leq(ft, fm), "f <= f^T <= f^M", f);
    r.check(min_trapping_extension(fm) == fm, "(f^M)^M = f^M", f);
    const MinimalTrapspaces mt = minimal_trapspaces(f);
    r.check(minimal_trapspaces(fm).minimal == mt.minimal, "MT(f^M) = MT(f)", f);

    // Min-ideal bijection.
    r.check(is_min_ideal(mt.minimal), "MT(f) is min-ideal", f);
    r.check(minimal_trapspaces(realize(mt.minimal)).minimal == mt.minimal, "MT(F(N)) = N", f);
    r.check(realize(minimal_trapspaces(fm).minimal) == fm, "F(MT(g)) = g for min-trapping g", f);
    r.check(c.min_trapping == (f == fm), "min-trapping <=> f = f^M", f);

    const SubcubeCollection pt = principal_trapspaces(f);
    r.check(implies(c.commutative, is_convex(pt)), "commutative => PT(f) convex", f);
    if (is_convex(pt)) r.check(detail::is_commutative_pairwise(realize(pt)), "convex PT => F(PT) commutative", f);

    if (n > kMaxEnumerationDimension) return;
    const SubcubeCollection all = enumerate_trapspaces(f);
    r.check(all == enumerate_trapspaces(ft) && pt == principal_trapspaces(ft), "T(f) = T(f^T), PT(f) = PT(f^T)", f);

    // Three-way equivalence on the trapping network g = f^T.
    const BooleanNetwork& g = ft;
    const SubcubeCollection& q = pt;
    const SubcubeCollection& j = all;
    r.check(realize(q) == g && realize(j) == g, "F(PT(g)) = g, F(T(g)) = g", f);
    r.check(is_pre_principal(q) && mu_reduction(q) == q, "PT(g) pre-principal, mu(PT) = PT", f);
    r.check(is_pre_ideal(j), "T(g) pre-ideal", f);
    const BooleanNetwork fq = realize(q);
    const BooleanNetwork fj = realize(j);
    r.check(principal_trapspaces(fq) == q && lambda_closure(q) == enumerate_trapspaces(fq),
            "PT(F(Q)) = Q, lambda(Q) = T(F(Q))", f);
    r.check(enumerate_trapspaces(fj) == j && mu_reduction(j) == principal_trapspaces(fj),
            "T(F(J)) = J, mu(J) = PT(F(J))", f);
    r.check(mu_reduction(lambda_closure(q)) == q && lambda_closure(mu_reduction(j)) == j,
            "mu(lambda(Q)) = Q, lambda(mu(J)) = J", f);
}

}  // namespace detail

struct VerifyOptions {
    Suite suite = Suite::all;
    /// Directory holding fixtures/<diagram>/<label>.tt; skipped when empty.
    std::optional<std::filesystem::path> fixtures;
};

/// Runs the chosen suites over the population. Pairwise checks use each
/// network's successor (cyclically) as the second argument.
inline VerifyResult verify_population(std::span<const BooleanNetwork> population, const VerifyOptions& options) {
    VerifyResult result;
    result.networks = population.size();
    const bool theorems = options.suite == Suite::theorems || options.suite == Suite::all;
    const bool closure = options.suite == Suite::closure || options.suite == Suite::all;
    const bool diagrams = options.suite == Suite::diagrams || options.suite == Suite::all;

    std::vector<NetworkProfile> profiles;
    profiles.reserve(population.size());
    for (const BooleanNetwork& f : population) profiles.push_back(profile_network(f));

    detail::Recorder theorem_rec(result, "theorems");
    detail::Recorder closure_rec(result, "closure");
    for (std::size_t k = 0; k < population.size(); ++k) {
        const BooleanNetwork& f = population[k];
        const BooleanNetwork& other = population[(k + 1) % population.size()];
        if (theorems) detail::theorem_checks(theorem_rec, f, other, profiles[k].classes);
        if (closure) detail::closure_checks(closure_rec, f, other, profiles[k].classes);
    }

    if (diagrams) {
        for (const DiagramSpec& d : all_diagrams()) {
            for (DiagramViolation& v : verify_diagram_profiles(d, population, profiles))
                result.violations.push_back({"diagrams", d.id + ": " + v.what, std::move(v.network)});
            result.checks += population.size() * d.edges.size();
            if (options.fixtures) {
                const FixtureSet fx = load_diagram_fixtures(d, *options.fixtures);
                for (DiagramViolation& v : verify_counterexamples(d, fx))
                    result.violations.push_back({"diagrams", d.id + ": " + v.what, std::move(v.network)});
                result.checks += d.counterexamples.size();
            }
        }
    }

    std::stable_sort(result.violations.begin(), result.violations.end(), [](const Violation& a, const Violation& b) {
        if (a.network != b.network) return a.network < b.network;
        if (a.suite != b.suite) return a.suite < b.suite;
        return a.check < b.check;
    });
    return result;
}

/// All 2^(3^n) collections of subcubes of B^n; n <= 2.
inline std::vector<SubcubeCollection> exhaustive_collections(int n) {
    if (n < 1 || n > kMaxExhaustiveDimension)
        throw DimensionError("exhaustive collections need 1 <= n <= " + std::to_string(kMaxExhaustiveDimension));
    std::vector<Subcube> cubes;
    detail::for_each_subcube(n, [&](const Subcube& c) { cubes.push_back(c); });
    std::vector<SubcubeCollection> out;
    const std::uint32_t total = std::uint32_t{1} << cubes.size();
    out.reserve(total);
    for (std::uint32_t pick = 0; pick < total; ++pick) {
        std::vector<Subcube> members;
        for (std::size_t i = 0; i < cubes.size(); ++i)
            if ((pick >> i) & 1u) members.push_back(cubes[i]);
        out.emplace_back(n, std::move(members));
    }
    return out;
}

struct CollectionViolation {
    std::string check;
    SubcubeCollection collection;
};

/// Definitional cross-checks and round trips on every collection.
inline std::vector<CollectionViolation> verify_collections(std::span<const SubcubeCollection> collections) {
    std::vector<CollectionViolation> out;
    auto check = [&](bool ok, const char* what, const SubcubeCollection& a) {
        if (!ok) out.push_back({what, a});
    };
    for (const SubcubeCollection& a : collections) {
        const CollectionFlags flags = classify_collection(a);
        check(flags.pre_principal == (mu_reduction(a) == a), "pre-principal <=> mu(A) = A", a);
        const BooleanNetwork f = realize(a);
        if (flags.pre_principal) {
            check(principal_trapspaces(f) == a, "PT(F(Q)) = Q", a);
            check(lambda_closure(a) == enumerate_trapspaces(f), "lambda(Q) = T(F(Q))", a);
            check(mu_reduction(lambda_closure(a)) == a, "mu(lambda(Q)) = Q", a);
            check(detail::is_trapping_ga(f), "F(Q) trapping", a);
            if (flags.convex) check(detail::is_commutative_pairwise(f), "convex Q => F(Q) commutative", a);
        }
        if (flags.pre_ideal) {
            check(enumerate_trapspaces(f) == a, "T(F(J)) = J", a);
            check(mu_reduction(a) == principal_trapspaces(f), "mu(J) = PT(F(J))", a);
            check(lambda_closure(mu_reduction(a)) == a, "lambda(mu(J)) = J", a);
        }
        if (flags.min_ideal && !a.empty())
            check(minimal_trapspaces(f).minimal == a, "MT(F(N)) = N", a);
    }
    return out;
}

}  // namespace trapnet
