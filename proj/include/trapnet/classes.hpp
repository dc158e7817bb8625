#pragma once

// Network classes, the alternate-definition checkers, and the two
// equivalence tests on pairs of networks.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "trapnet/core.hpp"
#include "trapnet/dynamics.hpp"
#include "trapnet/trapspaces.hpp"

namespace trapnet {

inline constexpr int kMaxGlobalDimension = 16;
inline constexpr int kMaxAlternateDimension = 8;

namespace detail {

/// f^(S)(x) on raw words.
inline Word apply_subset(const BooleanNetwork& f, Word s, Word x) { return x ^ (f.delta(x) & s); }

inline bool table_is_bijection(std::span<const Word> t) {
    std::vector<bool> hit(t.size(), false);
    for (Word v : t) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}
inline bool table_is_involution(std::span<const Word> t) {
    for (Word x = 0; x < t.size(); ++x)
        if (t[t[x]] != x) return false;
    return true;
}
inline bool table_is_idempotent(std::span<const Word> t) {
    for (Word x = 0; x < t.size(); ++x)
        if (t[t[x]] != t[x]) return false;
    return true;
}

/// pred(table of f^(i)) for every coordinate i.
template <class Pred>
bool locally(const BooleanNetwork& f, Pred&& pred) {
    std::vector<Word> t(f.size());
    for (int i = 0; i < f.n(); ++i) {
        const Word s = Word{1} << i;
        for (Word x = 0; x < t.size(); ++x) t[x] = apply_subset(f, s, x);
        if (!pred(std::span<const Word>(t))) return false;
    }
    return true;
}

/// pred(table of f^(S)) for every S ⊆ [n], S visited in Gray-code order so
/// each table differs from the previous one in a single coordinate.
template <class Pred>
bool globally(const BooleanNetwork& f, Pred&& pred) {
    if (f.n() > kMaxGlobalDimension)
        throw DimensionError("globally-P checks need n <= " + std::to_string(kMaxGlobalDimension));
    std::vector<Word> t(f.size());
    for (Word x = 0; x < t.size(); ++x) t[x] = x;
    if (!pred(std::span<const Word>(t))) return false;
    const std::uint64_t subsets = std::uint64_t{1} << f.n();
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const Word bit = Word{1} << std::countr_zero(k);
        for (Word x = 0; x < t.size(); ++x) t[x] ^= f.delta(x) & bit;
        if (!pred(std::span<const Word>(t))) return false;
    }
    return true;
}

/// visit(x, y) for every x and y ∈ [x, f(x)]; stops at the first false.
template <class Visit>
bool all_interval_pairs(const BooleanNetwork& f, Visit&& visit) {
    for (Word x = 0; x < f.size(); ++x) {
        const Subcube ix = f.interval(x);
        bool ok = true;
        ix.for_each_member([&](Word y) {
            if (ok && !visit(x, y, ix)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

/// visit(S, T) over all 4^n pairs; stops at the first false.
template <class Visit>
bool all_subset_pairs(const BooleanNetwork& f, Visit&& visit) {
    const Word all = full_mask(f.n());
    for (Word s = 0;; ++s) {
        for (Word t = 0;; ++t) {
            if (!visit(s, t)) return false;
            if (t == all) break;
        }
        if (s == all) break;
    }
    return true;
}

/// g ⊑ h at x, with g and h given by their images at x.
inline bool leq_at(Word x, Word gx, Word hx) { return ((x ^ gx) & ~(x ^ hx)) == 0; }

inline bool is_commutative_pairwise(const BooleanNetwork& f) {
    for (int i = 0; i < f.n(); ++i)
        for (int j = i + 1; j < f.n(); ++j) {
            const Word si = Word{1} << i, sj = Word{1} << j;
            for (Word x = 0; x < f.size(); ++x)
                if (apply_subset(f, sj, apply_subset(f, si, x)) != apply_subset(f, si, apply_subset(f, sj, x)))
                    return false;
        }
    return true;
}

/// GA(f) transitive, read on the subcube neighbourhoods [x, f(x)].
inline bool is_trapping_ga(const BooleanNetwork& f) {
    return graph_property(general_asynchronous_graph(f), GraphProperty::transitive);
}

}  // namespace detail

struct ClassReport {
    bool trapping = false;
    bool commutative = false;
    bool marseille = false;
    bool lille = false;
    bool globally_idempotent = false;
    bool bijective = false;
    bool locally_bijective = false;
    bool globally_bijective = false;
    bool involutive = false;
    bool locally_involutive = false;
    bool globally_involutive = false;
    bool idempotent = false;
    bool locally_idempotent = false;
    bool dynamically_local = false;
    bool dpt = false;
    bool fixable = false;
    bool trapspace_fp = false;
    bool interval_fp = false;
    bool interval_ufp = false;
    bool min_trapping = false;

    /// (name, value) in declaration order.
    [[nodiscard]] std::vector<std::pair<const char*, bool>> flags() const {
        return {{"trapping", trapping},
                {"commutative", commutative},
                {"marseille", marseille},
                {"lille", lille},
                {"globally_idempotent", globally_idempotent},
                {"bijective", bijective},
                {"locally_bijective", locally_bijective},
                {"globally_bijective", globally_bijective},
                {"involutive", involutive},
                {"locally_involutive", locally_involutive},
                {"globally_involutive", globally_involutive},
                {"idempotent", idempotent},
                {"locally_idempotent", locally_idempotent},
                {"dynamically_local", dynamically_local},
                {"dpt", dpt},
                {"fixable", fixable},
                {"trapspace_fp", trapspace_fp},
                {"interval_fp", interval_fp},
                {"interval_ufp", interval_ufp},
                {"min_trapping", min_trapping}};
    }

    friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

inline bool has_fixed_point_in(const BooleanNetwork& f, const Subcube& cube) {
    bool found = false;
    cube.for_each_member([&](Word y) {
        if (!found && f.raw(y) == y) found = true;
    });
    return found;
}

inline ClassReport classify_network(const BooleanNetwork& f) {
    using detail::table_is_bijection, detail::table_is_idempotent, detail::table_is_involution;
    ClassReport r;
    const std::span<const Word> table = f.table();

    r.trapping = detail::is_trapping_ga(f);
    r.commutative = detail::is_commutative_pairwise(f);
    r.bijective = table_is_bijection(table);
    r.involutive = table_is_involution(table);
    r.idempotent = table_is_idempotent(table);
    r.marseille = r.commutative && r.bijective;
    r.lille = r.commutative && r.idempotent;
    r.locally_bijective = detail::locally(f, table_is_bijection);
    r.locally_involutive = detail::locally(f, table_is_involution);
    r.locally_idempotent = detail::locally(f, table_is_idempotent);
    r.globally_bijective = detail::globally(f, table_is_bijection);
    r.globally_involutive = detail::globally(f, table_is_involution);
    r.globally_idempotent = detail::globally(f, table_is_idempotent);
    r.dynamically_local = power(f, 3) == f;

    const std::vector<Subcube> pt = principal_trapspace_table(f);
    r.dpt = SubcubeCollection(f.n(), pt).size() == pt.size();
    r.fixable = graph_property(build_graph(f, GraphKind::asynchronous), GraphProperty::sink_terminal);

    // Every trapspace contains a minimal one, so above the sweep cap the
    // minimal trapspaces decide the question.
    if (f.n() <= kMaxEnumerationDimension) {
        r.trapspace_fp = true;
        for (const Subcube& t : enumerate_trapspaces(f))
            if (!has_fixed_point_in(f, t)) {
                r.trapspace_fp = false;
                break;
            }
    } else {
        r.trapspace_fp = true;
        for (const Subcube& t : minimal_trapspaces(f).minimal)
            if (!has_fixed_point_in(f, t)) r.trapspace_fp = false;
    }

    r.interval_fp = true;
    r.interval_ufp = true;
    for (Word x = 0; x < f.size() && r.interval_fp; ++x) {
        int count = 0;
        f.interval(x).for_each_member([&](Word y) {
            if (f.raw(y) == y) ++count;
        });
        if (count == 0) r.interval_fp = false;
        if (count != 1) r.interval_ufp = false;
    }
    if (!r.interval_fp) r.interval_ufp = false;

    r.min_trapping = min_trapping_extension(f) == f;
    return r;
}

/// Properties of the three graphs A(f), GA(f), TG(f).
struct GraphPropertyTable {
    std::array<bool, std::size(kAllGraphProperties)> asynchronous{};
    std::array<bool, std::size(kAllGraphProperties)> general{};
    std::array<bool, std::size(kAllGraphProperties)> trapping{};

    [[nodiscard]] static std::size_t slot(GraphProperty p) { return static_cast<std::size_t>(p); }
    [[nodiscard]] bool a(GraphProperty p) const { return asynchronous[slot(p)]; }
    [[nodiscard]] bool ga(GraphProperty p) const { return general[slot(p)]; }
    [[nodiscard]] bool tg(GraphProperty p) const { return trapping[slot(p)]; }
};

inline GraphPropertyTable graph_property_table(const BooleanNetwork& f) {
    GraphPropertyTable t;
    const HypercubeGraph a = build_graph(f, GraphKind::asynchronous);
    const SubcubeGraph ga = general_asynchronous_graph(f);
    const SubcubeGraph tg = trapping_subcube_graph(f);
    for (GraphProperty p : kAllGraphProperties) {
        t.asynchronous[GraphPropertyTable::slot(p)] = graph_property(a, p);
        t.general[GraphPropertyTable::slot(p)] = graph_property(ga, p);
        t.trapping[GraphPropertyTable::slot(p)] = graph_property(tg, p);
    }
    return t;
}

enum class Theorem { trapping7, commutative3, marseille4, lille4, globally_idempotent3, sink_terminal5 };

inline const char* to_string(Theorem t) {
    switch (t) {
    case Theorem::trapping7: return "trapping7";
    case Theorem::commutative3: return "commutative3";
    case Theorem::marseille4: return "marseille4";
    case Theorem::lille4: return "lille4";
    case Theorem::globally_idempotent3: return "globally_idempotent3";
    case Theorem::sink_terminal5: return "sink_terminal5";
    }
    return "?";
}

inline constexpr Theorem kAllTheorems[] = {Theorem::trapping7,  Theorem::commutative3,
                                           Theorem::marseille4, Theorem::lille4,
                                           Theorem::globally_idempotent3, Theorem::sink_terminal5};

namespace detail {

/// Searches g ⊑ f with g^T = f: all candidates when there are at most 256,
/// otherwise f itself plus a fixed-seed random sample.
inline bool is_trapping_closure_of_something(const BooleanNetwork& f) {
    int free_bits = 0;
    for (Word x = 0; x < f.size(); ++x) free_bits += std::popcount(f.delta(x));
    auto closes_to_f = [&](const BooleanNetwork& g) { return trapping_closure(g) == f; };
    if (free_bits <= 8) {
        const std::uint32_t total = std::uint32_t{1} << free_bits;
        for (std::uint32_t pick = 0; pick < total; ++pick) {
            std::vector<Word> image(f.size());
            int used = 0;
            for (Word x = 0; x < f.size(); ++x) {
                Word d = 0;
                for (Word rest = f.delta(x); rest; rest &= rest - 1)
                    if ((pick >> used++) & 1u) d |= rest & -rest;
                image[x] = x ^ d;
            }
            if (closes_to_f(BooleanNetwork(f.n(), std::move(image)))) return true;
        }
        return false;
    }
    if (closes_to_f(f)) return true;
    std::mt19937_64 rng(0x5eedULL);
    for (int round = 0; round < 32; ++round) {
        std::vector<Word> image(f.size());
        for (Word x = 0; x < f.size(); ++x) image[x] = x ^ (f.delta(x) & static_cast<Word>(rng()));
        if (closes_to_f(BooleanNetwork(f.n(), std::move(image)))) return true;
    }
    return false;
}

/// f is a union of full negations on pairwise disjoint subcubes. The
/// subcubes are forced: they are the intervals [x, f(x)].
inline bool is_negation_on_subcubes(const BooleanNetwork& f) {
    std::vector<Subcube> cubes;
    for (Word x = 0; x < f.size(); ++x)
        if (f.delta(x)) cubes.push_back(f.interval(x));
    const SubcubeCollection distinct(f.n(), std::move(cubes));
    const auto& m = distinct.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t k = i + 1; k < m.size(); ++k)
            if (m[i].intersects(m[k])) return false;
    std::vector<Word> image(f.size());
    for (Word x = 0; x < f.size(); ++x) image[x] = x;
    for (const Subcube& c : m) c.for_each_member([&](Word y) { image[y] = y ^ c.free_bits(); });
    return BooleanNetwork(f.n(), std::move(image)) == f;
}

/// f is constant on the contents of disjoint arrangements whose common
/// intersection holds the constant. The contents are forced to be the
/// non-trivial fibres f^{-1}(t), and such a fibre is a valid content iff it
/// contains [x, t] for each of its members x.
inline bool is_constant_on_arrangements(const BooleanNetwork& f) {
    for (Word x = 0; x < f.size(); ++x) {
        const Word t = f.raw(x);
        if (f.raw(t) != t) return false;
        bool ok = true;
        f.interval(x).for_each_member([&](Word y) {
            if (ok && f.raw(y) != t) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

}  // namespace detail

/// Each condition of the chosen theorem, evaluated on its own.
inline std::vector<bool> check_alternate_definitions(const BooleanNetwork& f, Theorem theorem) {
    if (f.n() > kMaxAlternateDimension)
        throw DimensionError("alternate-definition checks need n <= " + std::to_string(kMaxAlternateDimension));
    using detail::all_interval_pairs, detail::all_subset_pairs, detail::apply_subset, detail::leq_at;
    const Word size = static_cast<Word>(f.size());

    // f^(A) ⊑ f^(B) (or equality) as functions of raw masks A, B.
    auto upd = [&](Word s, Word x) { return apply_subset(f, s, x); };
    auto pair_image = [&](Word s, Word t, Word x) { return upd(t, upd(s, x)); };

    switch (theorem) {
    case Theorem::trapping7: {
        const std::vector<Subcube> pt = principal_trapspace_table(f);
        const HypercubeGraph ga = build_graph(f, GraphKind::general);
        return {
            graph_property(ga, GraphProperty::transitive),
            all_interval_pairs(f, [&](Word, Word y, const Subcube& ix) { return f.interval(y).is_subset_of(ix); }),
            [&] {
                for (Word x = 0; x < size; ++x)
                    if (f.interval(x) != pt[x]) return false;
                return true;
            }(),
            f == trapping_closure(f),
            detail::is_trapping_closure_of_something(f),
            trapping_graph(f) == ga,
            all_subset_pairs(f, [&](Word s, Word t) {
                for (Word x = 0; x < size; ++x)
                    if (!leq_at(x, pair_image(s, t, x), upd(s | t, x))) return false;
                return true;
            }),
        };
    }
    case Theorem::commutative3:
        return {
            detail::is_commutative_pairwise(f),
            all_interval_pairs(f,
                               [&](Word x, Word y, const Subcube& ix) {
                                   const Subcube iy = f.interval(y);
                                   return span_raw(f.n(), y, f.raw(x)).is_subset_of(iy) && iy.is_subset_of(ix);
                               }),
            all_subset_pairs(f,
                             [&](Word s, Word t) {
                                 for (Word x = 0; x < size; ++x) {
                                     const Word st = pair_image(s, t, x);
                                     if (!leq_at(x, upd(s ^ t, x), st) || !leq_at(x, st, upd(s | t, x))) return false;
                                 }
                                 return true;
                             }),
        };
    case Theorem::marseille4:
        return {
            detail::is_commutative_pairwise(f) && detail::table_is_bijection(f.table()),
            detail::is_negation_on_subcubes(f),
            all_interval_pairs(f, [&](Word, Word y, const Subcube& ix) { return f.interval(y) == ix; }),
            all_subset_pairs(f,
                             [&](Word s, Word t) {
                                 for (Word x = 0; x < size; ++x)
                                     if (upd(s ^ t, x) != pair_image(s, t, x)) return false;
                                 return true;
                             }),
        };
    case Theorem::lille4:
        return {
            detail::is_commutative_pairwise(f) && detail::table_is_idempotent(f.table()),
            detail::is_constant_on_arrangements(f),
            all_interval_pairs(
                f, [&](Word x, Word y, const Subcube&) { return f.interval(y) == span_raw(f.n(), y, f.raw(x)); }),
            all_subset_pairs(f,
                             [&](Word s, Word t) {
                                 for (Word x = 0; x < size; ++x)
                                     if (pair_image(s, t, x) != upd(s | t, x)) return false;
                                 return true;
                             }),
        };
    case Theorem::globally_idempotent3: {
        bool idem = true;
        for (Word s = 0; idem; ++s) {
            for (Word x = 0; x < size && idem; ++x)
                if (pair_image(s, s, x) != upd(s, x)) idem = false;
            if (s == full_mask(f.n())) break;
        }
        return {
            idem,
            all_interval_pairs(f,
                               [&](Word x, Word y, const Subcube&) {
                                   return f.interval(y).is_subset_of(span_raw(f.n(), y, f.raw(x)));
                               }),
            all_subset_pairs(f,
                             [&](Word s, Word t) {
                                 for (Word x = 0; x < size; ++x)
                                     if (!leq_at(x, upd(s & t, x), pair_image(s, t, x))) return false;
                                 return true;
                             }),
        };
    }
    case Theorem::sink_terminal5: {
        const std::vector<Subcube> pt = principal_trapspace_table(f);
        const MinimalTrapspaces mt = minimal_trapspaces(f);
        bool smaller = true;
        for (Word x = 0; x < size && smaller; ++x) {
            if (f.raw(x) == x) continue;
            bool found = false;
            pt[x].for_each_member([&](Word y) {
                if (!found && pt[y] != pt[x] && pt[y].is_subset_of(pt[x])) found = true;
            });
            smaller = found;
        }
        bool principal_fp = true;
        for (Word x = 0; x < size && principal_fp; ++x) principal_fp = has_fixed_point_in(f, pt[x]);
        bool all_fp = true;
        for (const Subcube& t : enumerate_trapspaces(f))
            if (!has_fixed_point_in(f, t)) {
                all_fp = false;
                break;
            }
        return {
            graph_property(trapping_graph(f), GraphProperty::sink_terminal),
            smaller,
            mt.min_configs == fixed_points(f),
            principal_fp,
            all_fp,
        };
    }
    }
    return {};
}

/// PT equal; T equal; T_f = T_g pointwise; TG equal; f^T = g^T.
inline std::vector<bool> trapspace_equivalent(const BooleanNetwork& f, const BooleanNetwork& g) {
    require_same_dimension(f.n(), g.n());
    const std::vector<Subcube> tf = principal_trapspace_table(f);
    const std::vector<Subcube> tg = principal_trapspace_table(g);
    return {
        principal_trapspaces(f) == principal_trapspaces(g),
        enumerate_trapspaces(f) == enumerate_trapspaces(g),
        tf == tg,
        trapping_graph(f) == trapping_graph(g),
        trapping_closure(f) == trapping_closure(g),
    };
}

/// MT equal; M equal with T_f = T_g on M; T_f = T_g on M(f) ∪ M(g); f^M = g^M.
inline std::vector<bool> min_trapspace_equivalent(const BooleanNetwork& f, const BooleanNetwork& g) {
    require_same_dimension(f.n(), g.n());
    const MinimalTrapspaces mf = minimal_trapspaces(f);
    const MinimalTrapspaces mg = minimal_trapspaces(g);
    auto agree_on = [&](const std::vector<Word>& points) {
        for (Word x : points)
            if (principal_trapspace_raw(f, x) != principal_trapspace_raw(g, x)) return false;
        return true;
    };
    return {
        mf.minimal == mg.minimal,
        mf.min_configs == mg.min_configs && agree_on(mf.min_configs),
        agree_on(mf.min_configs) && agree_on(mg.min_configs),
        min_trapping_extension(f) == min_trapping_extension(g),
    };
}

/// True iff every entry is equal.
inline bool is_constant(const std::vector<bool>& v) {
    for (bool b : v)
        if (b != v.front()) return false;
    return true;
}

}  // namespace trapnet
