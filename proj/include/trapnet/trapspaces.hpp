#pragma once

// Principal, minimal and full trapspaces; trapping closure and trapping
// graph; min-trapping extension.

#include <optional>
#include <string>
#include <vector>

#include "trapnet/core.hpp"
#include "trapnet/dynamics.hpp"
#include "trapnet/subcube_collection.hpp"

namespace trapnet {

inline constexpr int kMaxEnumerationDimension = 13;

namespace detail {

/// Grows T_0 = {x}, T_i = [T_{i-1} ∪ f(T_{i-1})] evaluating f only on the
/// members added in the previous round. stop(y) is called once for every
/// member y as it joins, x included; returning true abandons the growth.
template <class Stop>
std::optional<Subcube> grow_principal(const BooleanNetwork& f, Word x, Stop&& stop) {
    if (stop(x)) return std::nullopt;
    Word free = 0;
    std::vector<Word> frontier{x};
    while (!frontier.empty()) {
        Word grown = free;
        for (Word y : frontier) grown |= f.raw(y) ^ x;
        frontier.clear();
        if (grown == free) break;
        const Word added = grown & ~free;
        Word sub = 0;
        do {
            if (sub & added) {
                if (stop(x ^ sub)) return std::nullopt;
                frontier.push_back(x ^ sub);
            }
            sub = (sub - grown) & grown;
        } while (sub != 0);
        free = grown;
    }
    return Subcube(f.n(), free, x);
}

inline void require_enumerable(int n) {
    if (n > kMaxEnumerationDimension)
        throw DimensionError("dimension " + std::to_string(n) + " too large for a 3^n subcube sweep (max " +
                             std::to_string(kMaxEnumerationDimension) + ")");
}

}  // namespace detail

/// T_f(x): least trapspace of f containing x.
inline Subcube principal_trapspace(const BooleanNetwork& f, Configuration x) {
    require_same_dimension(f.n(), x.n);
    return *detail::grow_principal(f, x.bits, [](Word) { return false; });
}

inline Subcube principal_trapspace_raw(const BooleanNetwork& f, Word x) {
    return *detail::grow_principal(f, x, [](Word) { return false; });
}

/// T_f(x) for every x, indexed by configuration word.
inline std::vector<Subcube> principal_trapspace_table(const BooleanNetwork& f) {
    std::vector<Subcube> out;
    out.reserve(f.size());
    for (Word x = 0; x < f.size(); ++x) out.push_back(principal_trapspace_raw(f, x));
    return out;
}

/// PT(f).
inline SubcubeCollection principal_trapspaces(const BooleanNetwork& f) {
    return SubcubeCollection(f.n(), principal_trapspace_table(f));
}

/// f(X) ⊆ X.
inline bool is_trapspace(const BooleanNetwork& f, const Subcube& cube) {
    require_same_dimension(f.n(), cube.n());
    bool ok = true;
    cube.for_each_member([&](Word y) {
        if (ok && !cube.contains_raw(f.raw(y))) ok = false;
    });
    return ok;
}

/// T(f) by sweeping all 3^n subcubes.
inline SubcubeCollection enumerate_trapspaces(const BooleanNetwork& f) {
    const int n = f.n();
    detail::require_enumerable(n);
    const Word all = full_mask(n);
    std::vector<Subcube> found;
    for (Word free = 0;; ++free) {
        const Word fixed = all & ~free;
        Word base = 0;
        do {
            Word sub = 0;
            bool ok = true;
            do {
                const Word y = base | sub;
                if ((f.raw(y) ^ base) & fixed) {
                    ok = false;
                    break;
                }
                sub = (sub - free) & free;
            } while (sub != 0);
            if (ok) found.emplace_back(n, free, base);
            base = (base - fixed) & fixed;
        } while (base != 0);
        if (free == all) break;
    }
    return SubcubeCollection(n, std::move(found));
}

struct MinimalTrapspaces {
    SubcubeCollection minimal;
    /// M(f), sorted.
    std::vector<Word> min_configs;
};

/// MT(f) and M(f) without the 3^n sweep. T_f(x) is minimal iff T_f(y) = T_f(x)
/// for every y in it. Points already known to generate the current candidate
/// cut every later growth short, since z in T_f(y) implies T_f(z) ⊆ T_f(y).
inline MinimalTrapspaces minimal_trapspaces(const BooleanNetwork& f) {
    enum class Status : std::uint8_t { unknown, in_min, not_min };
    const int n = f.n();
    std::vector<Status> status(f.size(), Status::unknown);
    std::vector<std::uint32_t> generates(f.size(), 0);
    std::uint32_t generation = 0;
    std::vector<Subcube> found;

    // Descends from a trapspace that contains no known minimal one.
    // `anchor` generates `cube`, i.e. cube = T_f(anchor).
    auto descend = [&](Subcube cube, Word anchor) {
        for (;;) {
            ++generation;
            generates[anchor] = generation;
            std::optional<Subcube> smaller;
            Word smaller_anchor = anchor;
            cube.for_each_member([&](Word y) {
                if (smaller || generates[y] == generation) return;
                auto t = detail::grow_principal(f, y, [&](Word z) { return generates[z] == generation; });
                if (t) {
                    smaller = *t;
                    smaller_anchor = y;
                } else {
                    generates[y] = generation;
                }
            });
            if (!smaller) {
                cube.for_each_member([&](Word y) { status[y] = Status::in_min; });
                found.push_back(cube);
                return;
            }
            cube = *smaller;
            anchor = smaller_anchor;
        }
    };

    for (Word x = 0; x < f.size(); ++x) {
        if (status[x] != Status::unknown) continue;
        auto t = detail::grow_principal(f, x, [&](Word y) { return status[y] == Status::in_min; });
        if (!t) {
            status[x] = Status::not_min;
            continue;
        }
        descend(*t, x);
        if (status[x] != Status::in_min) status[x] = Status::not_min;
    }

    MinimalTrapspaces out{SubcubeCollection(n, std::move(found)), {}};
    for (Word x = 0; x < f.size(); ++x)
        if (status[x] == Status::in_min) out.min_configs.push_back(x);
    return out;
}

/// f^T(x) = T_f(x) - x.
inline BooleanNetwork trapping_closure(const BooleanNetwork& f) {
    return BooleanNetwork::from_function(f.n(),
                                         [&](Word x) { return x ^ principal_trapspace_raw(f, x).free_bits(); });
}

/// TG(f) with subcube neighbourhoods T_f(x).
inline SubcubeGraph trapping_subcube_graph(const BooleanNetwork& f) {
    return SubcubeGraph(f.n(), principal_trapspace_table(f));
}

/// TG(f): x -> y for every y in T_f(x).
inline HypercubeGraph trapping_graph(const BooleanNetwork& f) { return trapping_subcube_graph(f).to_hypercube_graph(); }

/// f^M(x) = T_f(x) - x on M(f), ¬x elsewhere.
inline BooleanNetwork min_trapping_extension(const BooleanNetwork& f) {
    const MinimalTrapspaces mt = minimal_trapspaces(f);
    std::vector<Word> image(f.size());
    const Word all = full_mask(f.n());
    for (Word x = 0; x < image.size(); ++x) image[x] = ~x & all;
    for (const Subcube& cube : mt.minimal)
        cube.for_each_member([&](Word x) { image[x] = x ^ cube.free_bits(); });
    return BooleanNetwork(f.n(), std::move(image));
}

struct TrapspaceReport {
    std::vector<Subcube> principal;
    SubcubeCollection all;
    SubcubeCollection minimal;
    std::vector<Word> min_configs;
};

inline TrapspaceReport trapspace_report(const BooleanNetwork& f) {
    MinimalTrapspaces mt = minimal_trapspaces(f);
    return {principal_trapspace_table(f), enumerate_trapspaces(f), std::move(mt.minimal),
            std::move(mt.min_configs)};
}

}  // namespace trapnet
