#pragma once

// Collections of subcubes: pointwise intersection A(x), the realization F,
// the union closure λ, the reduction μ, and the four recognizers.

#include <vector>

#include "trapnet/core.hpp"
#include "trapnet/dynamics.hpp"
#include "trapnet/subcube_collection.hpp"
#include "trapnet/trapspaces.hpp"

namespace trapnet {

inline Subcube collection_at_raw(const SubcubeCollection& a, Word x) {
    Word free = full_mask(a.n());
    for (const Subcube& m : a)
        if (m.contains_raw(x)) free &= m.free_bits();
    return Subcube(a.n(), free, x);
}

/// A(x): intersection of the members containing x, B^n if there are none.
inline Subcube collection_at(const SubcubeCollection& a, Configuration x) {
    require_same_dimension(a.n(), x.n);
    return collection_at_raw(a, x.bits);
}

/// F(A)(x) = A(x) - x.
inline BooleanNetwork realize(const SubcubeCollection& a) {
    return BooleanNetwork::from_function(a.n(), [&](Word x) { return x ^ collection_at_raw(a, x).free_bits(); });
}

namespace detail {

/// Calls visit(cube) for all 3^n subcubes.
template <class Visitor>
void for_each_subcube(int n, Visitor&& visit) {
    const Word all = full_mask(n);
    for (Word free = 0;; ++free) {
        const Word fixed = all & ~free;
        Word base = 0;
        do {
            visit(Subcube(n, free, base));
            base = (base - fixed) & fixed;
        } while (base != 0);
        if (free == all) break;
    }
}

/// True iff cube equals the union of the members of `a` contained in it.
inline bool covered_by_inner_members(const SubcubeCollection& a, const Subcube& cube, const Subcube* skip = nullptr) {
    VertexSet seen(a.n());
    std::size_t covered = 0;
    for (const Subcube& m : a) {
        if (skip && m == *skip) continue;
        if (!m.is_subset_of(cube)) continue;
        m.for_each_member([&](Word y) {
            if (!seen.contains(y)) {
                seen.insert(y);
                ++covered;
            }
        });
        if (covered == cube.size()) return true;
    }
    return covered == cube.size();
}

}  // namespace detail

/// λ(A): every subcube that is a union of members. A subcube C qualifies
/// iff it is the union of the members it contains.
inline SubcubeCollection lambda_closure(const SubcubeCollection& a) {
    detail::require_enumerable(a.n());
    std::vector<Subcube> out;
    detail::for_each_subcube(a.n(), [&](const Subcube& c) {
        if (detail::covered_by_inner_members(a, c)) out.push_back(c);
    });
    return SubcubeCollection(a.n(), std::move(out));
}

/// μ(A) = { A(x) : x ∈ B^n }.
inline SubcubeCollection mu_reduction(const SubcubeCollection& a) {
    std::vector<Subcube> out;
    out.reserve(cube_size(a.n()));
    for (Word x = 0; x < cube_size(a.n()); ++x) out.push_back(collection_at_raw(a, x));
    return SubcubeCollection(a.n(), std::move(out));
}

struct CollectionFlags {
    bool pre_principal = false;
    bool pre_ideal = false;
    bool min_ideal = false;
    bool convex = false;
    friend bool operator==(const CollectionFlags&, const CollectionFlags&) = default;
};

/// Union of members is B^n; every non-empty A ∩ B is a union of members;
/// no member is a union of other members.
inline bool is_pre_principal(const SubcubeCollection& q) {
    const Subcube whole = Subcube::full(q.n());
    if (!detail::covered_by_inner_members(q, whole)) return false;
    for (const Subcube& a : q)
        for (const Subcube& b : q) {
            if (!a.intersects(b)) continue;
            if (!detail::covered_by_inner_members(q, intersect(a, b))) return false;
        }
    for (const Subcube& a : q) {
        // The largest candidate family is every member strictly inside a.
        if (detail::covered_by_inner_members(q, a, &a)) return false;
    }
    return true;
}

/// B^n ∈ J, closed under non-empty intersection, and λ(J) = J.
inline bool is_pre_ideal(const SubcubeCollection& j) {
    if (!j.contains(Subcube::full(j.n()))) return false;
    for (const Subcube& a : j)
        for (const Subcube& b : j)
            if (a.intersects(b) && !j.contains(intersect(a, b))) return false;
    return lambda_closure(j) == j;
}

/// Members pairwise disjoint.
inline bool is_min_ideal(const SubcubeCollection& c) {
    const auto& m = c.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t k = i + 1; k < m.size(); ++k)
            if (m[i].intersects(m[k])) return false;
    return true;
}

/// Q ⊆ S ⊆ R with Q, R members forces S to be a member.
inline bool is_convex(const SubcubeCollection& c) {
    for (const Subcube& lo : c)
        for (const Subcube& hi : c) {
            if (lo == hi || !lo.is_subset_of(hi)) continue;
            const Word extra = hi.free_bits() & ~lo.free_bits();
            Word sub = 0;
            do {
                const Subcube mid(c.n(), lo.free_bits() | sub, lo.base_bits());
                if (!c.contains(mid)) return false;
                sub = (sub - extra) & extra;
            } while (sub != 0);
        }
    return true;
}

inline CollectionFlags classify_collection(const SubcubeCollection& c) {
    detail::require_enumerable(c.n());
    return {is_pre_principal(c), is_pre_ideal(c), is_min_ideal(c), is_convex(c)};
}

}  // namespace trapnet
