#pragma once

// Network populations: uniform random networks, arrangement networks and
// their disjoint unions, negations on subcubes, constants on arrangements,
// and a trapping network with a long transient.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trapnet/classes.hpp"
#include "trapnet/core.hpp"
#include "trapnet/dynamics.hpp"

namespace trapnet {

class ValidationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline BooleanNetwork random_network(int n, std::uint64_t seed) {
    check_dimension(n);
    std::mt19937_64 rng(seed);
    const Word mask = full_mask(n);
    return BooleanNetwork::from_function(n, [&](Word) { return static_cast<Word>(rng()) & mask; });
}

/// A family of subcubes with non-empty common intersection Y.
class Arrangement {
public:
    Arrangement(int n, std::vector<Subcube> members) : n_(n), members_(std::move(members)) {
        check_dimension(n);
        if (members_.empty()) throw std::invalid_argument("arrangement needs at least one subcube");
        y_ = members_.front();
        for (const Subcube& m : members_) {
            require_same_dimension(n, m.n());
            if (!y_.intersects(m)) throw std::invalid_argument("arrangement members have empty intersection");
            y_ = intersect(y_, m);
        }
        content_ = VertexSet(n);
        for (const Subcube& m : members_) m.for_each_member([&](Word x) { content_.insert(x); });
        Word free = 0;
        for (int i = 0; i < n; ++i) {
            const Word bit = Word{1} << i;
            bool closed = true;
            content_.for_each([&](Word x) {
                if (closed && !content_.contains(x ^ bit)) closed = false;
            });
            if (closed) free |= bit;
        }
        free_dims_ = Mask(n, free);
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const std::vector<Subcube>& members() const { return members_; }
    [[nodiscard]] const Subcube& y() const { return y_; }
    [[nodiscard]] const VertexSet& content() const { return content_; }
    [[nodiscard]] Mask free_dims() const { return free_dims_; }

private:
    int n_;
    std::vector<Subcube> members_;
    Subcube y_;
    VertexSet content_;
    Mask free_dims_;
};

enum class Behavior { const0, const1, negate };

inline const char* to_string(Behavior b) {
    switch (b) {
    case Behavior::const0: return "const0";
    case Behavior::const1: return "const1";
    case Behavior::negate: return "negate";
    }
    return "?";
}

/// One behavior per free dimension, keyed by 1-based coordinate.
struct FreeDimBehavior {
    std::map<int, Behavior> by_coordinate;

    static FreeDimBehavior uniform(const Arrangement& a, Behavior b) {
        FreeDimBehavior out;
        for (int i = 1; i <= a.n(); ++i)
            if (a.free_dims().test(i)) out.by_coordinate[i] = b;
        return out;
    }
};

namespace detail {

/// Arrangement-network axioms plus commutativity.
inline void validate_arrangement_network(const Arrangement& a, const BooleanNetwork& f) {
    const VertexSet& content = a.content();
    // For each coordinate, the value of f_i seen for x_i = 0 and x_i = 1.
    std::vector<std::array<int, 2>> seen(static_cast<std::size_t>(a.n()), {-1, -1});
    for (Word x = 0; x < f.size(); ++x) {
        const Word fx = f.raw(x);
        if (!content.contains(x)) {
            if (fx != x) throw ValidationFailed("f moves " + detail::format_bits(x, a.n()) + " outside the content");
            continue;
        }
        if (!a.y().contains_raw(fx))
            throw ValidationFailed("f(" + detail::format_bits(x, a.n()) + ") lies outside Y = " + a.y().str());
        for (int i = 0; i < a.n(); ++i) {
            const int xi = static_cast<int>((x >> i) & 1u);
            const int fi = static_cast<int>((fx >> i) & 1u);
            int& slot = seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(xi)];
            if (slot == -1)
                slot = fi;
            else if (slot != fi)
                throw ValidationFailed("f_" + std::to_string(i + 1) + " is not uniform on the content");
        }
    }
    if (!detail::is_commutative_pairwise(f)) throw ValidationFailed("arrangement network is not commutative");
}

}  // namespace detail

/// Identity outside the content; inside, Y-fixed coordinates take their Y
/// value and each free dimension follows its behavior. Throws
/// ValidationFailed when the result is not an arrangement network.
inline BooleanNetwork arrangement_network(const Arrangement& a, const FreeDimBehavior& b) {
    const int n = a.n();
    for (int i = 1; i <= n; ++i)
        if (a.free_dims().test(i) != static_cast<bool>(b.by_coordinate.count(i)))
            throw std::invalid_argument("behaviors must cover exactly the free dimensions");
    const Word y_base = a.y().base_bits();
    const Word free = a.free_dims().bits;
    std::vector<Word> image(cube_size(n));
    for (Word x = 0; x < image.size(); ++x) {
        if (!a.content().contains(x)) {
            image[x] = x;
            continue;
        }
        Word v = y_base & ~free;
        for (const auto& [coord, behavior] : b.by_coordinate) {
            const Word bit = Word{1} << (coord - 1);
            switch (behavior) {
            case Behavior::const0: break;
            case Behavior::const1: v |= bit; break;
            case Behavior::negate: v |= ~x & bit; break;
            }
        }
        image[x] = v;
    }
    BooleanNetwork f(n, std::move(image));
    detail::validate_arrangement_network(a, f);
    return f;
}

/// f(x) = x XOR X.free on each subcube X, identity elsewhere.
inline BooleanNetwork negation_on_subcubes(int n, const std::vector<Subcube>& cubes) {
    check_dimension(n);
    for (std::size_t i = 0; i < cubes.size(); ++i) {
        require_same_dimension(n, cubes[i].n());
        for (std::size_t k = i + 1; k < cubes.size(); ++k)
            if (cubes[i].intersects(cubes[k]))
                throw std::invalid_argument("subcubes " + cubes[i].str() + " and " + cubes[k].str() + " overlap");
    }
    std::vector<Word> image(cube_size(n));
    for (Word x = 0; x < image.size(); ++x) image[x] = x;
    for (const Subcube& c : cubes) c.for_each_member([&](Word x) { image[x] = x ^ c.free_bits(); });
    return BooleanNetwork(n, std::move(image));
}

struct TargetedArrangement {
    Arrangement arrangement;
    Configuration target;
};

/// f constant (= target) on each content, identity elsewhere.
inline BooleanNetwork constant_on_arrangements(int n, const std::vector<TargetedArrangement>& parts) {
    check_dimension(n);
    VertexSet used(n);
    std::vector<Word> image(cube_size(n));
    for (Word x = 0; x < image.size(); ++x) image[x] = x;
    for (const auto& [a, target] : parts) {
        require_same_dimension(n, a.n());
        require_same_dimension(n, target.n);
        if (!a.y().contains(target))
            throw std::invalid_argument("target " + target.str() + " outside Y = " + a.y().str());
        a.content().for_each([&](Word x) {
            if (used.contains(x))
                throw std::invalid_argument("arrangement contents overlap at " + detail::format_bits(x, n));
            used.insert(x);
            image[x] = target.bits;
        });
    }
    return BooleanNetwork(n, std::move(image));
}

/// Union of networks with pairwise disjoint supports {x : f(x) != x}.
inline BooleanNetwork union_disjoint(const std::vector<BooleanNetwork>& parts) {
    if (parts.empty()) throw std::invalid_argument("union of no networks");
    const int n = parts.front().n();
    std::vector<Word> image(cube_size(n));
    std::vector<bool> owned(cube_size(n), false);
    for (Word x = 0; x < image.size(); ++x) image[x] = x;
    for (const BooleanNetwork& p : parts) {
        require_same_dimension(n, p.n());
        for (Word x = 0; x < image.size(); ++x) {
            if (p.raw(x) == x) continue;
            if (owned[x]) throw std::invalid_argument("supports overlap at " + detail::format_bits(x, n));
            owned[x] = true;
            image[x] = p.raw(x);
        }
    }
    return BooleanNetwork(n, std::move(image));
}

/// t^i_j = 1 for j < i and (i + j) mod 2 otherwise, i = 1..n+1. The chain
/// t^1 -> ... -> t^(n+1) feeds the fixed point 1...1, while 0...00 and
/// 0...01 swap.
inline BooleanNetwork long_transient_trapping(int n) {
    if (n < 3) throw std::invalid_argument("long_transient_trapping needs n >= 3");
    check_dimension(n);
    auto t = [n](int i) {
        Word w = 0;
        for (int j = 1; j <= n; ++j)
            if (j < i || (i + j) % 2 == 1) w |= Word{1} << (j - 1);
        return w;
    };
    std::vector<Word> image(cube_size(n));
    for (Word x = 0; x < image.size(); ++x) image[x] = x;
    for (int i = 1; i <= n; ++i) image[t(i)] = t(i + 1);
    const Word c1 = 0, c2 = Word{1} << (n - 1);
    image[c1] = c2;
    image[c2] = c1;
    return BooleanNetwork(n, std::move(image));
}

/// Union of up to `parts` random arrangement networks on disjoint contents.
/// Each part gets 100 attempts; generation stops early once no attempt fits.
inline BooleanNetwork random_commutative(int n, std::uint64_t seed, int parts) {
    check_dimension(n);
    if (parts < 1) throw std::invalid_argument("random_commutative needs parts >= 1");
    std::mt19937_64 rng(seed);
    const Word all = full_mask(n);
    VertexSet used(n);
    std::vector<BooleanNetwork> built;

    for (int part = 0; part < parts; ++part) {
        bool placed = false;
        for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
            const Word anchor = static_cast<Word>(rng()) & all;
            if (used.contains(anchor)) continue;
            const int count = 1 + static_cast<int>(rng() % 3);
            std::vector<Subcube> members;
            bool fits = true;
            for (int k = 0; k < count && fits; ++k) {
                // Sparse free masks keep contents small enough to pack.
                const Word free = static_cast<Word>(rng()) & static_cast<Word>(rng()) & all;
                const Subcube cube(n, free, anchor);
                cube.for_each_member([&](Word x) {
                    if (used.contains(x)) fits = false;
                });
                members.push_back(cube);
            }
            if (!fits) continue;
            const Arrangement a(n, std::move(members));
            FreeDimBehavior b;
            for (int i = 1; i <= n; ++i) {
                if (!a.free_dims().test(i)) continue;
                const Word bit = Word{1} << (i - 1);
                if (!(a.y().free_bits() & bit)) {
                    b.by_coordinate[i] = (a.y().base_bits() & bit) ? Behavior::const1 : Behavior::const0;
                    continue;
                }
                static constexpr Behavior kChoices[] = {Behavior::const0, Behavior::const1, Behavior::negate};
                b.by_coordinate[i] = kChoices[rng() % 3];
            }
            try {
                built.push_back(arrangement_network(a, b));
            } catch (const ValidationFailed&) {
                continue;
            }
            a.content().for_each([&](Word x) { used.insert(x); });
            placed = true;
        }
        if (!placed) break;
    }
    if (built.empty()) return BooleanNetwork::identity(n);
    return union_disjoint(built);
}

/// Negation on a random family of disjoint subcubes.
inline BooleanNetwork random_negation_on_subcubes(int n, std::uint64_t seed) {
    check_dimension(n);
    std::mt19937_64 rng(seed);
    const Word all = full_mask(n);
    std::vector<Subcube> cubes;
    const int wanted = 1 + static_cast<int>(rng() % 3);
    for (int attempt = 0; attempt < 100 && static_cast<int>(cubes.size()) < wanted; ++attempt) {
        const Subcube c(n, static_cast<Word>(rng()) & static_cast<Word>(rng()) & all, static_cast<Word>(rng()) & all);
        if (c.free_bits() == 0) continue;
        bool disjoint = true;
        for (const Subcube& other : cubes)
            if (c.intersects(other)) disjoint = false;
        if (disjoint) cubes.push_back(c);
    }
    return negation_on_subcubes(n, cubes);
}

/// Constant on a random family of arrangements with disjoint contents.
inline BooleanNetwork random_constant_on_arrangements(int n, std::uint64_t seed) {
    check_dimension(n);
    std::mt19937_64 rng(seed);
    const Word all = full_mask(n);
    VertexSet used(n);
    std::vector<TargetedArrangement> parts;
    const int wanted = 1 + static_cast<int>(rng() % 3);
    for (int attempt = 0; attempt < 100 && static_cast<int>(parts.size()) < wanted; ++attempt) {
        const Word anchor = static_cast<Word>(rng()) & all;
        const int count = 1 + static_cast<int>(rng() % 3);
        std::vector<Subcube> members;
        bool fits = true;
        for (int k = 0; k < count && fits; ++k) {
            const Subcube cube(n, static_cast<Word>(rng()) & static_cast<Word>(rng()) & all, anchor);
            cube.for_each_member([&](Word x) {
                if (used.contains(x)) fits = false;
            });
            members.push_back(cube);
        }
        if (!fits) continue;
        Arrangement a(n, std::move(members));
        const Word target = a.y().base_bits() | (static_cast<Word>(rng()) & a.y().free_bits());
        a.content().for_each([&](Word x) { used.insert(x); });
        parts.push_back({std::move(a), Configuration(n, target)});
    }
    return constant_on_arrangements(n, parts);
}

}  // namespace trapnet
