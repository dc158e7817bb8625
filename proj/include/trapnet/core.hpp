#pragma once

// Configurations, subcubes, Boolean networks, subset updates and the
// delta-mask lattice on networks.
//
// Coordinate x_i (1-based) lives in bit i-1 of the machine word. Binary
// strings are written x_1 x_2 ... x_n from left to right, so "110" is the
// configuration with x_1 = 1, x_2 = 1, x_3 = 0.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trapnet {

using Word = std::uint32_t;

inline constexpr int kMaxDimension = 20;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

[[nodiscard]] constexpr Word full_mask(int n) noexcept {
    return n >= 32 ? ~Word{0} : (Word{1} << n) - 1;
}

[[nodiscard]] constexpr std::size_t cube_size(int n) noexcept {
    return std::size_t{1} << n;
}

inline void check_dimension(int n) {
    if (n < 1 || n > kMaxDimension)
        throw DimensionError("dimension " + std::to_string(n) + " outside 1.." +
                             std::to_string(kMaxDimension));
}

inline void require_same_dimension(int a, int b) {
    if (a != b)
        throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " +
                             std::to_string(b));
}

namespace detail {

inline Word parse_bits(std::string_view text, int n) {
    if (static_cast<int>(text.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " binary digits, got '" +
                                    std::string(text) + "'");
    Word bits = 0;
    for (int i = 0; i < n; ++i) {
        if (text[i] == '1')
            bits |= Word{1} << i;
        else if (text[i] != '0')
            throw std::invalid_argument("bad binary digit in '" + std::string(text) + "'");
    }
    return bits;
}

inline std::string format_bits(Word bits, int n) {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((bits >> i) & 1u) out[i] = '1';
    return out;
}

}  // namespace detail

/// An n-bit word that remembers its dimension. Tag distinguishes points of
/// B^n from subsets of [n].
template <class Tag>
struct BitWord {
    int n = 1;
    Word bits = 0;

    constexpr BitWord() = default;
    BitWord(int dim, Word value) : n(dim), bits(value) {
        check_dimension(dim);
        if (value & ~full_mask(dim))
            throw DimensionError("value has bits beyond dimension " + std::to_string(dim));
    }

    static BitWord parse(std::string_view text) {
        const int dim = static_cast<int>(text.size());
        check_dimension(dim);
        return BitWord(dim, detail::parse_bits(text, dim));
    }

    [[nodiscard]] std::string str() const { return detail::format_bits(bits, n); }
    [[nodiscard]] bool test(int coordinate) const { return (bits >> (coordinate - 1)) & 1u; }
    [[nodiscard]] int count() const { return std::popcount(bits); }

    friend constexpr bool operator==(const BitWord&, const BitWord&) = default;
    friend constexpr auto operator<=>(const BitWord&, const BitWord&) = default;
};

struct ConfigurationTag {};
struct MaskTag {};

using Configuration = BitWord<ConfigurationTag>;
using Mask = BitWord<MaskTag>;

/// Mask from 1-based coordinate indices, e.g. mask_of(3, {1, 2}).
inline Mask mask_of(int n, std::initializer_list<int> coordinates) {
    Word bits = 0;
    for (int c : coordinates) {
        if (c < 1 || c > n) throw DimensionError("coordinate out of range");
        bits |= Word{1} << (c - 1);
    }
    return Mask(n, bits);
}

inline Configuration negate(Configuration x) { return Configuration(x.n, ~x.bits & full_mask(x.n)); }

inline Mask delta_mask(Configuration x, Configuration y) {
    require_same_dimension(x.n, y.n);
    return Mask(x.n, x.bits ^ y.bits);
}

inline int hamming(Configuration x, Configuration y) { return delta_mask(x, y).count(); }

/// A subcube { x : x agrees with base outside free }. The base always has
/// its free bits cleared, so equal point sets compare equal.
class Subcube {
public:
    Subcube() = default;
    Subcube(int n, Word free, Word base) : n_(n), free_(free), base_(base & ~free) {
        check_dimension(n);
        if ((free | base) & ~full_mask(n))
            throw DimensionError("subcube bits beyond dimension " + std::to_string(n));
    }

    static Subcube full(int n) { return Subcube(n, full_mask(n), 0); }
    static Subcube point(Configuration x) { return Subcube(x.n, 0, x.bits); }

    /// Star notation: position i is x_i, '*' marks a free coordinate.
    static Subcube parse(std::string_view text) {
        const int n = static_cast<int>(text.size());
        check_dimension(n);
        Word free = 0, base = 0;
        for (int i = 0; i < n; ++i) {
            switch (text[i]) {
            case '*': free |= Word{1} << i; break;
            case '1': base |= Word{1} << i; break;
            case '0': break;
            default:
                throw std::invalid_argument("bad subcube character in '" + std::string(text) + "'");
            }
        }
        return Subcube(n, free, base);
    }

    [[nodiscard]] std::string str() const {
        std::string out(static_cast<std::size_t>(n_), '0');
        for (int i = 0; i < n_; ++i) {
            if ((free_ >> i) & 1u)
                out[i] = '*';
            else if ((base_ >> i) & 1u)
                out[i] = '1';
        }
        return out;
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] Word free_bits() const { return free_; }
    [[nodiscard]] Word base_bits() const { return base_; }
    [[nodiscard]] Mask free() const { return Mask(n_, free_); }
    [[nodiscard]] Configuration base() const { return Configuration(n_, base_); }
    [[nodiscard]] int dimension() const { return std::popcount(free_); }
    [[nodiscard]] std::size_t size() const { return std::size_t{1} << dimension(); }

    [[nodiscard]] bool contains_raw(Word x) const { return ((x ^ base_) & ~free_) == 0; }
    [[nodiscard]] bool contains(Configuration x) const {
        require_same_dimension(n_, x.n);
        return contains_raw(x.bits);
    }
    [[nodiscard]] bool is_subset_of(const Subcube& other) const {
        return (free_ & ~other.free_) == 0 && other.contains_raw(base_);
    }
    [[nodiscard]] bool intersects(const Subcube& other) const {
        return ((base_ ^ other.base_) & ~free_ & ~other.free_) == 0;
    }

    /// Calls visit(member) for every member as a raw word, in increasing
    /// order of the free-coordinate submask.
    template <class Visitor>
    void for_each_member(Visitor&& visit) const {
        Word sub = 0;
        do {
            visit(base_ | sub);
            sub = (sub - free_) & free_;
        } while (sub != 0);
    }

    [[nodiscard]] std::vector<Configuration> members() const {
        std::vector<Configuration> out;
        out.reserve(size());
        for_each_member([&](Word m) { out.emplace_back(n_, m); });
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const Subcube&, const Subcube&) = default;
    friend auto operator<=>(const Subcube& a, const Subcube& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        if (auto c = a.free_ <=> b.free_; c != 0) return c;
        return a.base_ <=> b.base_;
    }

private:
    int n_ = 1;
    Word free_ = 0;
    Word base_ = 0;
};

/// Non-empty intersection of two subcubes; callers check intersects() first.
inline Subcube intersect(const Subcube& a, const Subcube& b) {
    require_same_dimension(a.n(), b.n());
    if (!a.intersects(b)) throw std::invalid_argument("subcubes are disjoint");
    const Word free = a.free_bits() & b.free_bits();
    return Subcube(a.n(), free, (a.base_bits() | b.base_bits()) & ~free);
}

/// Smallest subcube containing a and b.
inline Subcube span_raw(int n, Word a, Word b) { return Subcube(n, a ^ b, a & ~(a ^ b)); }

inline Subcube span(Configuration x, Configuration y) {
    require_same_dimension(x.n, y.n);
    return span_raw(x.n, x.bits, y.bits);
}

inline Subcube span(std::span<const Configuration> points) {
    if (points.empty()) throw std::invalid_argument("span of an empty set");
    const Configuration first = points.front();
    Word free = 0;
    for (const Configuration& p : points) {
        require_same_dimension(first.n, p.n);
        free |= p.bits ^ first.bits;
    }
    return Subcube(first.n, free, first.bits);
}

inline Subcube span(std::initializer_list<Configuration> points) {
    return span(std::span<const Configuration>(points.begin(), points.size()));
}

/// X - x: the unique y in X with [x, y] = X.
inline Configuration opposite(const Subcube& cube, Configuration x) {
    if (!cube.contains(x)) throw std::invalid_argument("configuration " + x.str() + " not in " + cube.str());
    return Configuration(x.n, x.bits ^ cube.free_bits());
}

/// f : B^n -> B^n stored as an image table indexed by configuration word.
class BooleanNetwork {
public:
    BooleanNetwork() = default;
    BooleanNetwork(int n, std::vector<Word> image) : n_(n), image_(std::move(image)) {
        check_dimension(n);
        if (image_.size() != cube_size(n))
            throw DimensionError("image table needs " + std::to_string(cube_size(n)) + " entries");
        const Word limit = full_mask(n);
        for (Word v : image_)
            if (v & ~limit) throw DimensionError("image entry beyond dimension " + std::to_string(n));
    }

    template <class Fn>
    static BooleanNetwork from_function(int n, Fn&& fn) {
        check_dimension(n);
        std::vector<Word> image(cube_size(n));
        for (Word x = 0; x < image.size(); ++x) image[x] = static_cast<Word>(fn(x));
        return BooleanNetwork(n, std::move(image));
    }

    static BooleanNetwork identity(int n) {
        return from_function(n, [](Word x) { return x; });
    }
    static BooleanNetwork negation(int n) {
        const Word m = full_mask(n);
        return from_function(n, [m](Word x) { return ~x & m; });
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::size_t size() const { return image_.size(); }
    [[nodiscard]] Word raw(Word x) const { return image_[x]; }
    [[nodiscard]] std::span<const Word> table() const { return image_; }

    Configuration operator()(Configuration x) const {
        require_same_dimension(n_, x.n);
        return Configuration(n_, image_[x.bits]);
    }

    /// Interval [x, f(x)] of x.
    [[nodiscard]] Subcube interval(Word x) const { return span_raw(n_, x, image_[x]); }
    [[nodiscard]] Word delta(Word x) const { return x ^ image_[x]; }

    friend bool operator==(const BooleanNetwork&, const BooleanNetwork&) = default;
    friend auto operator<=>(const BooleanNetwork&, const BooleanNetwork&) = default;

private:
    int n_ = 1;
    std::vector<Word> image_ = {0, 1};
};

/// f^(S)(x) = (f_S(x), x_{-S}).
inline BooleanNetwork update(const BooleanNetwork& f, Mask subset) {
    require_same_dimension(f.n(), subset.n);
    const Word s = subset.bits;
    return BooleanNetwork::from_function(f.n(), [&](Word x) { return (f.raw(x) & s) | (x & ~s); });
}

/// Ordered sequence of subset updates, applied left to right.
struct UpdateWord {
    std::vector<Mask> steps;

    UpdateWord() = default;
    UpdateWord(std::initializer_list<Mask> list) : steps(list) {}
    explicit UpdateWord(std::vector<Mask> list) : steps(std::move(list)) {}
};

/// f^(S_1, ..., S_k) = f^(S_k) o ... o f^(S_1).
inline BooleanNetwork compose_word(const BooleanNetwork& f, const UpdateWord& word) {
    for (const Mask& m : word.steps) require_same_dimension(f.n(), m.n);
    return BooleanNetwork::from_function(f.n(), [&](Word x) {
        for (const Mask& m : word.steps) x = (f.raw(x) & m.bits) | (x & ~m.bits);
        return x;
    });
}

/// g o f.
inline BooleanNetwork compose(const BooleanNetwork& g, const BooleanNetwork& f) {
    require_same_dimension(f.n(), g.n());
    return BooleanNetwork::from_function(f.n(), [&](Word x) { return g.raw(f.raw(x)); });
}

/// f^k; f^0 = id.
inline BooleanNetwork power(const BooleanNetwork& f, unsigned k) {
    return BooleanNetwork::from_function(f.n(), [&](Word x) {
        for (unsigned i = 0; i < k; ++i) x = f.raw(x);
        return x;
    });
}

/// f ⊑ g: Δ(x, f(x)) ⊆ Δ(x, g(x)) everywhere.
inline bool order_leq(const BooleanNetwork& f, const BooleanNetwork& g) {
    require_same_dimension(f.n(), g.n());
    for (Word x = 0; x < f.size(); ++x)
        if (f.delta(x) & ~g.delta(x)) return false;
    return true;
}

enum class LatticeOp { join, meet };

/// Pointwise union (join) or intersection (meet) of delta masks.
inline BooleanNetwork lattice_combine(const BooleanNetwork& f, const BooleanNetwork& g, LatticeOp op) {
    require_same_dimension(f.n(), g.n());
    return BooleanNetwork::from_function(f.n(), [&](Word x) {
        const Word d = op == LatticeOp::join ? (f.delta(x) | g.delta(x)) : (f.delta(x) & g.delta(x));
        return x ^ d;
    });
}

inline BooleanNetwork join(const BooleanNetwork& f, const BooleanNetwork& g) {
    return lattice_combine(f, g, LatticeOp::join);
}
inline BooleanNetwork meet(const BooleanNetwork& f, const BooleanNetwork& g) {
    return lattice_combine(f, g, LatticeOp::meet);
}

inline std::vector<Word> fixed_points(const BooleanNetwork& f) {
    std::vector<Word> out;
    for (Word x = 0; x < f.size(); ++x)
        if (f.raw(x) == x) out.push_back(x);
    return out;
}

}  // namespace trapnet
