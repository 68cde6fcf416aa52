#ifndef CUTCX_VERTEX_SET_HPP
#define CUTCX_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutcx {

/// Largest ground set a VertexSet can address.
inline constexpr int kMaxVertices = 64;

/**
 * A subset of {0, ..., 63} packed into one machine word.
 *
 * Every face, facet and vertex subset in the library is a VertexSet, so
 * subset tests and intersections in the shelling checks are single word
 * operations.
 */
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vertices)
    {
        for (int v : vertices)
            insert(v);
    }

    static VertexSet from_vector(const std::vector<int>& vertices)
    {
        VertexSet s;
        for (int v : vertices)
            s.insert(v);
        return s;
    }

    /// {0, ..., n-1}
    static constexpr VertexSet range(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    void insert(int v)
    {
        if (v < 0 || v >= kMaxVertices)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, 64)");
        bits_ |= std::uint64_t{1} << v;
    }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    /// Smallest element; undefined on the empty set.
    constexpr int front() const { return std::countr_zero(bits_); }
    /// Largest element; undefined on the empty set.
    constexpr int back() const { return 63 - std::countl_zero(bits_); }

    /// Elements in ascending order.
    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <typename Fn>
    constexpr void for_each(Fn&& fn) const
    {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            fn(std::countr_zero(b));
    }

    /// Complement within {0, ..., n-1}.
    constexpr VertexSet complement(int n) const { return VertexSet(~bits_ & range(n).bits_); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    /// Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

/// "{0, 3, 6}"
std::string to_string(VertexSet s);

/// Calls fn on every k-subset of {0, ..., n-1}, in increasing bit order (Gosper's hack).
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn)
{
    if (k < 0 || k > n)
        return;
    if (k == 0) {
        fn(VertexSet{});
        return;
    }
    const std::uint64_t limit_bit = n >= 64 ? 0 : std::uint64_t{1} << n;
    std::uint64_t x = (k >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    while (true) {
        fn(VertexSet(x));
        const std::uint64_t c = x & (~x + 1);
        const std::uint64_t r = x + c;
        if (r == 0)
            break;  // wrapped past bit 63
        x = (((r ^ x) >> 2) / c) | r;
        if (limit_bit != 0 && x >= limit_bit)
            break;
    }
}

/// Calls fn on every subset of s (including the empty set and s itself).
template <typename Fn>
void for_each_subset(VertexSet s, Fn&& fn)
{
    const std::uint64_t all = s.bits();
    std::uint64_t sub = all;
    while (true) {
        fn(VertexSet(sub));
        if (sub == 0)
            break;
        sub = (sub - 1) & all;
    }
}

}  // namespace cutcx

template <>
struct std::hash<cutcx::VertexSet> {
    std::size_t operator()(cutcx::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

#endif  // CUTCX_VERTEX_SET_HPP
