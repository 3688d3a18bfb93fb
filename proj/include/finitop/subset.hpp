#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace finitop {

/// Raw membership mask; bit i set means point i is in the set.
using Mask = std::uint32_t;

inline constexpr int max_points = 16;

constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }
constexpr Mask point_mask(int x) { return Mask{1} << x; }
constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
constexpr bool meets(Mask a, Mask b) { return (a & b) != 0; }
constexpr int cardinality(Mask a) { return std::popcount(a); }

/// Calls fn(i) for every set bit of m, lowest first.
template <typename Fn>
constexpr void for_each_point(Mask m, Fn&& fn) {
    while (m != 0) {
        fn(std::countr_zero(m));
        m &= m - 1;
    }
}

/// A subset of an n-point space. Bits at positions >= n are never set.
class Subset {
public:
    constexpr Subset() = default;
    constexpr Subset(Mask bits, int n) : bits_(bits & full_mask(n)), n_(static_cast<std::uint8_t>(n)) {}

    static constexpr Subset empty(int n) { return Subset(0, n); }
    static constexpr Subset full(int n) { return Subset(full_mask(n), n); }
    static Subset of(std::initializer_list<int> points, int n);
    static Subset of(const std::vector<int>& points, int n);

    constexpr Mask bits() const { return bits_; }
    constexpr int size() const { return n_; }
    constexpr bool contains(int x) const { return x >= 0 && x < n_ && (bits_ >> x & 1U) != 0; }
    constexpr bool is_empty() const { return bits_ == 0; }
    constexpr int count() const { return cardinality(bits_); }

    constexpr Subset complement() const { return Subset(~bits_, n_); }
    constexpr bool subset_of(const Subset& o) const { return is_subset(bits_, o.bits_); }

    constexpr Subset operator|(const Subset& o) const { return Subset(bits_ | o.bits_, n_); }
    constexpr Subset operator&(const Subset& o) const { return Subset(bits_ & o.bits_, n_); }
    constexpr Subset operator-(const Subset& o) const { return Subset(bits_ & ~o.bits_, n_); }

    constexpr auto operator<=>(const Subset&) const = default;

    std::vector<int> points() const;
    /// "{0,2,3}"
    std::string to_string() const;
    /// Lowercase hex without prefix, "0" for the empty set.
    std::string to_hex() const;

private:
    Mask bits_ = 0;
    std::uint8_t n_ = 0;
};

std::string mask_to_hex(Mask m);
/// Throws std::invalid_argument on malformed input.
Mask mask_from_hex(const std::string& hex);
std::vector<int> mask_points(Mask m);

}  // namespace finitop
