#pragma once

/**
 * @file subset_mask.hpp
 * @brief Word-sized subsets of a finite carrier of at most 64 elements.
 *
 * Every ideal, homogeneous component and product set in the library is a
 * SubsetMask. Bit i set means element index i is a member. The carrier
 * order is not stored; callers keep masks paired with their structure.
 */

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace gnr {

/// Element index into a carrier's operation tables.
using Element = unsigned;

/// Largest carrier the library accepts.
inline constexpr unsigned max_order = 64;

class SubsetMask {
public:
    constexpr SubsetMask() noexcept = default;
    constexpr explicit SubsetMask(std::uint64_t bits) noexcept : bits_(bits) {}
    SubsetMask(std::initializer_list<Element> elems) noexcept {
        for (Element e : elems) insert(e);
    }

    static SubsetMask of(const std::vector<Element>& elems) noexcept {
        SubsetMask m;
        for (Element e : elems) m.insert(e);
        return m;
    }
    /// {0, ..., order-1}
    static constexpr SubsetMask full(unsigned order) noexcept {
        return SubsetMask(order >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << order) - 1));
    }
    static constexpr SubsetMask single(Element e) noexcept { return SubsetMask(std::uint64_t{1} << e); }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool contains(Element e) const noexcept { return (bits_ >> e) & 1u; }
    constexpr void insert(Element e) noexcept { bits_ |= std::uint64_t{1} << e; }
    constexpr void erase(Element e) noexcept { bits_ &= ~(std::uint64_t{1} << e); }
    constexpr unsigned size() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }
    constexpr bool empty() const noexcept { return bits_ == 0; }

    constexpr bool subset_of(SubsetMask other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool proper_subset_of(SubsetMask other) const noexcept {
        return subset_of(other) && bits_ != other.bits_;
    }

    /// Smallest member; undefined on the empty set.
    constexpr Element first() const noexcept { return static_cast<Element>(std::countr_zero(bits_)); }

    /// Calls f(e) for each member in increasing index order.
    template <class F>
    constexpr void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Element>(std::countr_zero(b)));
    }

    /// Returns true iff pred(e) holds for every member (short-circuits).
    template <class Pred>
    constexpr bool all_of(Pred&& pred) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            if (!pred(static_cast<Element>(std::countr_zero(b)))) return false;
        return true;
    }

    std::vector<Element> elements() const {
        std::vector<Element> out;
        out.reserve(size());
        for_each([&](Element e) { out.push_back(e); });
        return out;
    }

    friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) noexcept { return SubsetMask(a.bits_ | b.bits_); }
    friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) noexcept { return SubsetMask(a.bits_ & b.bits_); }
    /// Set difference.
    friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) noexcept { return SubsetMask(a.bits_ & ~b.bits_); }
    constexpr SubsetMask& operator|=(SubsetMask o) noexcept { bits_ |= o.bits_; return *this; }
    constexpr SubsetMask& operator&=(SubsetMask o) noexcept { bits_ &= o.bits_; return *this; }

    friend constexpr bool operator==(SubsetMask, SubsetMask) noexcept = default;

    std::string to_string() const {
        std::string s = "{";
        bool first_elem = true;
        for_each([&](Element e) {
            if (!first_elem) s += ',';
            s += std::to_string(e);
            first_elem = false;
        });
        return s + "}";
    }

private:
    std::uint64_t bits_ = 0;
};

/// Canonical order: by size, then lexicographically on the increasing index lists.
inline bool canonical_less(SubsetMask a, SubsetMask b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    std::uint64_t x = a.bits(), y = b.bits();
    while (x != 0 && y != 0) {
        auto ea = std::countr_zero(x), eb = std::countr_zero(y);
        if (ea != eb) return ea < eb;
        x &= x - 1;
        y &= y - 1;
    }
    return false;
}

inline std::ostream& operator<<(std::ostream& os, SubsetMask m) { return os << m.to_string(); }

}  // namespace gnr
