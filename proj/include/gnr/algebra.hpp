#pragma once

/**
 * @file algebra.hpp
 * @brief Certified table representations of finite monoids and finite
 *        (right) near-rings.
 *
 * A near-ring here is a set with a group addition (not necessarily abelian),
 * an associative multiplication, and the right distributive law
 * (a + b) * c = a * c + b * c. Left distributivity is never assumed.
 *
 * Values of FiniteMonoid and FiniteNearRing can only be obtained through the
 * validate_* factories, so holding one is a certificate that the axioms were
 * checked. Both are immutable afterwards.
 */

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gnr/error.hpp"
#include "gnr/subset_mask.hpp"

namespace gnr {

/// Row-major operation table as supplied by callers (documents, constructors).
using TableRows = std::vector<std::vector<Element>>;

namespace detail {

inline std::vector<Element> flatten_table(unsigned order, const TableRows& rows, const char* what) {
    if (order == 0) throw Error(ErrorKind::MalformedTable, "order must be positive");
    if (order > max_order)
        throw Error(ErrorKind::OrderCapExceeded,
                    "order " + std::to_string(order) + " exceeds the cap of " + std::to_string(max_order));
    if (rows.size() != order)
        throw Error(ErrorKind::MalformedTable, std::string(what) + " table has " + std::to_string(rows.size()) +
                                                   " rows, expected " + std::to_string(order));
    std::vector<Element> flat;
    flat.reserve(std::size_t{order} * order);
    for (unsigned r = 0; r < order; ++r) {
        if (rows[r].size() != order)
            throw Error(ErrorKind::MalformedTable, std::string(what) + " table row " + std::to_string(r) +
                                                       " has wrong length", {r});
        for (unsigned c = 0; c < order; ++c) {
            if (rows[r][c] >= order)
                throw Error(ErrorKind::MalformedTable, std::string(what) + " table entry out of range", {r, c});
            flat.push_back(rows[r][c]);
        }
    }
    return flat;
}

inline TableRows unflatten(unsigned order, const std::vector<Element>& flat) {
    TableRows rows(order, std::vector<Element>(order));
    for (unsigned r = 0; r < order; ++r)
        for (unsigned c = 0; c < order; ++c) rows[r][c] = flat[std::size_t{r} * order + c];
    return rows;
}

/// Returns a violating triple (a,b,c) of associativity, if any.
inline std::optional<std::array<Element, 3>> associativity_violation(unsigned n, const std::vector<Element>& t) {
    auto at = [&](Element a, Element b) { return t[std::size_t{a} * n + b]; };
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element ab = at(a, b);
            for (Element c = 0; c < n; ++c)
                if (at(ab, c) != at(a, at(b, c))) return std::array<Element, 3>{a, b, c};
        }
    return std::nullopt;
}

/// Two-sided identity of a table, if one exists (lowest index wins; it is unique anyway).
inline std::optional<Element> two_sided_identity(unsigned n, const std::vector<Element>& t) {
    for (Element e = 0; e < n; ++e) {
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x) ok = t[std::size_t{e} * n + x] == x && t[std::size_t{x} * n + e] == x;
        if (ok) return e;
    }
    return std::nullopt;
}

}  // namespace detail

class FiniteMonoid;
FiniteMonoid validate_monoid(unsigned order, const TableRows& op, Element identity);

/// A finite monoid given by its Cayley table. Used as the grade set.
class FiniteMonoid {
public:
    unsigned order() const noexcept { return order_; }
    Element identity() const noexcept { return identity_; }
    Element op(Element a, Element b) const noexcept { return table_[std::size_t{a} * order_ + b]; }
    TableRows rows() const { return detail::unflatten(order_, table_); }

    /// a^n for n >= 1.
    Element power(Element a, unsigned n) const noexcept {
        Element r = a;
        for (unsigned i = 1; i < n; ++i) r = op(r, a);
        return r;
    }

    friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) noexcept {
        return a.order_ == b.order_ && a.identity_ == b.identity_ && a.table_ == b.table_;
    }

private:
    friend FiniteMonoid validate_monoid(unsigned, const TableRows&, Element);
    FiniteMonoid(unsigned order, std::vector<Element> table, Element identity)
        : order_(order), table_(std::move(table)), identity_(identity) {}

    unsigned order_;
    std::vector<Element> table_;
    Element identity_;
};

/**
 * Certifies a monoid table.
 *
 * Throws Error with kind MalformedTable (shape or range), BadIdentity
 * (witness: an element a with e*a != a or a*e != a) or NotAssociative
 * (witness: a, b, c).
 */
inline FiniteMonoid validate_monoid(unsigned order, const TableRows& op, Element identity) {
    auto flat = detail::flatten_table(order, op, "monoid");
    if (identity >= order) throw Error(ErrorKind::MalformedTable, "identity index out of range", {identity});
    for (Element a = 0; a < order; ++a) {
        if (flat[std::size_t{identity} * order + a] != a || flat[std::size_t{a} * order + identity] != a)
            throw Error(ErrorKind::BadIdentity, "identity law fails", {a});
    }
    if (auto v = detail::associativity_violation(order, flat))
        throw Error(ErrorKind::NotAssociative, "monoid operation", {(*v)[0], (*v)[1], (*v)[2]});
    return FiniteMonoid(order, std::move(flat), identity);
}

/// The one-element monoid.
inline FiniteMonoid trivial_monoid() { return validate_monoid(1, {{0}}, 0); }

/// ({0,1}, OR): 0 is the identity and 1 absorbs.
inline FiniteMonoid or_monoid() { return validate_monoid(2, {{0, 1}, {1, 1}}, 0); }

/// ({0,1}, multiplication): 1 is the identity and 0 absorbs.
inline FiniteMonoid multiplicative_monoid() { return validate_monoid(2, {{0, 0}, {0, 1}}, 1); }

/// The group Z_2 under addition.
inline FiniteMonoid cyclic_group_2() { return validate_monoid(2, {{0, 1}, {1, 0}}, 0); }

class FiniteNearRing;
FiniteNearRing validate_near_ring(unsigned order, const TableRows& add, const TableRows& mul);

class FiniteNearRing {
public:
    unsigned order() const noexcept { return order_; }
    Element zero() const noexcept { return zero_; }
    std::optional<Element> one() const noexcept { return one_; }

    Element add(Element a, Element b) const noexcept { return add_[std::size_t{a} * order_ + b]; }
    Element mul(Element a, Element b) const noexcept { return mul_[std::size_t{a} * order_ + b]; }
    Element neg(Element a) const noexcept { return neg_[a]; }
    /// a - b, i.e. a + (-b).
    Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
    /// n + i - n
    Element conjugate(Element n, Element i) const noexcept { return add(add(n, i), neg(n)); }

    /// Left-to-right fold of add; the empty sum is zero.
    template <class Range>
    Element sum_over(const Range& elems) const noexcept {
        Element acc = zero_;
        for (Element e : elems) acc = add(acc, e);
        return acc;
    }

    SubsetMask all() const noexcept { return SubsetMask::full(order_); }
    SubsetMask zero_set() const noexcept { return SubsetMask::single(zero_); }

    TableRows add_rows() const { return detail::unflatten(order_, add_); }
    TableRows mul_rows() const { return detail::unflatten(order_, mul_); }

    bool additively_abelian() const noexcept {
        for (Element a = 0; a < order_; ++a)
            for (Element b = a + 1; b < order_; ++b)
                if (add(a, b) != add(b, a)) return false;
        return true;
    }

    /// A triple with a*(b+c) != a*b + a*c, if left distributivity fails.
    std::optional<std::array<Element, 3>> left_distributivity_violation() const {
        for (Element a = 0; a < order_; ++a)
            for (Element b = 0; b < order_; ++b)
                for (Element c = 0; c < order_; ++c)
                    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return std::array<Element, 3>{a, b, c};
        return std::nullopt;
    }

    /// Metadata only: abelian addition and both distributive laws.
    bool is_ring() const { return additively_abelian() && !left_distributivity_violation(); }

    /// n * 0 = 0 for all n.
    bool zero_symmetric() const noexcept {
        for (Element n = 0; n < order_; ++n)
            if (mul(n, zero_) != zero_) return false;
        return true;
    }

    /**
     * Relabels elements: element x of this carrier becomes perm[x].
     * perm must be a bijection on {0..order-1}.
     */
    FiniteNearRing relabel(const std::vector<Element>& perm) const {
        std::vector<Element> inv(order_);
        for (Element x = 0; x < order_; ++x) inv[perm[x]] = x;
        TableRows a(order_, std::vector<Element>(order_)), m = a;
        for (Element x = 0; x < order_; ++x)
            for (Element y = 0; y < order_; ++y) {
                a[x][y] = perm[add(inv[x], inv[y])];
                m[x][y] = perm[mul(inv[x], inv[y])];
            }
        return validate_near_ring(order_, a, m);
    }

    /// Permutation swapping the zero with index 0 (the identity if zero is already 0).
    std::vector<Element> zero_first_permutation() const {
        std::vector<Element> perm(order_);
        for (Element x = 0; x < order_; ++x) perm[x] = x;
        perm[zero_] = 0;
        perm[0] = zero_;
        return perm;
    }

    friend bool operator==(const FiniteNearRing& a, const FiniteNearRing& b) noexcept {
        return a.order_ == b.order_ && a.add_ == b.add_ && a.mul_ == b.mul_;
    }

private:
    friend FiniteNearRing validate_near_ring(unsigned, const TableRows&, const TableRows&);
    FiniteNearRing() = default;

    unsigned order_ = 0;
    std::vector<Element> add_, mul_, neg_;
    Element zero_ = 0;
    std::optional<Element> one_;
};

/**
 * Certifies a near-ring from its addition and multiplication tables.
 *
 * Witnesses: AddNotGroup carries (a,b,c) for non-associative addition, the
 * empty list when no additive identity exists, or (a) for an element without
 * inverse. MulNotAssociative and NotRightDistributive carry (a,b,c).
 */
inline FiniteNearRing validate_near_ring(unsigned order, const TableRows& add, const TableRows& mul) {
    auto add_flat = detail::flatten_table(order, add, "addition");
    auto mul_flat = detail::flatten_table(order, mul, "multiplication");
    const unsigned n = order;

    if (auto v = detail::associativity_violation(n, add_flat))
        throw Error(ErrorKind::AddNotGroup, "addition is not associative", {(*v)[0], (*v)[1], (*v)[2]});
    auto zero = detail::two_sided_identity(n, add_flat);
    if (!zero) throw Error(ErrorKind::AddNotGroup, "addition has no identity");

    auto a_at = [&](Element a, Element b) { return add_flat[std::size_t{a} * n + b]; };
    auto m_at = [&](Element a, Element b) { return mul_flat[std::size_t{a} * n + b]; };

    std::vector<Element> neg(n);
    for (Element a = 0; a < n; ++a) {
        bool found = false;
        for (Element b = 0; b < n && !found; ++b) {
            if (a_at(a, b) == *zero && a_at(b, a) == *zero) {
                neg[a] = b;
                found = true;
            }
        }
        if (!found) throw Error(ErrorKind::AddNotGroup, "element has no additive inverse", {a});
    }

    if (auto v = detail::associativity_violation(n, mul_flat))
        throw Error(ErrorKind::MulNotAssociative, "", {(*v)[0], (*v)[1], (*v)[2]});

    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element s = a_at(a, b);
            for (Element c = 0; c < n; ++c)
                if (m_at(s, c) != a_at(m_at(a, c), m_at(b, c)))
                    throw Error(ErrorKind::NotRightDistributive, "(a+b)c != ac+bc", {a, b, c});
        }

    // Forced by right distributivity: 0x = (0+0)x = 0x + 0x.
    for (Element x = 0; x < n; ++x)
        if (m_at(*zero, x) != *zero) throw Error(ErrorKind::NotRightDistributive, "0x != 0", {*zero, x});

    FiniteNearRing r;
    r.order_ = n;
    r.add_ = std::move(add_flat);
    r.mul_ = std::move(mul_flat);
    r.neg_ = std::move(neg);
    r.zero_ = *zero;
    r.one_ = detail::two_sided_identity(n, r.mul_);
    return r;
}

/// Z_n with the usual ring operations.
inline FiniteNearRing cyclic_ring(unsigned n) {
    TableRows a(n, std::vector<Element>(n)), m = a;
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            a[x][y] = (x + y) % n;
            m[x][y] = (x * y) % n;
        }
    return validate_near_ring(n, a, m);
}

}  // namespace gnr
