#pragma once

/**
 * @file constructions.hpp
 * @brief Homomorphisms, quotients and direct products of graded near-rings.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gnr/grading.hpp"
#include "gnr/ideals.hpp"
#include "gnr/lattice.hpp"

namespace gnr {

class NearRingHom;
NearRingHom validate_hom(const FiniteNearRing& source, const FiniteNearRing& target, std::vector<Element> map);

/// A certified map between carriers preserving addition and multiplication.
class NearRingHom {
public:
    const FiniteNearRing& source() const noexcept { return source_; }
    const FiniteNearRing& target() const noexcept { return target_; }
    const std::vector<Element>& table() const noexcept { return map_; }
    Element operator()(Element x) const noexcept { return map_[x]; }

    bool surjective() const noexcept { return image(source_.all()) == target_.all(); }
    /// Preimage of the target's zero; certified to be an ideal.
    SubsetMask kernel() const noexcept { return kernel_; }

    SubsetMask image(SubsetMask s) const noexcept {
        SubsetMask out;
        s.for_each([&](Element x) { out.insert(map_[x]); });
        return out;
    }
    SubsetMask preimage(SubsetMask t) const noexcept {
        SubsetMask out;
        for (Element x = 0; x < source_.order(); ++x)
            if (t.contains(map_[x])) out.insert(x);
        return out;
    }

private:
    friend NearRingHom validate_hom(const FiniteNearRing&, const FiniteNearRing&, std::vector<Element>);
    NearRingHom(FiniteNearRing s, FiniteNearRing t, std::vector<Element> m, SubsetMask k)
        : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)), kernel_(k) {}

    FiniteNearRing source_;
    FiniteNearRing target_;
    std::vector<Element> map_;
    SubsetMask kernel_;
};

/// Throws HomNotAdditive(a,b) or HomNotMultiplicative(a,b) on the first failing pair.
inline NearRingHom validate_hom(const FiniteNearRing& source, const FiniteNearRing& target, std::vector<Element> map) {
    if (map.size() != source.order())
        throw Error(ErrorKind::MalformedTable, "map length " + std::to_string(map.size()) + " != source order " +
                                                   std::to_string(source.order()));
    for (Element x = 0; x < source.order(); ++x)
        if (map[x] >= target.order()) throw Error(ErrorKind::MalformedTable, "map value out of range", {x});
    for (Element a = 0; a < source.order(); ++a)
        for (Element b = 0; b < source.order(); ++b) {
            if (map[source.add(a, b)] != target.add(map[a], map[b]))
                throw Error(ErrorKind::HomNotAdditive, "", {a, b});
            if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
                throw Error(ErrorKind::HomNotMultiplicative, "", {a, b});
        }
    SubsetMask kernel;
    for (Element x = 0; x < source.order(); ++x)
        if (map[x] == target.zero()) kernel.insert(x);
    if (!is_ideal(source, kernel)) throw std::logic_error("kernel of a homomorphism is not an ideal");
    return NearRingHom(source, target, std::move(map), kernel);
}

/// An ideal I and grade g with h(I ∩ N_g) != h(I) ∩ M_g.
struct ComponentViolation {
    SubsetMask ideal;
    Grade grade;
};

/**
 * First ideal I of the source and grade g (canonical order) where the image
 * of the g-component differs from the g-component of the image.
 */
inline std::optional<ComponentViolation> component_respect_violation(const NearRingHom& h, const IdealLattice& source,
                                                                     const GradedNearRing& target) {
    const GradedNearRing& src = source.structure();
    if (!(src.monoid() == target.monoid()))
        throw Error(ErrorKind::MonoidMismatch, "source and target are graded by different monoids");
    for (SubsetMask i : source.ideals())
        for (Grade g = 0; g < src.grade_count(); ++g)
            if (h.image(src.component(i, g)) != target.component(h.image(i), g)) return ComponentViolation{i, g};
    return std::nullopt;
}

inline bool hom_respects_components(const NearRingHom& h, const IdealLattice& source, const GradedNearRing& target) {
    return !component_respect_violation(h, source, target);
}

inline SubsetMask preimage_ideal(const NearRingHom& h, SubsetMask j) {
    SubsetMask out = h.preimage(j);
    if (!is_ideal(h.source(), out)) throw std::logic_error("preimage of an ideal is not an ideal");
    return out;
}

/// Throws ImageNotIdeal when the image fails the ideal laws (possible only if h is not surjective).
inline SubsetMask image_ideal(const NearRingHom& h, SubsetMask i) {
    SubsetMask out = h.image(i);
    if (auto v = ideal_violation(h.target(), out))
        throw Error(ErrorKind::ImageNotIdeal, std::string(to_string(v->rule)), v->elements);
    return out;
}

/// { a + q : a in A, q in Q }
inline SubsetMask coset_sum(const FiniteNearRing& r, SubsetMask a, SubsetMask q) {
    SubsetMask out;
    a.for_each([&](Element x) { q.for_each([&](Element y) { out.insert(r.add(x, y)); }); });
    return out;
}

/// N/Q with its induced grading and the canonical projection.
struct QuotientStructure {
    GradedNearRing base;
    SubsetMask modulus;
    /// Cosets ordered by least member; coset c is element c of the quotient.
    std::vector<SubsetMask> cosets;
    NearRingHom projection;
    IdealLattice quotient;
};

/// An ideal J of N/Q and a grade g where pi^-1(J ∩ (N/Q)_g) differs from the expected set.
struct CorrespondenceViolation {
    SubsetMask quotient_ideal;
    Grade grade;
};

/**
 * Checks pi^-1(J_g) = pi^-1(J)_g + Q for every ideal J of N/Q and grade g.
 * With literal = true the "+ Q" is dropped, which only holds when Q lies in
 * every touched component.
 */
inline std::optional<CorrespondenceViolation> correspondence_violation(const QuotientStructure& qs,
                                                                       bool literal = false) {
    const GradedNearRing& base = qs.base;
    const GradedNearRing& quot = qs.quotient.structure();
    for (SubsetMask j : qs.quotient.ideals())
        for (Grade g = 0; g < base.grade_count(); ++g) {
            SubsetMask lhs = qs.projection.preimage(quot.component(j, g));
            SubsetMask rhs = base.component(qs.projection.preimage(j), g);
            if (!literal) rhs = coset_sum(base.ring(), rhs, qs.modulus);
            if (lhs != rhs) return CorrespondenceViolation{j, g};
        }
    return std::nullopt;
}

/**
 * Builds N/Q for a proper graded ideal Q.
 *
 * Throws NotIdeal, NotProper or NotGraded on bad Q, and QuotientGradingInvalid
 * when the images of the components do not form a grading of N/Q.
 */
inline QuotientStructure quotient(const GradedNearRing& gn, SubsetMask q,
                                  EnumerationBudget budget = EnumerationBudget::from_environment()) {
    const FiniteNearRing& r = gn.ring();
    const unsigned n = r.order();
    if (auto v = ideal_violation(r, q)) throw Error(ErrorKind::NotIdeal, std::string(to_string(v->rule)), v->elements);
    if (q == r.all()) throw Error(ErrorKind::NotProper, "cannot take the quotient by the whole carrier");
    if (!gn.is_graded_ideal(q)) throw Error(ErrorKind::NotGraded, "modulus " + q.to_string() + " is not graded");

    std::vector<Element> coset_of(n, n);
    std::vector<SubsetMask> cosets;
    std::vector<Element> rep;
    for (Element x = 0; x < n; ++x) {
        if (coset_of[x] != n) continue;
        const auto id = static_cast<Element>(cosets.size());
        SubsetMask c = coset_sum(r, SubsetMask::single(x), q);
        c.for_each([&](Element y) { coset_of[y] = id; });
        cosets.push_back(c);
        rep.push_back(x);
    }
    const auto m = static_cast<unsigned>(cosets.size());
    TableRows add(m, std::vector<Element>(m)), mul = add;
    for (Element c = 0; c < m; ++c)
        for (Element d = 0; d < m; ++d) {
            add[c][d] = coset_of[r.add(rep[c], rep[d])];
            mul[c][d] = coset_of[r.mul(rep[c], rep[d])];
            cosets[c].for_each([&](Element a) {
                cosets[d].for_each([&](Element b) {
                    if (coset_of[r.add(a, b)] != add[c][d] || coset_of[r.mul(a, b)] != mul[c][d])
                        throw std::logic_error("coset operations are not well defined");
                });
            });
        }
    FiniteNearRing qring = validate_near_ring(m, add, mul);
    auto projection = validate_hom(r, qring, coset_of);
    if (projection.kernel() != q) throw std::logic_error("projection kernel differs from the modulus");

    std::vector<SubsetMask> comps;
    for (SubsetMask c : gn.components()) comps.push_back(projection.image(c));
    std::optional<GradedNearRing> qgraded;
    try {
        qgraded.emplace(make_graded(qring, gn.monoid(), std::move(comps)));
    } catch (const Error& e) {
        throw Error(ErrorKind::QuotientGradingInvalid, e.what(), e.witness());
    }

    return QuotientStructure{gn, q, std::move(cosets), std::move(projection), IdealLattice(std::move(*qgraded), budget)};
}

/// Index of (a, b) in a product whose second factor has order m.
inline Element pair_index(unsigned m, Element a, Element b) noexcept { return a * m + b; }

/// N x M with componentwise operations and grading (N x M)_g = N_g x M_g.
inline GradedNearRing direct_product(const GradedNearRing& left, const GradedNearRing& right) {
    if (!(left.monoid() == right.monoid()))
        throw Error(ErrorKind::MonoidMismatch, "factors are graded by different monoids");
    const unsigned a = left.order(), b = right.order();
    if (a * b > max_order)
        throw Error(ErrorKind::OrderCapExceeded,
                    "product order " + std::to_string(a * b) + " exceeds " + std::to_string(max_order));
    const unsigned n = a * b;
    TableRows add(n, std::vector<Element>(n)), mul = add;
    const FiniteNearRing& l = left.ring();
    const FiniteNearRing& r = right.ring();
    for (Element x1 = 0; x1 < a; ++x1)
        for (Element x2 = 0; x2 < b; ++x2)
            for (Element y1 = 0; y1 < a; ++y1)
                for (Element y2 = 0; y2 < b; ++y2) {
                    add[pair_index(b, x1, x2)][pair_index(b, y1, y2)] = pair_index(b, l.add(x1, y1), r.add(x2, y2));
                    mul[pair_index(b, x1, x2)][pair_index(b, y1, y2)] = pair_index(b, l.mul(x1, y1), r.mul(x2, y2));
                }
    std::vector<SubsetMask> comps;
    for (Grade g = 0; g < left.grade_count(); ++g) {
        SubsetMask c;
        left.grade_component(g).for_each(
            [&](Element x) { right.grade_component(g).for_each([&](Element y) { c.insert(pair_index(b, x, y)); }); });
        comps.push_back(c);
    }
    return make_graded(validate_near_ring(n, add, mul), left.monoid(), std::move(comps));
}

/// I x J inside N x M; throws NotIdeal if the result is not an ideal of the product.
inline SubsetMask product_ideal(const GradedNearRing& product, unsigned right_order, SubsetMask i, SubsetMask j) {
    SubsetMask out;
    i.for_each([&](Element x) { j.for_each([&](Element y) { out.insert(pair_index(right_order, x, y)); }); });
    if (auto v = ideal_violation(product.ring(), out))
        throw Error(ErrorKind::NotIdeal, std::string(to_string(v->rule)), v->elements);
    return out;
}

/// Splits S ⊆ N x M into its projections; returns them only if S = pr1(S) x pr2(S).
inline std::optional<std::pair<SubsetMask, SubsetMask>> as_rectangle(unsigned right_order, SubsetMask s) {
    SubsetMask p1, p2;
    s.for_each([&](Element x) {
        p1.insert(x / right_order);
        p2.insert(x % right_order);
    });
    SubsetMask rect;
    p1.for_each([&](Element x) { p2.for_each([&](Element y) { rect.insert(pair_index(right_order, x, y)); }); });
    if (rect != s) return std::nullopt;
    return std::pair{p1, p2};
}

}  // namespace gnr
