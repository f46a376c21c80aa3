#pragma once

/**
 * @file primality.hpp
 * @brief Classical and graded primality of ideals, decided by several
 *        independent criteria that must agree.
 *
 * A proper graded ideal P is graded prime when, for all ideals A, B and all
 * grades g, h:
 *
 *     A_g * B_h ⊆ P_(gh)   implies   A_g ⊆ P_g  or  B_h ⊆ P_h
 *
 * where S_g = S ∩ N_g and the product is the literal product set. Every
 * quantifier over ideals runs over the full enumerated lattice.
 *
 * Each checker returns a PrimalityReport. A false verdict always carries the
 * first violating tuple in canonical order: B is the outer loop and A the
 * inner one, then g, then h.
 */

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gnr/constructions.hpp"
#include "gnr/lattice.hpp"

namespace gnr {

/// A tuple (A, B, g, h) falsifying a primality condition; elements hold the
/// generating elements when the checker works with principal ideals.
struct Witness {
    SubsetMask a;
    SubsetMask b;
    Grade g = 0;
    Grade h = 0;
    std::vector<Element> elements;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct PrimalityReport {
    bool verdict = true;
    std::optional<Witness> witness;
    std::string checker_id;
};

/// Graded primality criteria. Names match the CLI's --checker values.
enum class Checker { def, homog, t28c2, t28c3, p29c1, p29c2, p213 };

inline std::string_view checker_name(Checker c) {
    switch (c) {
        case Checker::def: return "def";
        case Checker::homog: return "homog";
        case Checker::t28c2: return "t28c2";
        case Checker::t28c3: return "t28c3";
        case Checker::p29c1: return "p29c1";
        case Checker::p29c2: return "p29c2";
        case Checker::p213: return "p213";
    }
    return "?";
}

inline std::optional<Checker> checker_from_name(std::string_view s) {
    for (Checker c : {Checker::def, Checker::homog, Checker::t28c2, Checker::t28c3, Checker::p29c1, Checker::p29c2,
                      Checker::p213})
        if (checker_name(c) == s) return c;
    return std::nullopt;
}

namespace detail {

inline void require_proper_ideal(const IdealLattice& lat, SubsetMask p) {
    if (!lat.contains_ideal(p)) throw Error(ErrorKind::NotIdeal, p.to_string() + " is not an ideal");
    if (!lat.is_proper(p)) throw Error(ErrorKind::NotProper, "the whole carrier is not a proper ideal");
}

inline void require_proper_graded(const IdealLattice& lat, SubsetMask p) {
    require_proper_ideal(lat, p);
    if (!lat.is_graded(p)) throw Error(ErrorKind::NotGraded, p.to_string() + " is not a graded ideal");
}

inline PrimalityReport holds(Checker c) { return {true, std::nullopt, std::string(checker_name(c))}; }
inline PrimalityReport fails(Checker c, Witness w) { return {false, std::move(w), std::string(checker_name(c))}; }

/// Runs body(A, B, g, h) in canonical order until it returns true.
template <class F>
std::optional<Witness> first_pair(const IdealLattice& lat, IdealScope scope, F&& body) {
    const auto& ideals = lat.ideals(scope);
    const unsigned k = lat.structure().grade_count();
    for (SubsetMask b : ideals)
        for (SubsetMask a : ideals)
            for (Grade g = 0; g < k; ++g)
                for (Grade h = 0; h < k; ++h)
                    if (body(a, b, g, h)) return Witness{a, b, g, h, {}};
    return std::nullopt;
}

}  // namespace detail

/// Ordinary primality: AB ⊆ P implies A ⊆ P or B ⊆ P, for all ideals A, B.
inline PrimalityReport is_prime_ideal(const IdealLattice& lat, SubsetMask p) {
    detail::require_proper_ideal(lat, p);
    const FiniteNearRing& r = lat.ring();
    for (SubsetMask b : lat.ideals())
        for (SubsetMask a : lat.ideals())
            if (!a.subset_of(p) && !b.subset_of(p) && set_product(r, a, b).subset_of(p)) {
                const Grade e = lat.structure().monoid().identity();
                return {false, Witness{a, b, e, e, {}}, "prime"};
            }
    return {true, std::nullopt, "prime"};
}

/// The defining condition, quantified over all ideals (or graded ones only).
inline PrimalityReport is_graded_prime_def(const IdealLattice& lat, SubsetMask p, IdealScope scope = IdealScope::all) {
    detail::require_proper_graded(lat, p);
    const GradedNearRing& gn = lat.structure();
    auto w = detail::first_pair(lat, scope, [&](SubsetMask a, SubsetMask b, Grade g, Grade h) {
        const SubsetMask ag = gn.component(a, g), bh = gn.component(b, h);
        if (!set_product(gn.ring(), ag, bh).subset_of(gn.component(p, gn.op(g, h)))) return false;
        return !ag.subset_of(gn.component(p, g)) && !bh.subset_of(gn.component(p, h));
    });
    return w ? detail::fails(Checker::def, *w) : detail::holds(Checker::def);
}

/**
 * Homogeneous-element criterion: for homogeneous i in N_g \ P_g and
 * j in N_h \ P_h, <i>_g <j>_h is not contained in P_(gh).
 */
inline PrimalityReport is_graded_prime_homog(const IdealLattice& lat, SubsetMask p) {
    detail::require_proper_graded(lat, p);
    const GradedNearRing& gn = lat.structure();
    const unsigned k = gn.grade_count();
    for (Grade g = 0; g < k; ++g)
        for (Grade h = 0; h < k; ++h) {
            const SubsetMask target = gn.component(p, gn.op(g, h));
            const SubsetMask is = gn.grade_component(g) - p, js = gn.grade_component(h) - p;
            std::optional<Witness> w;
            is.all_of([&](Element i) {
                const SubsetMask ig = gn.component(lat.principal(i), g);
                return js.all_of([&](Element j) {
                    if (!set_product(gn.ring(), ig, gn.component(lat.principal(j), h)).subset_of(target)) return true;
                    w = Witness{lat.principal(i), lat.principal(j), g, h, {i, j}};
                    return false;
                });
            });
            if (w) return detail::fails(Checker::homog, *w);
        }
    return detail::holds(Checker::homog);
}

/// For all ideals I, J with P_g ⊊ I_g and P_h ⊊ J_h: I_g J_h is not contained in P_(gh).
inline PrimalityReport thm28_condition2(const IdealLattice& lat, SubsetMask p, IdealScope scope = IdealScope::all) {
    detail::require_proper_graded(lat, p);
    const GradedNearRing& gn = lat.structure();
    auto w = detail::first_pair(lat, scope, [&](SubsetMask i, SubsetMask j, Grade g, Grade h) {
        const SubsetMask ig = gn.component(i, g), jh = gn.component(j, h);
        if (!gn.component(p, g).proper_subset_of(ig) || !gn.component(p, h).proper_subset_of(jh)) return false;
        return set_product(gn.ring(), ig, jh).subset_of(gn.component(p, gn.op(g, h)));
    });
    return w ? detail::fails(Checker::t28c2, *w) : detail::holds(Checker::t28c2);
}

/// For all ideals I, J with I_g ⊄ P_g and J_h ⊄ P_h: I_g J_h is not contained in P_(gh).
inline PrimalityReport thm28_condition3(const IdealLattice& lat, SubsetMask p, IdealScope scope = IdealScope::all) {
    detail::require_proper_graded(lat, p);
    const GradedNearRing& gn = lat.structure();
    auto w = detail::first_pair(lat, scope, [&](SubsetMask i, SubsetMask j, Grade g, Grade h) {
        const SubsetMask ig = gn.component(i, g), jh = gn.component(j, h);
        if (ig.subset_of(gn.component(p, g)) || jh.subset_of(gn.component(p, h))) return false;
        return set_product(gn.ring(), ig, jh).subset_of(gn.component(p, gn.op(g, h)));
    });
    return w ? detail::fails(Checker::t28c3, *w) : detail::holds(Checker::t28c3);
}

/**
 * Colon set { t in N_h : t*s in P_(hg) for every s in (<x> + <y>) ∩ N_g }
 * for x, y in N_g.
 */
inline SubsetMask prop29_colon(const IdealLattice& lat, SubsetMask p, Element x, Element y, Grade g, Grade h) {
    const GradedNearRing& gn = lat.structure();
    const SubsetMask s = gn.component(ideal_sum(gn.ring(), lat.principal(x), lat.principal(y)), g);
    const SubsetMask target = gn.component(p, gn.op(h, g));
    SubsetMask out;
    gn.grade_component(h).for_each([&](Element t) {
        if (set_product(gn.ring(), SubsetMask::single(t), s).subset_of(target)) out.insert(t);
    });
    return out;
}

namespace detail {

/// Memoised <b> + <c> for one checker run.
class PrincipalSums {
public:
    explicit PrincipalSums(const IdealLattice& lat) : lat_(lat), cache_(std::size_t{lat.ring().order()} * lat.ring().order()) {}
    SubsetMask operator()(Element b, Element c) {
        const Element lo = std::min(b, c), hi = std::max(b, c);
        auto& slot = cache_[std::size_t{lo} * lat_.ring().order() + hi];
        if (!slot) slot = ideal_sum(lat_.ring(), lat_.principal(lo), lat_.principal(hi));
        return *slot;
    }

private:
    const IdealLattice& lat_;
    std::vector<std::optional<SubsetMask>> cache_;
};

}  // namespace detail

/**
 * For a in N_h and b, c in N_g with a * ((<b> + <c>) ∩ N_g) ⊆ P_(hg):
 * a in P_h, or both b and c in P_g.
 *
 * Witness: a = <a>, b = <b> + <c>, g = h (grade of a), h = g (grade of b, c),
 * elements = (a, b, c).
 */
inline PrimalityReport prop29_condition1(const IdealLattice& lat, SubsetMask p) {
    detail::require_proper_graded(lat, p);
    const GradedNearRing& gn = lat.structure();
    detail::PrincipalSums sums(lat);
    const unsigned k = gn.grade_count();
    for (Grade h = 0; h < k; ++h)
        for (Grade g = 0; g < k; ++g) {
            const SubsetMask target = gn.component(p, gn.op(h, g));
            const auto bs = gn.grade_component(g).elements();
            for (Element a : (gn.grade_component(h) - p).elements())
                for (std::size_t ib = 0; ib < bs.size(); ++ib)
                    for (std::size_t ic = ib; ic < bs.size(); ++ic) {
                        const Element b = bs[ib], c = bs[ic];
                        if (p.contains(b) && p.contains(c)) continue;
                        const SubsetMask sum = sums(b, c);
                        if (set_product(gn.ring(), SubsetMask::single(a), gn.component(sum, g)).subset_of(target))
                            return detail::fails(Checker::p29c1, Witness{lat.principal(a), sum, h, g, {a, b, c}});
                    }
        }
    return detail::holds(Checker::p29c1);
}

/**
 * For x in N_g \ P_g and any y in N_g, the h-component of the colon set
 * (P_(hg) : (<x> + <y>) ∩ N_g) equals P_h. Witness as prop29_condition1
 * with elements = (t, x, y) for an offending t.
 */
inline PrimalityReport prop29_condition2(const IdealLattice& lat, SubsetMask p) {
    detail::require_proper_graded(lat, p);
    const GradedNearRing& gn = lat.structure();
    detail::PrincipalSums sums(lat);
    const unsigned k = gn.grade_count();
    for (Grade g = 0; g < k; ++g)
        for (Grade h = 0; h < k; ++h) {
            const SubsetMask ph = gn.component(p, h);
            const SubsetMask target = gn.component(p, gn.op(h, g));
            for (Element x : (gn.grade_component(g) - p).elements())
                for (Element y : gn.grade_component(g).elements()) {
                    const SubsetMask sum = sums(x, y);
                    const SubsetMask s = gn.component(sum, g);
                    SubsetMask colon;
                    gn.grade_component(h).for_each([&](Element t) {
                        if (set_product(gn.ring(), SubsetMask::single(t), s).subset_of(target)) colon.insert(t);
                    });
                    if (colon != ph) {
                        const Element t = (colon - ph).first();
                        return detail::fails(Checker::p29c2, Witness{lat.principal(t), sum, h, g, {t, x, y}});
                    }
                }
        }
    return detail::holds(Checker::p29c2);
}

/**
 * Quotient criterion: in N/P, whenever pi(A_g) and pi(B_h) are both nonzero,
 * their product is nonzero.
 */
inline PrimalityReport quotient_nonzero_product_check(const IdealLattice& lat, const QuotientStructure& qs,
                                                      IdealScope scope = IdealScope::all) {
    const GradedNearRing& gn = lat.structure();
    const FiniteNearRing& qr = qs.quotient.ring();
    const SubsetMask zero = qr.zero_set();
    auto w = detail::first_pair(lat, scope, [&](SubsetMask a, SubsetMask b, Grade g, Grade h) {
        const SubsetMask ag = qs.projection.image(gn.component(a, g));
        const SubsetMask bh = qs.projection.image(gn.component(b, h));
        return ag != zero && bh != zero && set_product(qr, ag, bh) == zero;
    });
    return w ? detail::fails(Checker::p213, *w) : detail::holds(Checker::p213);
}

inline PrimalityReport quotient_nonzero_product_check(const IdealLattice& lat, SubsetMask p,
                                                      IdealScope scope = IdealScope::all) {
    detail::require_proper_graded(lat, p);
    return quotient_nonzero_product_check(lat, quotient(lat.structure(), p), scope);
}

/// Dispatch by checker. scope is ignored by the element-based criteria.
inline PrimalityReport run_checker(Checker c, const IdealLattice& lat, SubsetMask p,
                                   IdealScope scope = IdealScope::all) {
    switch (c) {
        case Checker::def: return is_graded_prime_def(lat, p, scope);
        case Checker::homog: return is_graded_prime_homog(lat, p);
        case Checker::t28c2: return thm28_condition2(lat, p, scope);
        case Checker::t28c3: return thm28_condition3(lat, p, scope);
        case Checker::p29c1: return prop29_condition1(lat, p);
        case Checker::p29c2: return prop29_condition2(lat, p);
        case Checker::p213: return quotient_nonzero_product_check(lat, p, scope);
    }
    throw std::logic_error("unknown checker");
}

/// Proper graded ideals passing the defining condition, in canonical order.
inline std::vector<SubsetMask> graded_primes(const IdealLattice& lat, IdealScope scope = IdealScope::all) {
    std::vector<SubsetMask> out;
    for (SubsetMask p : lat.proper_graded_ideals())
        if (is_graded_prime_def(lat, p, scope).verdict) out.push_back(p);
    return out;
}

/// (J_g)^n ⊆ P_(g^n) implies J_g ⊆ P_g, for every grade g.
inline bool power_descends_componentwise(const IdealLattice& lat, SubsetMask p, SubsetMask j, unsigned n) {
    const GradedNearRing& gn = lat.structure();
    for (Grade g = 0; g < gn.grade_count(); ++g) {
        const SubsetMask jg = gn.component(j, g);
        if (set_power(gn.ring(), jg, n).subset_of(gn.component(p, gn.monoid().power(g, n))) &&
            !jg.subset_of(gn.component(p, g)))
            return false;
    }
    return true;
}

/// J^n ⊆ P implies J ⊆ P.
inline bool power_descends_globally(const IdealLattice& lat, SubsetMask p, SubsetMask j, unsigned n) {
    return !(set_power(lat.ring(), j, n).subset_of(p) && !j.subset_of(p));
}

/**
 * Both descent implications for one J and n. They are expected to hold
 * whenever P is an intersection of graded primes; the caller establishes that.
 */
inline bool power_descends(const IdealLattice& lat, SubsetMask p, SubsetMask j, unsigned n) {
    return power_descends_componentwise(lat, p, j, n) && power_descends_globally(lat, p, j, n);
}

/// No proper ideal strictly contains I.
inline bool is_maximal_ideal(const IdealLattice& lat, SubsetMask i) {
    detail::require_proper_ideal(lat, i);
    for (SubsetMask j : lat.ideals())
        if (lat.is_proper(j) && i.proper_subset_of(j)) return false;
    return true;
}

/// A_g B_h ⊆ P_(gh) with A_g ⊄ P_g and B_h ⊄ P_h, A and B ideals.
inline bool replays_graded_violation(const IdealLattice& lat, SubsetMask p, const Witness& w) {
    const GradedNearRing& gn = lat.structure();
    if (!lat.contains_ideal(w.a) || !lat.contains_ideal(w.b)) return false;
    if (w.g >= gn.grade_count() || w.h >= gn.grade_count()) return false;
    const SubsetMask ag = gn.component(w.a, w.g), bh = gn.component(w.b, w.h);
    return set_product(gn.ring(), ag, bh).subset_of(gn.component(p, gn.op(w.g, w.h))) &&
           !ag.subset_of(gn.component(p, w.g)) && !bh.subset_of(gn.component(p, w.h));
}

/**
 * Re-checks a report's witness independently of the checker that produced
 * it. Returns true when the report is consistent: a true verdict has no
 * witness, a false one carries a genuine violation of its criterion.
 */
inline bool replay(const IdealLattice& lat, SubsetMask p, const PrimalityReport& rep) {
    if (rep.verdict) return !rep.witness.has_value();
    if (!rep.witness) return false;
    const Witness& w = *rep.witness;
    const GradedNearRing& gn = lat.structure();
    if (rep.checker_id == "prime") {
        return lat.contains_ideal(w.a) && lat.contains_ideal(w.b) && !w.a.subset_of(p) && !w.b.subset_of(p) &&
               set_product(gn.ring(), w.a, w.b).subset_of(p);
    }
    if (rep.checker_id == "p29c1" || rep.checker_id == "p29c2") {
        if (w.elements.size() != 3) return false;
        const Element a = w.elements[0], b = w.elements[1], c = w.elements[2];
        const SubsetMask sum = ideal_sum(gn.ring(), principal_ideal(gn.ring(), b), principal_ideal(gn.ring(), c));
        return w.a == principal_ideal(gn.ring(), a) && w.b == sum && gn.grade_component(w.g).contains(a) &&
               !p.contains(a) && gn.grade_component(w.h).contains(b) && gn.grade_component(w.h).contains(c) &&
               !(p.contains(b) && p.contains(c)) &&
               set_product(gn.ring(), SubsetMask::single(a), gn.component(sum, w.h))
                   .subset_of(gn.component(p, gn.op(w.g, w.h)));
    }
    return replays_graded_violation(lat, p, w);
}

}  // namespace gnr
