#pragma once

/**
 * @file grading.hpp
 * @brief Monoid gradings N = (+)_g N_g of a finite near-ring.
 *
 * A grading assigns to every element g of a finite monoid G an additive
 * normal subgroup N_g such that every element of N decomposes uniquely as
 * a sum of one element from each N_g, and N_g * N_h lies in N_(gh).
 * Components of distinct grades must commute additively, which makes the
 * order of summation irrelevant; grades are summed in index order.
 */

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gnr/algebra.hpp"
#include "gnr/ideals.hpp"

namespace gnr {

using Grade = unsigned;

class GradedNearRing;
GradedNearRing make_graded(FiniteNearRing ring, FiniteMonoid monoid, std::vector<SubsetMask> components);

/// A certified pair (near-ring, grading). Immutable.
class GradedNearRing {
public:
    const FiniteNearRing& ring() const noexcept { return ring_; }
    const FiniteMonoid& monoid() const noexcept { return monoid_; }
    unsigned order() const noexcept { return ring_.order(); }
    unsigned grade_count() const noexcept { return monoid_.order(); }
    const std::vector<SubsetMask>& components() const noexcept { return components_; }

    /// N_g
    SubsetMask grade_component(Grade g) const noexcept { return components_[g]; }
    /// S ∩ N_g
    SubsetMask component(SubsetMask s, Grade g) const noexcept { return s & components_[g]; }
    /// Grade product g*h in the monoid.
    Grade op(Grade g, Grade h) const noexcept { return monoid_.op(g, h); }

    /// The unique (x_g) with x = x_0 + x_1 + ... ; indexed by grade.
    const std::vector<Element>& decompose(Element x) const noexcept { return decomposition_[x]; }

    /// Union of all components.
    SubsetMask homogeneous_elements() const noexcept { return homogeneous_; }

    /// Graded iff the subgroup generated by the homogeneous parts of S is S.
    bool graded_by_regeneration(SubsetMask s) const {
        SubsetMask parts;
        for (Grade g = 0; g < grade_count(); ++g) parts |= component(s, g);
        return subgroup_generated(ring_, parts) == s;
    }

    /// Graded iff every homogeneous part of every member of S lies in S.
    bool graded_by_components(SubsetMask s) const {
        return s.all_of([&](Element x) {
            for (Element part : decompose(x))
                if (!s.contains(part)) return false;
            return true;
        });
    }

    /// Applies both criteria; they must agree on additive subgroups.
    bool is_graded_ideal(SubsetMask ideal) const {
        const bool a = graded_by_regeneration(ideal);
        const bool b = graded_by_components(ideal);
        if (a != b) throw std::logic_error("graded-ideal criteria disagree on " + ideal.to_string());
        return a;
    }

    /// Relabels elements through perm (a bijection); components follow.
    GradedNearRing relabel(const std::vector<Element>& perm) const {
        std::vector<SubsetMask> comps;
        for (SubsetMask c : components_) {
            SubsetMask m;
            c.for_each([&](Element x) { m.insert(perm[x]); });
            comps.push_back(m);
        }
        return make_graded(ring_.relabel(perm), monoid_, std::move(comps));
    }

    /// Copy with the zero moved to index 0.
    GradedNearRing canonicalize_zero() const { return relabel(ring_.zero_first_permutation()); }

private:
    friend GradedNearRing make_graded(FiniteNearRing, FiniteMonoid, std::vector<SubsetMask>);
    GradedNearRing(FiniteNearRing ring, FiniteMonoid monoid, std::vector<SubsetMask> comps,
                   std::vector<std::vector<Element>> decomposition, SubsetMask homogeneous)
        : ring_(std::move(ring)),
          monoid_(std::move(monoid)),
          components_(std::move(comps)),
          decomposition_(std::move(decomposition)),
          homogeneous_(homogeneous) {}

    FiniteNearRing ring_;
    FiniteMonoid monoid_;
    std::vector<SubsetMask> components_;
    std::vector<std::vector<Element>> decomposition_;
    SubsetMask homogeneous_;
};

/**
 * Certifies a grading of ring by monoid with one component per grade.
 *
 * Witness layouts:
 *   ComponentNotNormal       (g, elements of the violated law...)
 *   ComponentsDontCommute    (a, b)
 *   DecompositionNotUnique   (x, parts of the first decomposition..., parts of the second...)
 *   DecompositionNotTotal    (x)
 *   NotMultiplicative        (g, h, a, b): a in N_g, b in N_h, a*b not in N_(gh)
 */
inline GradedNearRing make_graded(FiniteNearRing ring, FiniteMonoid monoid, std::vector<SubsetMask> components) {
    const unsigned n = ring.order();
    const unsigned k = monoid.order();
    if (components.size() != k)
        throw Error(ErrorKind::MalformedTable, "expected " + std::to_string(k) + " components, got " +
                                                   std::to_string(components.size()));
    for (Grade g = 0; g < k; ++g) {
        if (!components[g].subset_of(ring.all()))
            throw Error(ErrorKind::MalformedTable, "component index out of range", {g});
        if (auto v = normal_subgroup_violation(ring, components[g])) {
            std::vector<unsigned> w{g};
            w.insert(w.end(), v->elements.begin(), v->elements.end());
            throw Error(ErrorKind::ComponentNotNormal, std::string(to_string(v->rule)), w);
        }
    }

    for (Grade g = 0; g < k; ++g)
        for (Grade h = g + 1; h < k; ++h) {
            std::optional<std::pair<Element, Element>> bad;
            components[g].all_of([&](Element a) {
                return components[h].all_of([&](Element b) {
                    if (ring.add(a, b) == ring.add(b, a)) return true;
                    bad = {a, b};
                    return false;
                });
            });
            if (bad) throw Error(ErrorKind::ComponentsDontCommute, "", {bad->first, bad->second});
        }

    // Exhaustive fold over the cartesian product of components. A collision
    // shows up within n+1 tuples, so this stays small even when the product
    // of component sizes is large.
    std::vector<std::vector<Element>> members(k);
    for (Grade g = 0; g < k; ++g) members[g] = components[g].elements();
    std::vector<std::vector<Element>> decomposition(n);
    std::vector<bool> hit(n, false);
    std::vector<std::size_t> idx(k, 0);
    for (bool exhausted = false; !exhausted;) {
        std::vector<Element> tuple(k);
        Element sum = ring.zero();
        for (Grade g = 0; g < k; ++g) {
            tuple[g] = members[g][idx[g]];
            sum = ring.add(sum, tuple[g]);
        }
        if (hit[sum]) {
            std::vector<unsigned> w{sum};
            w.insert(w.end(), decomposition[sum].begin(), decomposition[sum].end());
            w.insert(w.end(), tuple.begin(), tuple.end());
            throw Error(ErrorKind::DecompositionNotUnique, "", w);
        }
        hit[sum] = true;
        decomposition[sum] = std::move(tuple);
        for (Grade g = k;;) {
            if (g == 0) {
                exhausted = true;
                break;
            }
            --g;
            if (++idx[g] < members[g].size()) break;
            idx[g] = 0;
        }
    }
    for (Element x = 0; x < n; ++x)
        if (!hit[x]) throw Error(ErrorKind::DecompositionNotTotal, "", {x});

    for (Grade g = 0; g < k; ++g)
        for (Grade h = 0; h < k; ++h) {
            const SubsetMask target = components[monoid.op(g, h)];
            std::optional<std::pair<Element, Element>> bad;
            components[g].all_of([&](Element a) {
                return components[h].all_of([&](Element b) {
                    if (target.contains(ring.mul(a, b))) return true;
                    bad = {a, b};
                    return false;
                });
            });
            if (bad) throw Error(ErrorKind::NotMultiplicative, "", {g, h, bad->first, bad->second});
        }

    SubsetMask homogeneous;
    for (SubsetMask c : components) homogeneous |= c;
    return GradedNearRing(std::move(ring), std::move(monoid), std::move(components), std::move(decomposition),
                          homogeneous);
}

/// The grading by the one-element monoid: N_e = N.
inline GradedNearRing trivially_graded(FiniteNearRing ring) {
    SubsetMask all = ring.all();
    return make_graded(std::move(ring), trivial_monoid(), {all});
}

}  // namespace gnr
