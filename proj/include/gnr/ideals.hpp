#pragma once

/**
 * @file ideals.hpp
 * @brief Subset algebra over a certified near-ring: normal subgroups,
 *        two-sided ideals, ideal generation and literal set products.
 *
 * An ideal I of a right near-ring N is a normal subgroup of (N,+) with
 *   i * n in I                for all i in I, n in N        (right condition)
 *   n * (m + i) - n * m in I  for all n, m in N, i in I     (left condition)
 */

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "gnr/algebra.hpp"

namespace gnr {

/// Upper bound on the number of additive subgroups visited by enumeration.
struct EnumerationBudget {
    std::size_t max_subgroups = 200000;

    /// Reads GNR_ENUM_BUDGET when set to a positive integer, else the default.
    static EnumerationBudget from_environment() {
        EnumerationBudget b;
        if (const char* env = std::getenv("GNR_ENUM_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) b.max_subgroups = static_cast<std::size_t>(v);
        }
        return b;
    }
};

/// Which ideal law a subset breaks, with the elements that show it.
struct IdealViolation {
    enum class Rule { MissingZero, NotClosedAdd, NotClosedNeg, NotNormal, RightCondition, LeftCondition };
    Rule rule;
    std::vector<Element> elements;  ///< (a,b) for add, (a) for neg, (n,i) normal, (i,n) right, (n,m,i) left
};

inline std::string_view to_string(IdealViolation::Rule r) {
    switch (r) {
        case IdealViolation::Rule::MissingZero: return "missing-zero";
        case IdealViolation::Rule::NotClosedAdd: return "not-closed-under-addition";
        case IdealViolation::Rule::NotClosedNeg: return "not-closed-under-negation";
        case IdealViolation::Rule::NotNormal: return "not-normal";
        case IdealViolation::Rule::RightCondition: return "right-condition";
        case IdealViolation::Rule::LeftCondition: return "left-condition";
    }
    return "?";
}

/// First violated subgroup/normality law of S, if any.
inline std::optional<IdealViolation> normal_subgroup_violation(const FiniteNearRing& r, SubsetMask s) {
    using Rule = IdealViolation::Rule;
    if (!s.contains(r.zero())) return IdealViolation{Rule::MissingZero, {}};
    std::optional<IdealViolation> out;
    s.all_of([&](Element a) {
        if (!s.contains(r.neg(a))) {
            out = IdealViolation{Rule::NotClosedNeg, {a}};
            return false;
        }
        return s.all_of([&](Element b) {
            if (s.contains(r.add(a, b))) return true;
            out = IdealViolation{Rule::NotClosedAdd, {a, b}};
            return false;
        });
    });
    if (out) return out;
    for (Element n = 0; n < r.order(); ++n) {
        s.all_of([&](Element i) {
            if (s.contains(r.conjugate(n, i))) return true;
            out = IdealViolation{Rule::NotNormal, {n, i}};
            return false;
        });
        if (out) return out;
    }
    return std::nullopt;
}

inline bool is_normal_subgroup(const FiniteNearRing& r, SubsetMask s) { return !normal_subgroup_violation(r, s); }

/// First violated ideal law of S, if any.
inline std::optional<IdealViolation> ideal_violation(const FiniteNearRing& r, SubsetMask s) {
    using Rule = IdealViolation::Rule;
    if (auto v = normal_subgroup_violation(r, s)) return v;
    const unsigned n = r.order();
    std::optional<IdealViolation> out;
    s.all_of([&](Element i) {
        for (Element x = 0; x < n; ++x)
            if (!s.contains(r.mul(i, x))) {
                out = IdealViolation{Rule::RightCondition, {i, x}};
                return false;
            }
        return true;
    });
    if (out) return out;
    for (Element a = 0; a < n; ++a)
        for (Element m = 0; m < n; ++m) {
            const Element am = r.mul(a, m);
            s.all_of([&](Element i) {
                if (s.contains(r.sub(r.mul(a, r.add(m, i)), am))) return true;
                out = IdealViolation{Rule::LeftCondition, {a, m, i}};
                return false;
            });
            if (out) return out;
        }
    return std::nullopt;
}

inline bool is_ideal(const FiniteNearRing& r, SubsetMask s) { return !ideal_violation(r, s); }

/// Additive subgroup generated by S.
inline SubsetMask subgroup_generated(const FiniteNearRing& r, SubsetMask s) {
    const auto gens = s.elements();
    SubsetMask out = r.zero_set();
    std::vector<Element> stack{r.zero()};
    while (!stack.empty()) {
        Element x = stack.back();
        stack.pop_back();
        for (Element g : gens) {
            Element y = r.add(x, g);
            if (!out.contains(y)) {
                out.insert(y);
                stack.push_back(y);
            }
        }
    }
    return out;
}

/// All additive subgroups, in canonical order.
inline std::vector<SubsetMask> enumerate_subgroups(const FiniteNearRing& r,
                                                   EnumerationBudget budget = EnumerationBudget::from_environment()) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<SubsetMask> found{r.zero_set()};
    seen.insert(r.zero_set().bits());
    for (std::size_t k = 0; k < found.size(); ++k) {
        const SubsetMask s = found[k];
        for (Element x = 0; x < r.order(); ++x) {
            if (s.contains(x)) continue;
            SubsetMask t = subgroup_generated(r, s | SubsetMask::single(x));
            if (seen.insert(t.bits()).second) {
                found.push_back(t);
                if (found.size() > budget.max_subgroups)
                    throw Error(ErrorKind::EnumerationBudgetExceeded,
                                "more than " + std::to_string(budget.max_subgroups) + " additive subgroups");
            }
        }
    }
    std::sort(found.begin(), found.end(), canonical_less);
    return found;
}

inline std::vector<SubsetMask> enumerate_normal_subgroups(
    const FiniteNearRing& r, EnumerationBudget budget = EnumerationBudget::from_environment()) {
    auto subs = enumerate_subgroups(r, budget);
    std::erase_if(subs, [&](SubsetMask s) { return !is_normal_subgroup(r, s); });
    return subs;
}

/// All two-sided ideals, sorted by (size, lexicographic index list).
inline std::vector<SubsetMask> enumerate_ideals(const FiniteNearRing& r,
                                                EnumerationBudget budget = EnumerationBudget::from_environment()) {
    auto subs = enumerate_normal_subgroups(r, budget);
    std::erase_if(subs, [&](SubsetMask s) { return !is_ideal(r, s); });
    return subs;
}

/// Closure rules used by ideal_generated_by; all are on by default.
struct ClosureRules {
    bool add = true;
    bool neg = true;
    bool conjugate = true;
    bool right_multiply = true;
    bool left_term = true;
};

/**
 * Least subset containing S and zero that is closed under the enabled rules.
 * With every rule on this is the smallest ideal containing S.
 *
 * Each element is expanded once; pair rules are applied against the elements
 * already expanded, so every pair is visited when its later member is.
 */
inline SubsetMask ideal_generated_by(const FiniteNearRing& r, SubsetMask s, ClosureRules rules = {}) {
    const unsigned n = r.order();
    SubsetMask members = s | r.zero_set();
    std::vector<Element> pending = members.elements();
    std::vector<Element> done;
    done.reserve(n);
    auto push = [&](Element x) {
        if (!members.contains(x)) {
            members.insert(x);
            pending.push_back(x);
        }
    };
    while (!pending.empty()) {
        const Element i = pending.back();
        pending.pop_back();
        done.push_back(i);
        if (rules.add)
            for (Element d : done) {
                push(r.add(i, d));
                push(r.add(d, i));
            }
        if (rules.neg) push(r.neg(i));
        for (Element x = 0; x < n; ++x) {
            if (rules.conjugate) push(r.conjugate(x, i));
            if (rules.right_multiply) push(r.mul(i, x));
            if (rules.left_term)
                for (Element m = 0; m < n; ++m) push(r.sub(r.mul(x, r.add(m, i)), r.mul(x, m)));
        }
    }
    return members;
}

/// Principal ideal <x>.
inline SubsetMask principal_ideal(const FiniteNearRing& r, Element x) {
    return ideal_generated_by(r, SubsetMask::single(x));
}

/// { a*b : a in A, b in B }, with no additive closure.
inline SubsetMask set_product(const FiniteNearRing& r, SubsetMask a, SubsetMask b) {
    SubsetMask out;
    a.for_each([&](Element x) { b.for_each([&](Element y) { out.insert(r.mul(x, y)); }); });
    return out;
}

/// A*A*...*A (k factors, k >= 1), folded from the left.
inline SubsetMask set_power(const FiniteNearRing& r, SubsetMask a, unsigned k) {
    SubsetMask out = a;
    for (unsigned i = 1; i < k; ++i) out = set_product(r, out, a);
    return out;
}

/// Smallest ideal containing I and J.
inline SubsetMask ideal_sum(const FiniteNearRing& r, SubsetMask i, SubsetMask j) {
    return ideal_generated_by(r, i | j);
}

/// Ideal generated by the literal product set of I and J.
inline SubsetMask ideal_product(const FiniteNearRing& r, SubsetMask i, SubsetMask j) {
    return ideal_generated_by(r, set_product(r, i, j));
}

}  // namespace gnr
