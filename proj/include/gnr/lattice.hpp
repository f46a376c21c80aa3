#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "gnr/grading.hpp"
#include "gnr/ideals.hpp"

namespace gnr {

/// Which ideals A, B the graded primality quantifier ranges over.
enum class IdealScope { all, graded };

/**
 * A graded near-ring together with its enumerated ideal lattice. Every
 * quantifier "for all ideals" in the primality and construction code runs
 * over ideals(), so this is computed once per structure and shared.
 */
class IdealLattice {
public:
    explicit IdealLattice(GradedNearRing gn, EnumerationBudget budget = EnumerationBudget::from_environment())
        : gn_(std::move(gn)), ideals_(enumerate_ideals(gn_.ring(), budget)) {
        for (SubsetMask i : ideals_)
            if (gn_.is_graded_ideal(i)) graded_.push_back(i);
        principal_.resize(gn_.order());
        for (Element x = 0; x < gn_.order(); ++x) principal_[x] = principal_ideal(gn_.ring(), x);
    }

    const GradedNearRing& structure() const noexcept { return gn_; }
    const FiniteNearRing& ring() const noexcept { return gn_.ring(); }

    /// All ideals in canonical order.
    const std::vector<SubsetMask>& ideals() const noexcept { return ideals_; }
    /// Graded ideals in canonical order.
    const std::vector<SubsetMask>& graded_ideals() const noexcept { return graded_; }
    const std::vector<SubsetMask>& ideals(IdealScope scope) const noexcept {
        return scope == IdealScope::all ? ideals_ : graded_;
    }

    bool contains_ideal(SubsetMask s) const noexcept {
        return std::find(ideals_.begin(), ideals_.end(), s) != ideals_.end();
    }
    bool is_graded(SubsetMask s) const noexcept {
        return std::find(graded_.begin(), graded_.end(), s) != graded_.end();
    }
    bool is_proper(SubsetMask s) const noexcept { return s != gn_.ring().all(); }

    /// Proper graded ideals in canonical order.
    std::vector<SubsetMask> proper_graded_ideals() const {
        std::vector<SubsetMask> out;
        for (SubsetMask i : graded_)
            if (is_proper(i)) out.push_back(i);
        return out;
    }

    /// <x>
    SubsetMask principal(Element x) const noexcept { return principal_[x]; }

private:
    GradedNearRing gn_;
    std::vector<SubsetMask> ideals_;
    std::vector<SubsetMask> graded_;
    std::vector<SubsetMask> principal_;
};

}  // namespace gnr
