#include <gtest/gtest.h>

#include <random>

#include "gnr/gnr.hpp"
#include "oracles.hpp"

using namespace gnr;

namespace {

std::vector<SubsetMask> random_subsets(unsigned n, unsigned count, std::mt19937_64& rng) {
    std::vector<SubsetMask> out;
    for (unsigned i = 0; i < count; ++i) out.push_back(SubsetMask(rng()) & SubsetMask::full(n));
    return out;
}

std::vector<Element> random_permutation(unsigned n, std::mt19937_64& rng) {
    std::vector<Element> p(n);
    for (Element i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

SubsetMask permute(SubsetMask s, const std::vector<Element>& perm) {
    SubsetMask out;
    s.for_each([&](Element x) { out.insert(perm[x]); });
    return out;
}

const std::vector<Checker> all_checkers{Checker::def,   Checker::homog, Checker::t28c2, Checker::t28c3,
                                        Checker::p29c1, Checker::p29c2, Checker::p213};

}  // namespace

TEST(Properties, GenerationMatchesIntersectionOfIdealsAbove) {
    std::mt19937_64 rng(7);
    for (const auto& e : corpus()) {
        const FiniteNearRing& r = e.structure.ring();
        if (r.order() > 16) continue;
        const auto ideals = oracle::all_ideals(r);
        std::vector<SubsetMask> subsets;
        if (r.order() <= 8) {
            for (std::uint64_t b = 0; b < (std::uint64_t{1} << r.order()); ++b) subsets.emplace_back(b);
        } else {
            subsets = random_subsets(r.order(), 200, rng);
        }
        for (SubsetMask s : subsets)
            EXPECT_EQ(ideal_generated_by(r, s), oracle::to_mask(oracle::generated(ideals, oracle::to_set(s))))
                << e.name << " " << s;
    }
}

TEST(Properties, IdealSumIsTheJoin) {
    for (const auto& e : corpus()) {
        const FiniteNearRing& r = e.structure.ring();
        if (r.order() > 16) continue;
        const auto ideals = oracle::all_ideals(r);
        for (const auto& i : ideals)
            for (const auto& j : ideals) {
                oracle::Set u = i;
                u.insert(j.begin(), j.end());
                EXPECT_EQ(ideal_sum(r, oracle::to_mask(i), oracle::to_mask(j)),
                          oracle::to_mask(oracle::generated(ideals, u)))
                    << e.name;
            }
    }
}

// Every closure rule but negation is needed somewhere in the corpus. On a
// finite carrier negation follows from addition (-x is a multiple of x),
// so dropping it never changes the result.
TEST(Properties, EachClosureRuleMatters) {
    bool ClosureRules::*rules[] = {&ClosureRules::add, &ClosureRules::conjugate, &ClosureRules::right_multiply,
                                   &ClosureRules::left_term};
    const char* names[] = {"add", "conjugate", "right_multiply", "left_term"};
    for (std::size_t k = 0; k < 4; ++k) {
        ClosureRules without;
        without.*rules[k] = false;
        bool changed = false;
        for (const auto& e : corpus()) {
            const FiniteNearRing& r = e.structure.ring();
            for (Element x = 0; x < r.order() && !changed; ++x)
                changed = ideal_generated_by(r, SubsetMask::single(x), without) != principal_ideal(r, x);
        }
        EXPECT_TRUE(changed) << names[k];
    }
    ClosureRules no_neg;
    no_neg.neg = false;
    std::mt19937_64 rng(11);
    for (const auto& e : corpus()) {
        const FiniteNearRing& r = e.structure.ring();
        for (SubsetMask s : random_subsets(r.order(), 50, rng))
            EXPECT_EQ(ideal_generated_by(r, s, no_neg), ideal_generated_by(r, s)) << e.name;
    }
}

TEST(Properties, EnumerationIsCanonicalAndClosed) {
    for (const auto& e : corpus()) {
        const IdealLattice lat(e.structure);
        const auto& ideals = lat.ideals();
        ASSERT_FALSE(ideals.empty());
        EXPECT_EQ(ideals.front(), lat.ring().zero_set());
        EXPECT_EQ(ideals.back(), lat.ring().all());
        for (std::size_t i = 1; i < ideals.size(); ++i) EXPECT_TRUE(canonical_less(ideals[i - 1], ideals[i]));
        for (SubsetMask i : ideals) {
            EXPECT_TRUE(is_ideal(lat.ring(), i));
            EXPECT_TRUE(set_product(lat.ring(), i, lat.ring().all()).subset_of(i));
            for (SubsetMask j : ideals) {
                EXPECT_TRUE(lat.contains_ideal(i & j)) << e.name;
                EXPECT_TRUE(lat.contains_ideal(ideal_sum(lat.ring(), i, j))) << e.name;
            }
        }
    }
}

TEST(Properties, DecompositionSumsBack) {
    for (const auto& e : corpus()) {
        const GradedNearRing& gn = e.structure;
        for (Element x = 0; x < gn.order(); ++x) {
            const auto& parts = gn.decompose(x);
            ASSERT_EQ(parts.size(), gn.grade_count());
            for (Grade g = 0; g < gn.grade_count(); ++g) EXPECT_TRUE(gn.grade_component(g).contains(parts[g]));
            EXPECT_EQ(gn.ring().sum_over(parts), x) << e.name;
        }
    }
}

TEST(Properties, CheckersAgreeWithTheDefinition) {
    for (IdealScope scope : {IdealScope::all, IdealScope::graded}) {
        for (const auto& e : corpus()) {
            const IdealLattice lat(e.structure);
            for (SubsetMask p : lat.proper_graded_ideals()) {
                const bool def = is_graded_prime_def(lat, p, scope).verdict;
                for (Checker c : {Checker::t28c2, Checker::t28c3, Checker::p213})
                    EXPECT_EQ(run_checker(c, lat, p, scope).verdict, def)
                        << e.name << " " << p << " " << checker_name(c);
                if (scope == IdealScope::all) {
                    for (Checker c : {Checker::homog, Checker::p29c1, Checker::p29c2})
                        EXPECT_EQ(run_checker(c, lat, p).verdict, def) << e.name << " " << p << " " << checker_name(c);
                }
            }
        }
    }
}

TEST(Properties, PrimeGradedIdealsAreGradedPrime) {
    for (const auto& e : corpus()) {
        const IdealLattice lat(e.structure);
        for (SubsetMask p : lat.proper_graded_ideals())
            if (is_prime_ideal(lat, p).verdict) {
                EXPECT_TRUE(is_graded_prime_def(lat, p).verdict) << e.name << " " << p;
            }
    }
}

TEST(Properties, RelabellingPreservesEverything) {
    std::mt19937_64 rng(3);
    for (const auto& e : corpus()) {
        if (e.structure.order() > 16) continue;
        const auto perm = random_permutation(e.structure.order(), rng);
        const IdealLattice a(e.structure), b(e.structure.relabel(perm));
        std::vector<SubsetMask> moved;
        for (SubsetMask i : a.ideals()) moved.push_back(permute(i, perm));
        std::sort(moved.begin(), moved.end(), canonical_less);
        std::vector<SubsetMask> target = b.ideals();
        std::sort(target.begin(), target.end(), canonical_less);
        EXPECT_EQ(moved, target) << e.name;
        for (SubsetMask p : a.proper_graded_ideals()) {
            ASSERT_TRUE(b.is_graded(permute(p, perm))) << e.name;
            EXPECT_EQ(is_graded_prime_def(a, p).verdict, is_graded_prime_def(b, permute(p, perm)).verdict) << e.name;
        }
    }
}

TEST(Properties, QuotientSizesAndProjection) {
    for (const auto& e : corpus()) {
        const IdealLattice lat(e.structure);
        for (SubsetMask q : lat.proper_graded_ideals()) {
            QuotientStructure qs = quotient(e.structure, q);
            EXPECT_EQ(qs.quotient.ring().order() * q.size(), e.structure.order()) << e.name;
            EXPECT_TRUE(qs.projection.surjective());
            EXPECT_EQ(qs.projection.kernel(), q);
            EXPECT_FALSE(correspondence_violation(qs)) << e.name << " " << q;
        }
    }
}

TEST(Properties, ProductIdealsHaveProductSize) {
    for (const auto& e : corpus()) {
        if (!e.factors) continue;
        const GradedNearRing& l = find_corpus_entry(e.factors->first)->structure;
        const GradedNearRing& r = find_corpus_entry(e.factors->second)->structure;
        const IdealLattice pl(e.structure);
        for (SubsetMask i : enumerate_ideals(l.ring()))
            for (SubsetMask j : enumerate_ideals(r.ring())) {
                SubsetMask ij = product_ideal(e.structure, r.order(), i, j);
                EXPECT_EQ(ij.size(), i.size() * j.size());
                EXPECT_TRUE(pl.contains_ideal(ij));
                EXPECT_EQ(pl.is_graded(ij), l.is_graded_ideal(i) && r.is_graded_ideal(j)) << e.name;
                auto rect = as_rectangle(r.order(), ij);
                ASSERT_TRUE(rect);
                EXPECT_EQ(rect->first, i);
                EXPECT_EQ(rect->second, j);
            }
    }
}

TEST(Properties, ReportsReplay) {
    for (const auto& e : corpus()) {
        const IdealLattice lat(e.structure);
        for (SubsetMask p : lat.proper_graded_ideals())
            for (Checker c : all_checkers) EXPECT_TRUE(replay(lat, p, run_checker(c, lat, p))) << e.name;
    }
}
