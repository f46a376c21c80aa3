#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "gnr/gnr.hpp"
#include "oracles.hpp"

using namespace gnr;

namespace {

const IdealLattice& lattice(const std::string& name) {
    static std::map<std::string, std::unique_ptr<IdealLattice>> cache;
    auto& slot = cache[name];
    if (!slot) slot = std::make_unique<IdealLattice>(find_corpus_entry(name)->structure);
    return *slot;
}

const SubsetMask one_plus_i_mod4{0, 2, 5, 7, 8, 10, 13, 15};

}  // namespace

TEST(Prime, ZeroInZ6IsNotPrime) {
    auto rep = is_prime_ideal(lattice("z6-or"), {0});
    EXPECT_FALSE(rep.verdict);
    ASSERT_TRUE(rep.witness);
    EXPECT_EQ(rep.witness->a, (SubsetMask{0, 2, 4}));
    EXPECT_EQ(rep.witness->b, (SubsetMask{0, 3}));
    EXPECT_EQ(rep.checker_id, "prime");
    EXPECT_TRUE(replay(lattice("z6-or"), {0}, rep));
    EXPECT_TRUE(is_prime_ideal(lattice("z6-or"), {0, 3}).verdict);
    EXPECT_TRUE(is_prime_ideal(lattice("z6-or"), {0, 2, 4}).verdict);
}

TEST(GradedPrime, ZeroInZ6HasTheSameWitnessInGradeZero) {
    auto rep = is_graded_prime_def(lattice("z6-or"), {0});
    EXPECT_FALSE(rep.verdict);
    ASSERT_TRUE(rep.witness);
    EXPECT_EQ(*rep.witness, (Witness{{0, 2, 4}, {0, 3}, 0, 0, {}}));
    EXPECT_EQ(graded_primes(lattice("z6-or")), (std::vector<SubsetMask>{{0, 3}, {0, 2, 4}}));
}

TEST(GradedPrime, ZeroInZ8SquaresToZero) {
    auto rep = is_graded_prime_def(lattice("z8-or"), {0});
    EXPECT_FALSE(rep.verdict);
    ASSERT_TRUE(rep.witness);
    EXPECT_EQ(rep.witness->a, (SubsetMask{0, 4}));
    EXPECT_EQ(rep.witness->b, (SubsetMask{0, 4}));
    EXPECT_EQ(graded_primes(lattice("z8-or")), (std::vector<SubsetMask>{{0, 2, 4, 6}}));
}

TEST(GradedPrime, ZeroInZ2xZ2) {
    auto rep = is_graded_prime_def(lattice("z2xz2"), {0});
    EXPECT_FALSE(rep.verdict);
    ASSERT_TRUE(rep.witness);
    EXPECT_EQ(*rep.witness, (Witness{{0, 2}, {0, 1}, 1, 1, {}}));
    EXPECT_TRUE(replay(lattice("z2xz2"), {0}, rep));
    EXPECT_EQ(graded_primes(lattice("z2xz2")), (std::vector<SubsetMask>{{0, 1}, {0, 2}}));
}

TEST(GradedPrime, TwoInGaussianModFourIsGradedPrimeButNotPrime) {
    const IdealLattice& lat = lattice("gauss4");
    const SubsetMask two{0, 2, 8, 10};
    ASSERT_EQ(principal_ideal(lat.ring(), 2), two);
    ASSERT_EQ(principal_ideal(lat.ring(), 5), one_plus_i_mod4);
    EXPECT_TRUE(is_graded_prime_def(lat, two).verdict);
    auto rep = is_prime_ideal(lat, two);
    EXPECT_FALSE(rep.verdict);
    ASSERT_TRUE(rep.witness);
    EXPECT_EQ(rep.witness->a, one_plus_i_mod4);
    EXPECT_EQ(rep.witness->b, one_plus_i_mod4);
    EXPECT_FALSE(lat.is_graded(one_plus_i_mod4));
}

TEST(GradedPrime, GradedScopeOnlyWeakensTheCondition) {
    for (const auto& e : corpus()) {
        const IdealLattice& lat = lattice(e.name);
        for (SubsetMask p : graded_primes(lat, IdealScope::all))
            EXPECT_TRUE(is_graded_prime_def(lat, p, IdealScope::graded).verdict) << e.name << " " << p;
    }
}

TEST(Preconditions, CheckersRejectBadCandidates) {
    expect_error(ErrorKind::NotProper, [] { is_graded_prime_def(lattice("z6-or"), SubsetMask::full(6)); });
    expect_error(ErrorKind::NotIdeal, [] { is_graded_prime_def(lattice("z6-or"), {0, 2}); });
    expect_error(ErrorKind::NotGraded, [] { is_graded_prime_def(lattice("gauss2"), {0, 3}); });
    expect_error(ErrorKind::NotGraded, [] { is_graded_prime_homog(lattice("gauss2"), {0, 3}); });
    expect_error(ErrorKind::NotProper, [] { is_prime_ideal(lattice("z8-or"), SubsetMask::full(8)); });
    // ordinary primality does not need a graded candidate
    EXPECT_TRUE(is_prime_ideal(lattice("gauss2"), {0, 3}).verdict);
}

TEST(Colon, ExampleInZ6) {
    EXPECT_EQ(prop29_colon(lattice("z6-or"), {0, 2, 4}, 3, 0, 0, 0), (SubsetMask{0, 2, 4}));
    EXPECT_EQ(prop29_colon(lattice("z6-or"), {0, 2, 4}, 1, 0, 0, 0), (SubsetMask{0, 2, 4}));
    EXPECT_EQ(prop29_colon(lattice("z6-or"), {0, 3}, 2, 0, 0, 0), (SubsetMask{0, 3}));
}

TEST(PowerDescent, Examples) {
    const IdealLattice& z8 = lattice("z8-or");
    EXPECT_TRUE(power_descends(z8, {0, 2, 4, 6}, SubsetMask::full(8), 3));
    // {0} is not an intersection of graded primes in Z8; descent fails there
    EXPECT_FALSE(power_descends(z8, {0}, {0, 2, 4, 6}, 3));
    EXPECT_TRUE(power_descends(z8, {0}, {0, 2, 4, 6}, 2));  // the square is {0,4}

    // modulo 2, <1+i> squares to zero but is not graded
    const IdealLattice& g2 = lattice("gauss2");
    ASSERT_EQ(graded_primes(g2), std::vector<SubsetMask>{SubsetMask{0}});
    EXPECT_TRUE(power_descends_componentwise(g2, {0}, {0, 3}, 2));
    EXPECT_FALSE(power_descends_globally(g2, {0}, {0, 3}, 2));
    for (SubsetMask j : g2.graded_ideals())
        for (unsigned n = 1; n <= 4; ++n) EXPECT_TRUE(power_descends(g2, {0}, j, n)) << j << " " << n;
}

TEST(Maximal, Examples) {
    EXPECT_TRUE(is_maximal_ideal(lattice("z6-or"), {0, 3}));
    EXPECT_TRUE(is_maximal_ideal(lattice("z6-or"), {0, 2, 4}));
    EXPECT_FALSE(is_maximal_ideal(lattice("z6-or"), {0}));
    EXPECT_TRUE(is_maximal_ideal(lattice("z8-or"), {0, 2, 4, 6}));
    EXPECT_TRUE(is_maximal_ideal(lattice("gauss4"), one_plus_i_mod4));
    expect_error(ErrorKind::NotProper, [] { is_maximal_ideal(lattice("z6-or"), SubsetMask::full(6)); });
}

TEST(Checkers, NamesRoundTrip) {
    for (Checker c : {Checker::def, Checker::homog, Checker::t28c2, Checker::t28c3, Checker::p29c1, Checker::p29c2,
                      Checker::p213})
        EXPECT_EQ(checker_from_name(checker_name(c)), c);
    EXPECT_FALSE(checker_from_name("nope"));
}

TEST(Checkers, DefinitionMatchesOracle) {
    for (const auto& e : corpus()) {
        const IdealLattice& lat = lattice(e.name);
        if (lat.ring().order() > 16) continue;
        std::vector<oracle::Set> all, graded;
        for (SubsetMask s : lat.ideals()) all.push_back(oracle::to_set(s));
        for (SubsetMask s : lat.graded_ideals()) graded.push_back(oracle::to_set(s));
        for (SubsetMask p : lat.proper_graded_ideals()) {
            const auto ps = oracle::to_set(p);
            EXPECT_EQ(is_graded_prime_def(lat, p).verdict, oracle::graded_prime(lat.structure(), all, ps))
                << e.name << " " << p;
            EXPECT_EQ(is_graded_prime_def(lat, p, IdealScope::graded).verdict,
                      oracle::graded_prime(lat.structure(), graded, ps))
                << e.name << " " << p;
        }
        for (SubsetMask p : lat.ideals())
            if (lat.is_proper(p)) {
                EXPECT_EQ(is_prime_ideal(lat, p).verdict, oracle::prime(lat.ring(), all, oracle::to_set(p)))
                    << e.name << " " << p;
            }
    }
}

TEST(Checkers, EveryFailureReplays) {
    for (const auto& e : corpus()) {
        const IdealLattice& lat = lattice(e.name);
        for (SubsetMask p : lat.proper_graded_ideals())
            for (Checker c : {Checker::def, Checker::homog, Checker::t28c2, Checker::t28c3, Checker::p29c1,
                              Checker::p29c2, Checker::p213}) {
                auto rep = run_checker(c, lat, p);
                EXPECT_EQ(rep.checker_id, checker_name(c));
                EXPECT_TRUE(replay(lat, p, rep)) << e.name << " " << p << " " << checker_name(c);
            }
    }
}

TEST(Checkers, ReplayRejectsForgedWitnesses) {
    const IdealLattice& lat = lattice("z6-or");
    PrimalityReport forged{false, Witness{{0, 3}, {0, 3}, 0, 0, {}}, "def"};
    EXPECT_FALSE(replay(lat, {0}, forged));
    PrimalityReport missing{false, std::nullopt, "def"};
    EXPECT_FALSE(replay(lat, {0}, missing));
    PrimalityReport extra{true, Witness{{0, 3}, {0, 3}, 0, 0, {}}, "def"};
    EXPECT_FALSE(replay(lat, {0}, extra));
}

TEST(Checkers, QuotientCriterionOnExplicitQuotient) {
    const IdealLattice& lat = lattice("z6-or");
    QuotientStructure qs = quotient(lat.structure(), {0, 3});
    EXPECT_TRUE(quotient_nonzero_product_check(lat, qs).verdict);
    QuotientStructure z8 = quotient(lattice("z8-or").structure(), {0, 4});
    auto rep = quotient_nonzero_product_check(lattice("z8-or"), z8);
    EXPECT_FALSE(rep.verdict);
    EXPECT_TRUE(replay(lattice("z8-or"), {0, 4}, rep));
}
