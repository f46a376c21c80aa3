#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "gnr/gnr.hpp"
#include "oracles.hpp"

using namespace gnr;

TEST(Grading, TrivialAndOrGradings) {
    GradedNearRing t = cyclic_graded(6, MonoidChoice::trivial);
    EXPECT_EQ(t.grade_count(), 1u);
    EXPECT_EQ(t.homogeneous_elements(), SubsetMask::full(6));
    GradedNearRing o = cyclic_graded(6, MonoidChoice::or_monoid);
    EXPECT_EQ(o.grade_component(0), SubsetMask::full(6));
    EXPECT_EQ(o.grade_component(1), SubsetMask{0});
    EXPECT_EQ(o.decompose(5), (std::vector<Element>{5, 0}));
}

TEST(Grading, AdditiveGroupCannotGradeZ2WithEverythingInGradeOne) {
    FiniteNearRing z2 = cyclic_ring(2);
    expect_error(ErrorKind::NotMultiplicative, {1, 1, 1, 1},
                 [&] { make_graded(z2, cyclic_group_2(), {z2.zero_set(), z2.all()}); });
    // the same components over the multiplicative monoid are fine
    GradedNearRing ok = cyclic_graded(2, MonoidChoice::multiplicative);
    EXPECT_EQ(ok.grade_component(1), SubsetMask::full(2));
}

TEST(Grading, GaussianComponentsAndDecomposition) {
    GradedNearRing g3 = gaussian_mod(3);
    EXPECT_EQ(g3.grade_component(0), (SubsetMask{0, 1, 2}));
    EXPECT_EQ(g3.grade_component(1), (SubsetMask{0, 3, 6}));
    // 7 = 1 + 2i
    EXPECT_EQ(g3.decompose(7), (std::vector<Element>{1, 6}));
    EXPECT_EQ(g3.homogeneous_elements().size(), 5u);
}

TEST(Grading, OnePlusIIsNotGradedModTwo) {
    GradedNearRing g2 = gaussian_mod(2);
    const SubsetMask one_plus_i = principal_ideal(g2.ring(), 3);
    EXPECT_EQ(one_plus_i, (SubsetMask{0, 3}));
    EXPECT_FALSE(g2.is_graded_ideal(one_plus_i));
    EXPECT_FALSE(g2.graded_by_regeneration(one_plus_i));
    EXPECT_FALSE(g2.graded_by_components(one_plus_i));
    EXPECT_FALSE(oracle::graded(g2, oracle::to_set(one_plus_i)));
}

TEST(Grading, GaussianRealsCannotBeTheIdentityGradeOfTheMultiplicativeMonoid) {
    GradedNearRing g2 = gaussian_mod(2);
    // i * i = -1 leaves the imaginary component
    expect_error(ErrorKind::NotMultiplicative, {0, 0, 2, 2}, [&] {
        make_graded(g2.ring(), multiplicative_monoid(), {g2.grade_component(1), g2.grade_component(0)});
    });
}

TEST(Grading, MapsOnZ2AreNotGradedOverOr) {
    FiniteNearRing m = map_near_ring(2);
    // swap o zero = const-1, which is not in N_1 = {0}
    expect_error(ErrorKind::NotMultiplicative, {0, 1, 1, 0},
                 [&] { make_graded(m, or_monoid(), {m.all(), m.zero_set()}); });
}

TEST(Grading, ComponentNotNormal) {
    FiniteNearRing z6 = cyclic_ring(6);
    expect_error(ErrorKind::ComponentNotNormal, {0, 2}, [&] { make_graded(z6, trivial_monoid(), {{0, 2}}); });
}

TEST(Grading, ComponentsDontCommute) {
    FiniteNearRing s3 = symmetric3_left_projection();
    SubsetMask a3;
    for (SubsetMask s : enumerate_normal_subgroups(s3))
        if (s.size() == 3) a3 = s;
    ASSERT_EQ(a3.size(), 3u);
    expect_error(ErrorKind::ComponentsDontCommute, [&] { make_graded(s3, or_monoid(), {s3.all(), a3}); });
}

TEST(Grading, DecompositionNotUnique) {
    FiniteNearRing z6 = cyclic_ring(6);
    expect_error(ErrorKind::DecompositionNotUnique, {1, 0, 1, 1, 0},
                 [&] { make_graded(z6, or_monoid(), {z6.all(), z6.all()}); });
}

TEST(Grading, DecompositionNotTotal) {
    FiniteNearRing z6 = cyclic_ring(6);
    expect_error(ErrorKind::DecompositionNotTotal, {1}, [&] { make_graded(z6, or_monoid(), {{0}, {0, 3}}); });
}

TEST(Grading, ComponentCountMustMatchTheMonoid) {
    FiniteNearRing z6 = cyclic_ring(6);
    expect_error(ErrorKind::MalformedTable, [&] { make_graded(z6, or_monoid(), {z6.all()}); });
    expect_error(ErrorKind::MalformedTable, [&] { make_graded(z6, trivial_monoid(), {SubsetMask{0, 9}}); });
}

TEST(Grading, GradedIdealsOfProducts) {
    const GradedNearRing& z2xz2 = find_corpus_entry("z2xz2")->structure;
    // (0,0)=0 (0,1)=1 (1,0)=2 (1,1)=3; grade 0 is {0}, grade 1 is everything
    for (SubsetMask s : enumerate_ideals(z2xz2.ring())) EXPECT_TRUE(z2xz2.is_graded_ideal(s)) << s;
    const GradedNearRing g4 = gaussian_mod(4);
    IdealLattice lat(g4);
    std::vector<SubsetMask> brute;
    for (const auto& s : oracle::all_ideals(g4.ring()))
        if (oracle::graded(g4, s)) brute.push_back(oracle::to_mask(s));
    std::sort(brute.begin(), brute.end(), canonical_less);
    EXPECT_EQ(lat.graded_ideals(), brute);
    EXPECT_TRUE(lat.is_graded({0, 2, 8, 10}));
}

TEST(Grading, RelabelKeepsComponentsAligned) {
    GradedNearRing g3 = gaussian_mod(3);
    std::vector<Element> perm{8, 7, 6, 5, 4, 3, 2, 1, 0};
    GradedNearRing r = g3.relabel(perm);
    EXPECT_EQ(r.ring().zero(), 8u);
    for (Grade g = 0; g < 2; ++g)
        g3.grade_component(g).for_each([&](Element x) { EXPECT_TRUE(r.grade_component(g).contains(perm[x])); });
    EXPECT_EQ(r.canonicalize_zero().ring().zero(), 0u);
}

TEST(Grading, CriteriaAgreeWithOracleOnEverySubgroup) {
    for (const auto& e : corpus()) {
        const GradedNearRing& gn = e.structure;
        if (gn.order() > 16) continue;
        for (SubsetMask s : enumerate_subgroups(gn.ring())) {
            const bool expected = oracle::graded(gn, oracle::to_set(s));
            EXPECT_EQ(gn.graded_by_components(s), expected) << e.name << " " << s;
            EXPECT_EQ(gn.graded_by_regeneration(s), expected) << e.name << " " << s;
        }
    }
}
