#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "gnr/gnr.hpp"
#include "oracles.hpp"

using namespace gnr;

namespace {

const GradedNearRing& entry(const std::string& name) { return find_corpus_entry(name)->structure; }

}  // namespace

TEST(Hom, ReductionModTwo) {
    NearRingHom h = validate_hom(cyclic_ring(8), cyclic_ring(2), reduction_map(8, 2));
    EXPECT_EQ(h.kernel(), (SubsetMask{0, 2, 4, 6}));
    EXPECT_TRUE(h.surjective());
    EXPECT_EQ(h(5), 1u);
    EXPECT_EQ(h.preimage({0}), (SubsetMask{0, 2, 4, 6}));
    EXPECT_EQ(h.preimage(SubsetMask::full(2)), SubsetMask::full(8));
    EXPECT_EQ(h.image({0, 4}), SubsetMask{0});
    EXPECT_EQ(preimage_ideal(h, {0}), (SubsetMask{0, 2, 4, 6}));
    NearRingHom h6 = validate_hom(cyclic_ring(6), cyclic_ring(2), reduction_map(6, 2));
    EXPECT_EQ(image_ideal(h6, {0, 3}), SubsetMask::full(2));
    EXPECT_EQ(image_ideal(h6, {0, 2, 4}), SubsetMask{0});
}

TEST(Hom, ShiftIsNotAdditive) {
    FiniteNearRing z2 = cyclic_ring(2);
    expect_error(ErrorKind::HomNotAdditive, {0, 0}, [&] { validate_hom(z2, z2, {1, 0}); });
    EXPECT_EQ(to_string(ErrorKind::HomNotAdditive), "NotAdditive");
}

TEST(Hom, DoublingIntoZ4IsNotMultiplicative) {
    expect_error(ErrorKind::HomNotMultiplicative, {1, 1}, [] { validate_hom(cyclic_ring(2), cyclic_ring(4), {0, 2}); });
}

TEST(Hom, MapShapeIsChecked) {
    expect_error(ErrorKind::MalformedTable, [] { validate_hom(cyclic_ring(4), cyclic_ring(2), {0, 1}); });
    expect_error(ErrorKind::MalformedTable, [] { validate_hom(cyclic_ring(2), cyclic_ring(2), {0, 2}); });
}

TEST(Hom, ComponentRespect) {
    const GradedNearRing& src = entry("z6-or");
    IdealLattice lat(src);
    NearRingHom id = validate_hom(src.ring(), src.ring(), {0, 1, 2, 3, 4, 5});
    EXPECT_TRUE(hom_respects_components(id, lat, src));

    // same carrier with the components swapped
    GradedNearRing swapped = make_graded(cyclic_ring(6), or_monoid(), {SubsetMask{0}, SubsetMask::full(6)});
    auto v = component_respect_violation(id, lat, swapped);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->ideal, (SubsetMask{0, 3}));
    EXPECT_EQ(v->grade, 0u);

    expect_error(ErrorKind::MonoidMismatch,
                 [&] { component_respect_violation(id, lat, cyclic_graded(6, MonoidChoice::trivial)); });
}

TEST(Hom, CorpusHomsRespectComponents) {
    for (const auto& ch : corpus_homs()) {
        const GradedNearRing& s = entry(ch.source);
        const GradedNearRing& t = entry(ch.target);
        NearRingHom h = validate_hom(s.ring(), t.ring(), ch.map);
        EXPECT_TRUE(h.surjective()) << ch.name;
        EXPECT_TRUE(hom_respects_components(h, IdealLattice(s), t)) << ch.name;
    }
}

TEST(Quotient, Z6ModThreeIsZ3) {
    QuotientStructure qs = quotient(entry("z6-or"), {0, 3});
    EXPECT_EQ(qs.quotient.ring().order(), 3u);
    EXPECT_TRUE(oracle::isomorphic(qs.quotient.ring(), cyclic_ring(3)));
    EXPECT_EQ(qs.cosets.size(), 3u);
    EXPECT_EQ(qs.cosets[0], (SubsetMask{0, 3}));
    EXPECT_EQ(qs.projection.kernel(), (SubsetMask{0, 3}));
    EXPECT_EQ(qs.quotient.structure().grade_component(1), SubsetMask{0});
    EXPECT_FALSE(correspondence_violation(qs));
}

TEST(Quotient, ByZeroIsIsomorphic) {
    for (const auto& e : corpus()) {
        if (e.structure.order() < 2 || e.structure.order() > 10) continue;
        QuotientStructure qs = quotient(e.structure, e.structure.ring().zero_set());
        EXPECT_TRUE(oracle::isomorphic(qs.quotient.ring(), e.structure.ring())) << e.name;
    }
}

TEST(Quotient, Z8ModEvensHasOrderTwo) {
    QuotientStructure qs = quotient(entry("z8-or"), {0, 2, 4, 6});
    EXPECT_EQ(qs.quotient.ring().order(), 2u);
    EXPECT_TRUE(oracle::isomorphic(qs.quotient.ring(), cyclic_ring(2)));
}

TEST(Quotient, BadModuli) {
    expect_error(ErrorKind::NotIdeal, [] { quotient(entry("z6-or"), {0, 2}); });
    expect_error(ErrorKind::NotProper, [] { quotient(entry("z6-or"), SubsetMask::full(6)); });
    expect_error(ErrorKind::NotGraded, [] { quotient(entry("gauss2"), {0, 3}); });
}

TEST(Quotient, GradedQuotientOfGaussianRing) {
    QuotientStructure qs = quotient(entry("gauss4"), {0, 2, 8, 10});
    EXPECT_EQ(qs.quotient.ring().order(), 4u);
    EXPECT_EQ(qs.quotient.structure().grade_component(0).size(), 2u);
    EXPECT_EQ(qs.quotient.structure().grade_component(1).size(), 2u);
    EXPECT_FALSE(correspondence_violation(qs));
}

TEST(Product, Z2xZ2) {
    const GradedNearRing& p = entry("z2xz2");
    EXPECT_EQ(p.order(), 4u);
    EXPECT_EQ(p.grade_component(0), SubsetMask{0});
    EXPECT_EQ(p.grade_component(1), SubsetMask::full(4));
    EXPECT_EQ(p.ring().mul(pair_index(2, 1, 1), pair_index(2, 1, 0)), pair_index(2, 1, 0));
    EXPECT_EQ(p.ring().one(), std::optional<Element>{3});
}

TEST(Product, ComponentsAreCartesian) {
    const GradedNearRing& p = entry("z6xz2");
    EXPECT_EQ(p.order(), 12u);
    EXPECT_EQ(p.grade_component(0), SubsetMask::full(12));
    EXPECT_EQ(p.grade_component(1), SubsetMask{0});
}

TEST(Product, IdealsAndRectangles) {
    const GradedNearRing& p = entry("z6xz2");
    const SubsetMask i = product_ideal(p, 2, {0, 3}, SubsetMask::full(2));
    EXPECT_EQ(i.size(), 4u);
    EXPECT_EQ(i, (SubsetMask{0, 1, 6, 7}));
    auto rect = as_rectangle(2, i);
    ASSERT_TRUE(rect);
    EXPECT_EQ(rect->first, (SubsetMask{0, 3}));
    EXPECT_EQ(rect->second, SubsetMask::full(2));
    EXPECT_EQ(product_ideal(p, 2, {0, 2, 4}, {0}).size(), 3u);
    // the diagonal of Z2 x Z2 is a subgroup but not a rectangle
    EXPECT_FALSE(as_rectangle(2, {0, 3}));
    expect_error(ErrorKind::NotIdeal, [&] { product_ideal(p, 2, {0, 2}, {0}); });
}

TEST(Product, Errors) {
    expect_error(ErrorKind::MonoidMismatch, [] { direct_product(entry("z6-or"), entry("z2-mult")); });
    expect_error(ErrorKind::OrderCapExceeded, [] { direct_product(entry("gauss3"), entry("gauss4")); });
}
