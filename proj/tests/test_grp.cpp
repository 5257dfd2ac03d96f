#include "realhyp/catalog.hpp"

#include <gtest/gtest.h>

using namespace realhyp;
using namespace realhyp::mats;

namespace {

Rational R(Int p, Int q = 1) { return Rational(p, q); }
const Rational h(1, 2), q4(1, 4);

ProductMap pm(RatVec2 e, const IntMat2& fl, RatVec2 ft = {}) {
    return ProductMap(CurveMap::translation(e), CurveMap(fl, ft));
}

ProductMap anti(const IntMat2& a1, RatVec2 b1, const IntMat2& a2, RatVec2 b2 = {}) {
    return ProductMap(CurveMap(a1, b1), CurveMap(a2, b2));
}

}  // namespace

TEST(Closure, CyclicGroups) {
    EXPECT_EQ(closure({pm({q4, 0}, rot4)}).order(), 4u);
    EXPECT_EQ(closure({pm({R(1, 6), 0}, -rot3)}).order(), 6u);
    EXPECT_EQ(closure({pm({h, 0}, -I), pm({0, h}, I, {h, 0})}).order(), 4u);
    EXPECT_EQ(closure({}).order(), 1u);
}

TEST(Closure, CapExceeded) {
    EXPECT_THROW(closure({pm({R(1, 65), 0}, I)}), Error);
    EXPECT_NO_THROW(closure({pm({R(1, 65), 0}, I)}, 65));
}

TEST(Closure, Idempotent) {
    auto G = closure({pm({q4, 0}, rot4), pm({0, h}, I, {h, h})});
    auto G2 = closure(G.elements);
    EXPECT_EQ(G.elements, G2.elements);
}

TEST(HolomorphicSubgroup, IndexTwo) {
    auto full = closure({pm({h, 0}, -I), anti(conj_im, {}, conj_im)});
    auto G = holomorphic_subgroup(full);
    EXPECT_EQ(full.order(), 4u);
    EXPECT_EQ(G.order(), 2u);
    for (const auto& g : G.elements) EXPECT_FALSE(g.antiholomorphic());
}

TEST(Split, SplitAndNonSplit) {
    auto split = make_extended({pm({h, 0}, -I)}, anti(conj_im, {}, conj_im));
    EXPECT_TRUE(split.split);
    EXPECT_EQ(split.name_full, NamedGroup::Z2xZ2);
    // every lift squares to a nonzero translation
    auto non = make_extended({pm({h, h}, -I), pm({h, 0}, I, {h, h})}, anti(conj_im, {R(1, 4), 0}, swap, {h, 0}));
    EXPECT_FALSE(non.split);
    EXPECT_EQ(non.name_full, NamedGroup::Z4xZ2);
}

TEST(H2, SmallCases) {
    EXPECT_EQ(h2_z2({2}, {{1}}), (std::vector<Int>{2}));
    EXPECT_TRUE(h2_z2({2, 2}, {{1, 0}, {1, 1}}).empty());
    EXPECT_TRUE(h2_z2({3}, {{-1}}).empty());
    EXPECT_EQ(h2_z2({4}, {{-1}}), (std::vector<Int>{2}));
    EXPECT_THROW(h2_z2({3}, {{0}}), Error);
}

TEST(Classify, NonAbelianGroups) {
    // D4 = Z/4 with sigma inverting
    auto d4 = make_extended({pm({0, q4}, rot4)}, anti(conj_im, {}, conj_im));
    EXPECT_EQ(d4.name_holo, NamedGroup::Z4);
    EXPECT_EQ(d4.name_full, NamedGroup::D4);
    auto d6 = make_extended({pm({0, R(1, 6)}, -rot3)}, anti(conj_im, {}, conj_half));
    EXPECT_EQ(d6.name_full, NamedGroup::D6);
    auto s3 = make_extended({pm({0, R(1, 3)}, rot3)}, anti(conj_im, {}, conj_half));
    EXPECT_EQ(s3.name_full, NamedGroup::S3);
    // G1: sigma commutes with t and inverts g
    auto g1 = make_extended({pm({q4, q4}, rot4), pm({h, 0}, I, {h, h})}, anti(conj_im, {}, conj_im, {h, 0}));
    EXPECT_EQ(g1.name_holo, NamedGroup::Z4xZ2);
    EXPECT_EQ(g1.name_full, NamedGroup::G1);
}

TEST(Classify, ConjugationInvariant) {
    auto base = {pm({q4, 0}, rot4), pm({0, h}, I, {h, h})};
    ProductMap c(CurveMap(I, {R(1, 7), R(2, 5)}), CurveMap(rot4, {R(1, 3), 0}));
    std::vector<ProductMap> conj;
    for (const auto& g : base) conj.push_back(conjugate(c, g));
    auto a = classify_abstract(abstract(closure(base)));
    auto b = classify_abstract(abstract(closure(conj)));
    EXPECT_EQ(a, NamedGroup::Z4xZ2);
    EXPECT_EQ(a, b);
}

TEST(Classify, NamesRoundTrip) {
    for (auto g : all_named_groups) EXPECT_EQ(named_group_from_string(to_string(g)), g);
    EXPECT_THROW(named_group_from_string("Z7"), Error);
}

TEST(ValidateExtended, CatalogGroupsPass) {
    for (const auto& slot : builtin_catalog()) {
        auto s = build_surface(slot, 0);
        auto ext = make_extended(s.G_gens, s.sigma);
        auto d = validate_extended(ext);
        EXPECT_TRUE(d.ok()) << slot.id << ": " << (d.ok() ? "" : d.failures.front());
        EXPECT_EQ(ext.name_holo, slot.group) << slot.id;
        EXPECT_EQ(ext.name_full, slot.full_group) << slot.id;
        EXPECT_EQ(ext.split, slot.split) << slot.id;
    }
}

TEST(ValidateExtended, ExcludedZ4Z2CaseFails) {
    // g = (z1 + 1/4, i z2), t = (z1 + 1/2, z2), sigma = (conj z1 + 1/4, conj z2)
    auto ext = make_extended({pm({0, q4}, rot4), pm({h, 0}, I)}, anti(conj_im, {q4, 0}, conj_im));
    EXPECT_FALSE(validate_extended(ext).ok());
}

TEST(ActionCases, TenAdmissibleTriples) {
    EXPECT_EQ(action_cases().size(), 10u);
    EXPECT_TRUE(matches_action_case(NamedGroup::Z2xZ2, NamedGroup::Z4xZ2, false));
    EXPECT_FALSE(matches_action_case(NamedGroup::Z2xZ2, NamedGroup::Z4xZ2, true));
    EXPECT_FALSE(matches_action_case(NamedGroup::Z3, NamedGroup::Z2xZ2, true));
}
