#include "realhyp/torus.hpp"

#include <gtest/gtest.h>

using namespace realhyp;
using namespace realhyp::mats;

namespace {

Rational R(Int p, Int q = 1) { return Rational(p, q); }
const Rational h(1, 2);

}  // namespace

TEST(CurveMap, ComposeAndInverse) {
    CurveMap f(conj_im, {h, 0});
    CurveMap g(rot4, {R(1, 4), R(1, 4)});
    CurveMap fg = compose(f, g);
    RatVec2 x{R(1, 3), R(1, 5)};
    EXPECT_EQ(fg(x), f(g(x)));
    EXPECT_TRUE(compose(g, inverse(g)).is_identity());
    EXPECT_TRUE(fg.antiholomorphic());
    EXPECT_THROW(CurveMap({2, 0, 0, 1}, {}), Error);
}

TEST(FixedLocus, StandardInvolutions) {
    EXPECT_EQ(fixed_locus(CurveMap(-I, {})).components.size(), 4u);
    EXPECT_EQ(fixed_locus(CurveMap(conj_im, {})).components.size(), 2u);
    EXPECT_EQ(fixed_locus(CurveMap(rot3, {})).components.size(), 3u);
    EXPECT_EQ(fixed_locus(CurveMap(-rot3, {})).components.size(), 1u);
    EXPECT_EQ(fixed_locus(CurveMap(rot4, {})).components.size(), 2u);
    EXPECT_EQ(fixed_locus(CurveMap(-I, {})).dimension, 0);
    EXPECT_TRUE(fixed_locus(CurveMap::translation({h, 0})).empty);
}

TEST(Nu, RealStructuresOnTheTorus) {
    EXPECT_EQ(nu(CurveMap(conj_im, {})), 2);
    EXPECT_EQ(nu(CurveMap(swap, {})), 1);
    EXPECT_EQ(nu(CurveMap(conj_im, {0, h})), 2);
    EXPECT_EQ(nu(CurveMap(conj_im, {h, 0})), 0);
    EXPECT_EQ(nu(CurveMap(conj_half, {})), 1);
    EXPECT_THROW(nu(CurveMap(-I, {})), Error);
    EXPECT_THROW(nu(CurveMap(conj_im, {R(1, 4), 0})), Error);
}

TEST(Involution, Examples) {
    EXPECT_TRUE(is_involution(CurveMap(conj_im, {h, 0})));
    EXPECT_FALSE(is_involution(CurveMap(conj_im, {R(1, 4), 0})));
    EXPECT_TRUE(is_involution(CurveMap(swap, {h, -h})));
    EXPECT_FALSE(is_involution(CurveMap(swap, {h, 0})));
}

TEST(SquareTranslation, Examples) {
    auto s = square_is_translation(CurveMap(swap, {h, 0}));
    ASSERT_TRUE(s.is_translation);
    EXPECT_EQ(s.vector, (RatVec2{h, h}));
    auto t = square_is_translation(CurveMap(conj_im, {R(1, 4), R(1, 3)}));
    ASSERT_TRUE(t.is_translation);
    EXPECT_EQ(t.vector, (RatVec2{h, 0}));
    EXPECT_THROW(square_is_translation(CurveMap(rot4, {})), Error);
}

TEST(SquareTranslation, AntiholomorphicSquaresAreAlwaysTranslations) {
    for (auto fam : all_families)
        for (const auto& A : allowed_antiholo_linears(fam))
            for (Int i = 0; i < 6; ++i)
                for (Int j = 0; j < 6; ++j)
                    EXPECT_TRUE(square_is_translation(CurveMap(A, {R(i, 6), R(j, 6)})).is_translation)
                        << to_string(fam) << " " << A;
}

TEST(Torsion, AntiInvariantPoints) {
    EllipticCurve uc{TauFamily::UnitCircleGeneric, Role::F};
    EllipticCurve sq{TauFamily::SquareI, Role::F};
    EllipticCurve hex{TauFamily::HexRho, Role::F};
    EXPECT_EQ(torsion_anti_invariants(uc, swap, 4).invariant_factors, (std::vector<Int>{4}));
    EXPECT_EQ(torsion_anti_invariants(sq, conj_im, 4).invariant_factors, (std::vector<Int>{2, 4}));
    EXPECT_EQ(torsion_anti_invariants(hex, conj_half, 3).invariant_factors, (std::vector<Int>{3}));
    EXPECT_EQ(torsion_anti_invariants(sq, conj_im, 2).elements.size(), 4u);
    EXPECT_THROW(torsion_anti_invariants(sq, swap, 4), Error);
    EXPECT_THROW(torsion_anti_invariants(sq, conj_im, 5), Error);
}

TEST(ReduceTranslation, KillsTheImagePart) {
    auto r = reduce_translation(CurveMap(conj_im, {R(1, 3), R(1, 5)}));
    EXPECT_EQ(r.map.trans, (RatVec2{R(1, 3), 0}));
    EXPECT_EQ(r.shift, (RatVec2{0, R(1, 10)}));
}

TEST(ReduceTranslation, IsAConjugation) {
    for (auto fam : all_families)
        for (const auto& A : allowed_antiholo_linears(fam))
            for (Int i = 0; i < 4; ++i)
                for (Int j = 0; j < 4; ++j) {
                    CurveMap f(A, {R(i, 4), R(j, 4)});
                    auto r = reduce_translation(f);
                    CurveMap shift = CurveMap::translation(r.shift);
                    EXPECT_EQ(compose(inverse(shift), compose(f, shift)), r.map);
                }
}

TEST(FloatCheck, AllowedLinearPartsAreIsometries) {
    for (auto fam : all_families) {
        EllipticCurve c{fam, Role::F};
        for (const auto& A : allowed_antiholo_linears(fam)) EXPECT_TRUE(float_check(CurveMap(A, {}), c, 1e-9));
        for (const auto& A : allowed_holo_linears(fam)) EXPECT_TRUE(float_check(CurveMap(A, {}), c, 1e-9));
    }
    EXPECT_FALSE(float_check(CurveMap(swap, {}), {TauFamily::ImAxisGeneric, Role::E}, 1e-9));
    EXPECT_FALSE(float_check(CurveMap(rot4, {}), {TauFamily::HexRho, Role::F}, 1e-9));
}

TEST(Families, DeterminantSigns) {
    for (auto fam : all_families) {
        for (const auto& A : allowed_antiholo_linears(fam)) {
            EXPECT_EQ(A.det(), -1);
            EXPECT_EQ(A * A, I) << to_string(fam);
        }
        for (const auto& A : allowed_holo_linears(fam)) EXPECT_EQ(A.det(), 1);
    }
    EXPECT_THROW(antiholo_linear(TauFamily::HexRho, "-1"), Error);
    EXPECT_EQ(antiholo_linear(TauFamily::HexRhoNeg, "-1"), -conj_half);
    EXPECT_THROW(family_from_string("nope"), Error);
}

TEST(Nu, ConjugationInvariant) {
    // nu(h f h^-1) = nu(f) for holomorphic h allowed on the same lattice
    for (auto fam : all_families)
        for (const auto& A : allowed_antiholo_linears(fam))
            for (const auto& L : allowed_holo_linears(fam))
                for (Int i = 0; i < 4; ++i)
                    for (Int j = 0; j < 4; ++j) {
                        CurveMap f(A, {R(i, 4), R(j, 4)});
                        if (!is_involution(f)) continue;
                        CurveMap hm(L, {R(j, 6), R(i, 3)});
                        CurveMap g = compose(hm, compose(f, inverse(hm)));
                        EXPECT_EQ(nu(g), nu(f)) << to_string(fam);
                    }
}

TEST(FiniteOrder, IteratesReturnToTranslations) {
    for (auto fam : all_families)
        for (const auto& L : allowed_holo_linears(fam)) {
            int n = *matrix_order(L);
            CurveMap f(L, {R(1, 5), R(2, 7)});
            CurveMap p = CurveMap::identity();
            for (int k = 0; k < n; ++k) p = compose(p, f);
            EXPECT_TRUE(p.is_translation());
            if (!(L == I)) EXPECT_TRUE(p.is_identity()) << L;
        }
}

TEST(Circles, ImageIsConsistentWithPoints) {
    Circle c = circle_through({R(1, 3), R(1, 4)}, {1, 0});
    CurveMap f(conj_im, {R(1, 6), 0});
    Circle img = circle_image(f, c);
    RatVec2 p = point_on(c);
    EXPECT_EQ(circle_through(f(p), {1, 0}), img);
    EXPECT_EQ(circle_through({R(1, 3), R(1, 4)}, {-1, 0}), c);
}
