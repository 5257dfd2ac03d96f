#include "realhyp/exactlin.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace realhyp;
using namespace realhyp::oracle;

namespace {

Rational R(Int p, Int q = 1) { return Rational(p, q); }

bool diag_ok(const IntMat2& D) {
    if (D.b != 0 || D.c != 0 || D.a < 0 || D.d < 0) return false;
    if (D.a == 0) return D.d == 0;
    return D.d % D.a == 0;
}

void check_against_grid(const IntMat2& L, const RatVec2& b) {
    auto sol = solve_affine_congruence(L, b);
    auto g = grid_count(L, b);
    SCOPED_TRACE(to_string(L) + " b=" + to_string(b.x) + "," + to_string(b.y));
    ASSERT_EQ(sol.solvable, g.solvable);
    if (!sol.solvable) return;
    EXPECT_EQ(sol.dimension, g.dimension);
    EXPECT_EQ(sol.component_count, g.components);
    for (const auto& p : sol.base_points) EXPECT_TRUE(is_integral(L * p + b));
    if (sol.dimension == 1) {
        ASSERT_TRUE(sol.direction.has_value());
        IntVec2 img = L * *sol.direction;
        EXPECT_EQ(img.x, 0);
        EXPECT_EQ(img.y, 0);
    }
}

}  // namespace

TEST(Snf, ZeroMatrix) {
    auto [U, D, V] = smith_normal_form(IntMat2::zero());
    EXPECT_EQ(D, IntMat2::zero());
}

TEST(Snf, RankOne) {
    auto [U, D, V] = smith_normal_form({-1, 1, 1, -1});
    EXPECT_EQ(D, (IntMat2{1, 0, 0, 0}));
}

TEST(Snf, MinusTwoIdentity) {
    auto [U, D, V] = smith_normal_form({-2, 0, 0, -2});
    EXPECT_EQ(D, (IntMat2{2, 0, 0, 2}));
}

TEST(Snf, DecompositionHoldsForSmallMatrices) {
    for (Int a = -3; a <= 3; ++a)
        for (Int b = -3; b <= 3; ++b)
            for (Int c = -3; c <= 3; ++c)
                for (Int d = -3; d <= 3; ++d) {
                    IntMat2 L{a, b, c, d};
                    auto [U, D, V] = smith_normal_form(L);
                    ASSERT_EQ(std::abs(U.det()), 1) << L;
                    ASSERT_EQ(std::abs(V.det()), 1) << L;
                    ASSERT_EQ(U * L * V, D) << L;
                    ASSERT_TRUE(diag_ok(D)) << L << " -> " << D;
                }
}

TEST(Congruence, ReflectionFixesTwoCircles) {
    auto s = solve_affine_congruence({0, 0, 0, -2}, {});
    ASSERT_TRUE(s.solvable);
    EXPECT_EQ(s.dimension, 1);
    EXPECT_EQ(s.component_count, 2);
    EXPECT_EQ(*s.direction, (IntVec2{1, 0}));
}

TEST(Congruence, SwapFixesOneCircle) {
    auto s = solve_affine_congruence({-1, 1, 1, -1}, {});
    ASSERT_TRUE(s.solvable);
    EXPECT_EQ(s.dimension, 1);
    EXPECT_EQ(s.component_count, 1);
    EXPECT_EQ(*s.direction, (IntVec2{1, 1}));
}

TEST(Congruence, GlideHasNoFixedPoints) {
    auto s = solve_affine_congruence({0, 0, 0, -2}, {R(1, 2), R(0)});
    EXPECT_FALSE(s.solvable);
}

TEST(Congruence, MinusIdentityHasFourPoints) {
    auto s = solve_affine_congruence({-2, 0, 0, -2}, {});
    ASSERT_TRUE(s.solvable);
    EXPECT_EQ(s.dimension, 0);
    EXPECT_EQ(s.component_count, 4);
    EXPECT_FALSE(s.direction.has_value());
}

TEST(Congruence, MatchesGridOracleOnInvolutions) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<Int> ent(-3, 3), den(1, 6);
    int checked = 0;
    // antiholomorphic involutions A with A^2 = I, det -1, plus random translations
    std::vector<IntMat2> invols;
    for (Int a = -3; a <= 3; ++a)
        for (Int b = -3; b <= 3; ++b)
            for (Int c = -3; c <= 3; ++c) {
                Int d = -a;
                IntMat2 A{a, b, c, d};
                if (A.det() == -1) invols.push_back(A);
            }
    ASSERT_FALSE(invols.empty());
    while (checked < 240) {
        const IntMat2& A = invols[rng() % invols.size()];
        Int q1 = den(rng), q2 = den(rng);
        RatVec2 t{R(ent(rng), q1), R(ent(rng), q2)};
        // only involutive maps: (A + I) t must be integral
        if (!is_integral((A + IntMat2::identity()) * t)) continue;
        check_against_grid(A - IntMat2::identity(), t);
        ++checked;
    }
    EXPECT_GE(checked, 200);
}

TEST(Congruence, MatchesGridOracleOnGeneralMaps) {
    std::mt19937 rng(777);
    std::uniform_int_distribution<Int> ent(-3, 3), den(1, 6);
    for (int k = 0; k < 300; ++k) {
        IntMat2 L{ent(rng), ent(rng), ent(rng), ent(rng)};
        RatVec2 b{R(ent(rng), den(rng)), R(ent(rng), den(rng))};
        check_against_grid(L, b);
    }
}

TEST(PrimitiveDirection, ReducesAndNormalizesSign) {
    EXPECT_EQ(primitive_direction(IntVec2{-4, -6}), (IntVec2{2, 3}));
    EXPECT_EQ(primitive_direction(IntVec2{0, -5}), (IntVec2{0, 1}));
    EXPECT_EQ(primitive_direction(RatVec2{R(1, 2), R(-1, 3)}), (IntVec2{3, -2}));
    EXPECT_THROW(primitive_direction(IntVec2{0, 0}), Error);
    EXPECT_THROW(primitive_direction(RatVec2{}), Error);
}

TEST(MatrixOrder, SmallCases) {
    EXPECT_EQ(matrix_order(IntMat2::identity()), 1);
    EXPECT_EQ(matrix_order({0, -1, 1, 0}), 4);
    EXPECT_EQ(matrix_order({0, -1, 1, -1}), 3);
    EXPECT_EQ(matrix_order({0, 1, -1, 1}), 6);
    EXPECT_FALSE(matrix_order({1, 1, 0, 1}).has_value());
}

TEST(Rationals, ParseAndPrint) {
    EXPECT_EQ(parse_rational("-3/4"), R(-3, 4));
    EXPECT_EQ(parse_rational("2"), R(2));
    EXPECT_EQ(to_string(R(1, 2)), "1/2");
    EXPECT_EQ(floor_frac(R(-1, 3)), R(2, 3));
    EXPECT_EQ(mod1(RatVec2{R(5, 4), R(-1, 2)}), (RatVec2{R(1, 4), R(1, 2)}));
}
