#include "realhyp/catalog.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace realhyp;
using namespace realhyp::oracle;
using namespace realhyp::mats;

namespace {

Rational R(Int p, Int q = 1) { return Rational(p, q); }
const Rational h(1, 2), q4(1, 4);

ProductMap pm(RatVec2 e, const IntMat2& fl, RatVec2 ft = {}) {
    return ProductMap(CurveMap::translation(e), CurveMap(fl, ft));
}

RealHypSurface surface(TauFamily fe, TauFamily ff, std::vector<ProductMap> gens, ProductMap sigma) {
    return {{fe, Role::E}, {ff, Role::F}, std::move(gens), sigma};
}

bool has_failure(const Diagnostics& d, const std::string& prefix) {
    for (auto& f : d.failures)
        if (f.rfind(prefix, 0) == 0) return true;
    return false;
}

const CatalogSlot& slot(const std::string& id) {
    static const auto cat = builtin_catalog();
    for (auto& s : cat)
        if (s.id == id) return s;
    throw Error("no slot " + id);
}

}  // namespace

TEST(Validate, CatalogSurfacePasses) {
    auto d = validate(build_surface(slot("Z4-08"), 0));
    EXPECT_TRUE(d.ok()) << (d.ok() ? "" : d.failures.front());
}

TEST(Validate, ReportsNormalization) {
    auto s = surface(TauFamily::ImAxisGeneric, TauFamily::ImAxisGeneric, {pm({h, 0}, -I)},
                     ProductMap(CurveMap(conj_im, {}), CurveMap(conj_im, {R(1, 3), 0})));
    auto d = validate(s);
    EXPECT_TRUE(has_failure(d, "normalization"));
}

TEST(Validate, ReportsNonTranslationOnE) {
    auto s = surface(TauFamily::ImAxisGeneric, TauFamily::ImAxisGeneric,
                     {ProductMap(CurveMap(-I, {}), CurveMap(-I, {}))},
                     ProductMap(CurveMap(conj_im, {}), CurveMap(conj_im, {})));
    EXPECT_TRUE(has_failure(validate(s), "translations"));
}

TEST(Validate, ReportsWrongKinds) {
    auto s = surface(TauFamily::ImAxisGeneric, TauFamily::ImAxisGeneric, {pm({h, 0}, -I)}, pm({0, h}, I));
    EXPECT_TRUE(has_failure(validate(s), "sigma is not antiholomorphic"));
}

TEST(Validate, ReportsIncompatibleLattice) {
    auto s = surface(TauFamily::ImAxisGeneric, TauFamily::ImAxisGeneric, {pm({q4, 0}, rot4)},
                     ProductMap(CurveMap(conj_im, {}), CurveMap(conj_im, {})));
    EXPECT_TRUE(has_failure(validate(s), "family"));
}

TEST(Lifts, PartitionCoversInvolutiveLifts) {
    for (const auto& sl : builtin_catalog()) {
        auto s = build_surface(sl, 0);
        auto lifts = antiholomorphic_lifts(s);
        EXPECT_EQ(lifts.size(), holo_group(s).order());
        std::size_t inv = 0;
        for (auto& l : lifts) inv += is_involution(l);
        std::size_t covered = 0;
        for (auto& c : involutive_lift_partition(s)) covered += c.size();
        EXPECT_EQ(inv, covered) << sl.id;
        EXPECT_EQ(inv > 0, sl.split) << sl.id;
    }
}

TEST(RealPart, Examples) {
    auto Fi = TauFamily::SquareI, Fim = TauFamily::ImAxisGeneric, Eim = TauFamily::ImAxisGeneric;
    ProductMap conj(CurveMap(conj_im, {}), CurveMap(conj_im, {}));
    EXPECT_EQ(to_string(real_part(surface(Eim, Fim, {pm({h, 0}, -I)}, conj))), "4K");
    EXPECT_EQ(to_string(real_part(surface(Eim, Fim, {pm({h, 0}, -I)},
                                          ProductMap(CurveMap(conj_im, {}), CurveMap(conj_im, {0, h}))))),
              "2T");
    EXPECT_EQ(to_string(real_part(surface(Eim, Fim, {pm({h, 0}, -I)},
                                          ProductMap(CurveMap(conj_im, {}), CurveMap(conj_im, {h, 0}))))),
              "∅");
    EXPECT_EQ(to_string(real_part(surface(Eim, Fi, {pm({0, q4}, rot4)}, conj))), "3T");
    EXPECT_EQ(to_string(real_part(surface(Eim, Fi, {pm({0, q4}, rot4), pm({h, h}, I, {h, h})}, conj))), "K⊔T");
}

TEST(RealPart, ParseAndPrint) {
    EXPECT_EQ(parse_real_part("2K ⊔ T"), (RealPartTopology{1, 2}));
    EXPECT_EQ(parse_real_part("T⊔2K"), (RealPartTopology{1, 2}));
    EXPECT_EQ(parse_real_part("∅"), (RealPartTopology{0, 0}));
    EXPECT_EQ(to_string(RealPartTopology{3, 0}), "3T");
    EXPECT_EQ(admissible_real_parts().size(), 11u);
    for (auto& t : admissible_real_parts()) EXPECT_EQ(parse_real_part(to_string(t)), t);
}

TEST(RealPart, MatchesGridOracle) {
    for (const auto& sl : builtin_catalog())
        for (std::size_t v = 0; v < sl.variants.size(); ++v) {
            auto s = build_surface(sl, v);
            auto t = real_part(s);
            EXPECT_EQ(grid_components(s), static_cast<std::size_t>(t.tori + t.klein)) << sl.id << " variant " << v;
        }
}

TEST(RealPart, GridOracleOnD4Rows) {
    for (const char* id : {"D4-01", "D4-02"}) {
        auto s = build_surface(slot(id), 0);
        EXPECT_EQ(grid_components(s), 1u) << id;
        EXPECT_EQ(real_part(s), (RealPartTopology{1, 0})) << id;
    }
}

TEST(RealPart, OddOrderGroupsHaveNoKleinBottles) {
    for (const auto& sl : builtin_catalog()) {
        if (sl.group != NamedGroup::Z3 && sl.group != NamedGroup::Z3xZ3) continue;
        for (std::size_t v = 0; v < sl.variants.size(); ++v)
            EXPECT_EQ(real_part(build_surface(sl, v)).klein, 0) << sl.id;
    }
}

TEST(RealPart, NonSplitIsEmpty) {
    for (const auto& sl : builtin_catalog()) {
        if (sl.split) continue;
        for (std::size_t v = 0; v < sl.variants.size(); ++v) {
            auto s = build_surface(sl, v);
            EXPECT_TRUE(involutive_lift_classes(s).empty()) << sl.id;
            EXPECT_EQ(real_part(s), RealPartTopology{}) << sl.id;
        }
    }
}

TEST(RealPart, SquaresOfLiftsAreTranslations) {
    for (const auto& sl : builtin_catalog())
        for (const auto& l : antiholomorphic_lifts(build_surface(sl, 0))) {
            EXPECT_TRUE(square_is_translation(l.e).is_translation) << sl.id;
            EXPECT_TRUE(square_is_translation(l.f).is_translation) << sl.id;
        }
}

TEST(Fingerprint, SeparatesSameTopologyPairs) {
    auto fp = [](const char* id) { return fingerprint(build_surface(slot(id), 0)); };
    auto a = fp("Z2-01"), b = fp("Z2-02");
    EXPECT_EQ(a.real_part, b.real_part);
    EXPECT_NE(a.nu_set_E, b.nu_set_E);
    auto c = fp("Z2-03"), d = fp("Z2-07");
    EXPECT_EQ(c.real_part, d.real_part);
    EXPECT_NE(c.eig_flags, d.eig_flags);
    auto e = fp("Z3-01"), f = fp("Z3-02");
    EXPECT_EQ(e.real_part, f.real_part);
    EXPECT_NE(e.fix_g_action, f.fix_g_action);
}

TEST(Fingerprint, IndependentOfVariant) {
    for (const auto& sl : builtin_catalog()) {
        auto base = fingerprint(build_surface(sl, 0));
        for (std::size_t v = 1; v < sl.variants.size(); ++v)
            EXPECT_EQ(fingerprint(build_surface(sl, v)), base) << sl.id << " variant " << v;
    }
}

TEST(Htk, Bounds) {
    using N = NamedGroup;
    EXPECT_EQ(htk_bound(N::Z2), 4);
    EXPECT_EQ(htk_bound(N::Z2xZ2), 3);
    EXPECT_EQ(htk_bound(N::Z4), 3);
    EXPECT_EQ(htk_bound(N::Z4xZ2), 2);
    EXPECT_EQ(htk_bound(N::Z3), 2);
    EXPECT_EQ(htk_bound(N::Z3xZ3), 2);
    EXPECT_EQ(htk_bound(N::Z6), 2);
    EXPECT_EQ(h1_of(N::Z2).torsion, (std::vector<Int>{2, 2}));
    EXPECT_THROW(h1_of(N::D4), Error);
}

TEST(Bdf, FixedPointCounts) {
    std::map<int, std::size_t> fixed;
    for (const auto& c : bdf_cases()) {
        auto r = check_bdf(c);
        EXPECT_TRUE(r.diagnostics.ok()) << c.number;
        EXPECT_EQ(r.classified, c.group);
        fixed[r.rotation_order] = r.fixed_points;
    }
    EXPECT_EQ(fixed[2], 4u);
    EXPECT_EQ(fixed[4], 2u);
    EXPECT_EQ(fixed[3], 3u);
    EXPECT_EQ(fixed[6], 1u);
    EXPECT_EQ(bdf_cases().size(), 7u);
}

TEST(ExcludedCase, NoValidatingSurface) {
    auto r = search_excluded_z4z2_case();
    EXPECT_GT(r.examined, 0u);
    EXPECT_EQ(r.validating, 0u);
}
