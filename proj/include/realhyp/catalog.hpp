#pragma once

#include "surface.hpp"

#include <json.hpp>

#include <fstream>
#include <future>
#include <sstream>

namespace realhyp {

struct SigmaData {
    TauFamily family = TauFamily::ImAxisGeneric;
    std::string a = "1";  // z -> a conj(z) + b
    RatVec2 b;
    friend bool operator==(const SigmaData&, const SigmaData&) = default;
};

struct GeneratorData {
    RatVec2 e;
    std::string xi = "1";
    RatVec2 f;
    friend bool operator==(const GeneratorData&, const GeneratorData&) = default;
};

// g = (z1 + eta, xi z2), t = (z1 + eps1, z2 + eps2) when present
struct Variant {
    SigmaData sigma1, sigma2;
    RatVec2 eta;
    std::optional<RatVec2> eps1, eps2;
    std::vector<GeneratorData> extra_gens;
    friend bool operator==(const Variant&, const Variant&) = default;
};

struct CatalogSlot {
    std::string id;
    std::string section;
    NamedGroup group = NamedGroup::Unknown;
    NamedGroup full_group = NamedGroup::Unknown;
    bool split = true;
    std::string xi;  // linear part of g on F
    std::vector<TauFamily> tau1, tau2;
    std::vector<Variant> variants;
    RealPartTopology expected;
    bool flagged = false;
    std::string note;
    friend bool operator==(const CatalogSlot&, const CatalogSlot&) = default;
};

namespace detail {

struct EAlt {
    SigmaData sigma;
    RatVec2 eta;
    std::optional<RatVec2> eps1;
};

struct FAlt {
    SigmaData sigma;
    std::optional<RatVec2> eps2;
};

inline CatalogSlot make_slot(std::string id, std::string section, NamedGroup g, NamedGroup full, bool split,
                             std::string xi, const std::string& expected, const std::vector<EAlt>& es,
                             const std::vector<FAlt>& fs, std::optional<RatVec2> t_f = std::nullopt) {
    CatalogSlot s;
    s.id = std::move(id);
    s.section = std::move(section);
    s.group = g;
    s.full_group = full;
    s.split = split;
    s.xi = std::move(xi);
    s.expected = parse_real_part(expected);
    for (const auto& e : es) {
        if (std::find(s.tau1.begin(), s.tau1.end(), e.sigma.family) == s.tau1.end()) s.tau1.push_back(e.sigma.family);
        for (const auto& f : fs) {
            if (std::find(s.tau2.begin(), s.tau2.end(), f.sigma.family) == s.tau2.end())
                s.tau2.push_back(f.sigma.family);
            Variant v;
            v.sigma1 = e.sigma;
            v.sigma2 = f.sigma;
            v.eta = e.eta;
            v.eps1 = e.eps1;
            v.eps2 = f.eps2 ? f.eps2 : t_f;
            s.variants.push_back(v);
        }
    }
    return s;
}

}  // namespace detail

inline std::vector<CatalogSlot> builtin_catalog() {
    using detail::EAlt;
    using detail::FAlt;
    using F = TauFamily;
    using N = NamedGroup;
    const Rational h(1, 2), q(1, 4), t3(1, 3), s6(1, 6);
    const Rational z(0);
    auto sg = [](F fam, const char* a, RatVec2 b = {}) { return SigmaData{fam, a, b}; };
    auto e2 = [&](F fam, const char* a, RatVec2 b, RatVec2 eta) { return EAlt{sg(fam, a, b), eta, std::nullopt}; };
    auto e3 = [&](F fam, const char* a, RatVec2 b, RatVec2 eta, RatVec2 eps1) {
        return EAlt{sg(fam, a, b), eta, eps1};
    };
    auto fa = [&](F fam, const char* a, RatVec2 b, std::optional<RatVec2> eps2 = std::nullopt) {
        return FAlt{sg(fam, a, b), eps2};
    };
    const F IM = F::ImAxisGeneric, UC = F::UnitCircleGeneric, HL = F::HalfLine, SI = F::SquareI, RHO = F::HexRho,
            RHON = F::HexRhoNeg;

    std::vector<CatalogSlot> out;
    auto id = [](const char* p, int n) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%s-%02d", p, n);
        return std::string(buf);
    };

    // G = Z/2
    {
        std::vector<EAlt> A{e2(IM, "1", {}, {h, z}), e2(IM, "-1", {}, {z, h})};
        std::vector<EAlt> B{e2(IM, "1", {}, {z, h}), e2(IM, "-1", {}, {h, z})};
        std::vector<EAlt> C{e2(IM, "1", {}, {h, h}), e2(IM, "-1", {}, {h, h})};
        std::vector<EAlt> D{e2(UC, "tau", {}, {h, h}), e2(UC, "-tau", {}, {h, h}), e2(HL, "1", {}, {h, z}),
                            e2(HL, "-1", {}, {h, z})};
        std::vector<EAlt> Eb{e2(IM, "1", {h, z}, {z, h}), e2(IM, "-1", {z, h}, {h, z})};
        std::vector<FAlt> uch{fa(UC, "tau", {}), fa(HL, "1", {})};
        auto im = [&](RatVec2 b) { return std::vector<FAlt>{fa(IM, "1", b)}; };
        struct Row {
            const char* exp;
            const std::vector<EAlt>& e;
            std::vector<FAlt> f;
        };
        std::vector<Row> rows{
            {"4K", A, im({})},       {"4K", D, im({})},       {"2T", A, im({z, h})},   {"2T", B, im({z, h})},
            {"2T", B, uch},          {"2T", C, im({})},       {"2T", C, im({z, h})},   {"∅", A, im({h, z})},
            {"∅", A, im({h, h})},    {"∅", B, im({h, h})},    {"∅", C, im({h, z})},    {"∅", C, im({h, h})},
            {"∅", D, im({h, h})},    {"∅", Eb, im({})},       {"∅", Eb, im({z, h})},   {"∅", Eb, im({h, h})},
            {"∅", Eb, uch},          {"2K", A, uch},          {"2K", D, uch},          {"4T", B, im({})},
            {"T", C, uch},           {"T", D, im({z, h})}};
        int n = 0;
        for (auto& r : rows) out.push_back(detail::make_slot(id("Z2", ++n), "Z2/Z2xZ2", N::Z2, N::Z2xZ2, true, "-1", r.exp, r.e, r.f));
    }

    // G = Z/4
    {
        std::vector<EAlt> A{e2(IM, "1", {}, {h, q}), e2(IM, "-1", {}, {q, h})};
        std::vector<EAlt> B{e2(IM, "1", {h, z}, {h, q}), e2(IM, "-1", {z, h}, {q, h})};
        std::vector<EAlt> C{e2(IM, "1", {}, {z, q}), e2(IM, "-1", {}, {q, z})};
        std::vector<EAlt> D{e2(IM, "1", {h, z}, {z, q}), e2(IM, "-1", {z, h}, {q, z})};
        std::vector<EAlt> K{e2(UC, "tau", {}, {q, -q}), e2(UC, "-tau", {}, {q, q}), e2(HL, "1", {}, {q, h}),
                            e2(HL, "-1", {}, {q, z})};
        auto fi = [&](RatVec2 b) { return std::vector<FAlt>{fa(SI, "1", b)}; };
        struct Row {
            const char* exp;
            const std::vector<EAlt>& e;
            RatVec2 b;
        };
        std::vector<Row> rows{{"2T", A, {}},     {"T", B, {}},      {"T", C, {h, h}}, {"T", B, {h, h}},
                              {"∅", A, {h, h}},  {"∅", D, {}},      {"∅", D, {h, h}}, {"3T", C, {}},
                              {"3K", K, {}},     {"K", K, {h, h}}};
        int n = 0;
        for (auto& r : rows) out.push_back(detail::make_slot(id("Z4", ++n), "Z4/D4", N::Z4, N::D4, true, "i", r.exp, r.e, fi(r.b)));
    }

    // G = Z/4 + Z/2, t on F is z2 + (1+i)/2
    {
        std::vector<EAlt> G1a{e3(IM, "1", {}, {q, q}, {h, z}), e3(IM, "-1", {}, {-q, q}, {z, h})};
        std::vector<EAlt> G1b{e3(IM, "1", {h, z}, {q, q}, {h, z}), e3(IM, "-1", {z, h}, {-q, q}, {z, h})};
        std::vector<EAlt> Da{e3(IM, "1", {}, {z, q}, {h, z}), e3(IM, "-1", {}, {q, z}, {z, h})};
        std::vector<EAlt> Db{e3(IM, "1", {}, {z, q}, {h, h}), e3(IM, "-1", {}, {q, z}, {h, h})};
        std::vector<EAlt> Dc{e3(IM, "1", {h, z}, {z, q}, {h, z}), e3(IM, "-1", {z, h}, {q, z}, {z, h})};
        std::vector<EAlt> Dd{e3(IM, "1", {h, z}, {z, q}, {h, h}), e3(IM, "-1", {z, h}, {q, z}, {h, h})};
        struct Row {
            const char* exp;
            const std::vector<EAlt>& e;
            RatVec2 b;
            N full;
        };
        std::vector<Row> rows{{"∅", G1a, {h, z}, N::G1},  {"T", G1b, {h, z}, N::G1},
                              {"2T", Da, {}, N::Z2xD4},   {"K⊔T", Db, {}, N::Z2xD4},
                              {"T", Dc, {}, N::Z2xD4},    {"K", Dd, {}, N::Z2xD4}};
        int n = 0;
        for (auto& r : rows)
            out.push_back(detail::make_slot(id("Z4xZ2", ++n), r.full == N::G1 ? "Z4xZ2/G1" : "Z4xZ2/Z2xD4", N::Z4xZ2,
                                            r.full, true, "i", r.exp, r.e, {fa(SI, "1", r.b)}, RatVec2{h, h}));
    }

    // G = Z/3
    {
        std::vector<EAlt> A{e2(IM, "1", {}, {z, t3}), e2(IM, "-1", {}, {t3, z})};
        std::vector<EAlt> B{e2(IM, "1", {h, z}, {z, t3}), e2(IM, "-1", {z, h}, {t3, z})};
        std::vector<EAlt> C{e2(UC, "tau", {}, {t3, -t3}), e2(UC, "-tau", {}, {t3, t3}), e2(HL, "1", {}, {t3, -t3}),
                            e2(HL, "-1", {}, {t3, z})};
        struct Row {
            const char* exp;
            const std::vector<EAlt>& e;
            const char* a;
        };
        std::vector<Row> rows{{"2T", A, "1"}, {"2T", A, "-1"}, {"∅", B, "1"},
                              {"∅", B, "-1"}, {"T", C, "1"},   {"T", C, "-1"}};
        int n = 0;
        for (auto& r : rows)
            out.push_back(detail::make_slot(id("Z3", ++n), "Z3/S3", N::Z3, N::S3, true, "rho", r.exp, r.e,
                                            {fa(r.a[0] == '-' ? RHON : RHO, r.a, {})}));
    }

    // G = Z/3 + Z/3, t on F is z2 + (1-rho)/3
    {
        std::vector<EAlt> A{e3(IM, "1", {}, {z, t3}, {t3, z}), e3(IM, "-1", {}, {t3, z}, {z, t3})};
        std::vector<EAlt> B{e3(IM, "1", {h, z}, {z, t3}, {t3, z}), e3(IM, "-1", {z, h}, {t3, z}, {z, t3})};
        std::vector<EAlt> C{e3(UC, "tau", {}, {t3, -t3}, {t3, t3}), e3(UC, "-tau", {}, {t3, t3}, {t3, -t3}),
                            e3(HL, "1", {}, {t3, -t3}, {t3, z}), e3(HL, "-1", {}, {t3, z}, {t3, -t3})};
        struct Row {
            const char* exp;
            const std::vector<EAlt>& e;
        };
        std::vector<Row> rows{{"2T", A}, {"∅", B}, {"T", C}};
        int n = 0;
        for (auto& r : rows)
            out.push_back(detail::make_slot(id("Z3xZ3", ++n), "Z3xZ3/S3xZ3", N::Z3xZ3, N::S3xZ3, true, "rho", r.exp,
                                            r.e, {fa(RHON, "-1", {})}, RatVec2{t3, -t3}));
    }

    // G = Z/6
    {
        std::vector<std::pair<const char*, std::vector<EAlt>>> rows{
            {"2T", {e2(IM, "1", {}, {z, s6}), e2(IM, "-1", {}, {s6, z})}},
            {"T", {e2(IM, "1", {}, {h, s6}), e2(IM, "-1", {}, {s6, h})}},
            {"∅", {e2(IM, "1", {h, z}, {z, s6}), e2(IM, "-1", {z, h}, {s6, z})}},
            {"2K",
             {e2(UC, "tau", {}, {s6, -s6}), e2(UC, "-tau", {}, {s6, s6}), e2(HL, "1", {}, {s6, t3}),
              e2(HL, "-1", {}, {s6, z})}}};
        int n = 0;
        for (auto& [exp, e] : rows)
            out.push_back(
                detail::make_slot(id("Z6", ++n), "Z6/D6", N::Z6, N::D6, true, "-rho", exp, e, {fa(RHO, "1", {})}));
    }

    // G = (Z/2)^2 with (Z/2)^3
    {
        auto pq = [&](RatVec2 a1, RatVec2 b1, RatVec2 a2, RatVec2 b2) {
            return std::vector<EAlt>{e3(IM, "1", {}, a1, b1), e3(IM, "-1", {}, a2, b2)};
        };
        auto P = pq({h, z}, {z, h}, {z, h}, {h, z});
        auto Q = pq({h, z}, {h, h}, {z, h}, {h, h});
        auto R = pq({h, h}, {h, z}, {h, h}, {z, h});
        auto Rp = pq({h, h}, {z, h}, {h, h}, {h, z});
        auto U = pq({z, h}, {h, z}, {h, z}, {z, h});
        auto V = pq({z, h}, {h, h}, {h, z}, {h, h});
        std::vector<EAlt> W1{e3(IM, "1", {h, z}, {z, h}, {h, h}), e3(IM, "-1", {z, h}, {h, z}, {h, h})};
        std::vector<EAlt> W2{e3(IM, "1", {h, z}, {z, h}, {h, z}), e3(IM, "-1", {z, h}, {h, z}, {z, h})};
        auto f = [&](RatVec2 b, RatVec2 eps) { return std::vector<FAlt>{fa(IM, "1", b, eps)}; };
        std::vector<FAlt> uce{fa(UC, "tau", {}, RatVec2{h, h}), fa(HL, "1", {}, RatVec2{h, z})};
        struct Row {
            const char* exp;
            const std::vector<EAlt>& e;
            std::vector<FAlt> f;
        };
        std::vector<Row> rows{
            {"2K", P, f({}, {h, h})},      {"2K", P, f({}, {h, z})},      {"2K", P, uce},
            {"2K", Q, f({}, {z, h})},      {"2K", Q, f({}, {h, h})},      {"2K", Q, uce},
            {"T", P, f({z, h}, {h, z})},   {"T", Q, f({z, h}, {h, z})},   {"T", R, f({}, {z, h})},
            {"T", R, f({}, {h, h})},       {"T", Rp, f({}, {h, h})},      {"∅", P, f({h, z}, {z, h})},
            {"∅", Q, f({h, z}, {z, h})},   {"∅", R, f({h, z}, {z, h})},   {"∅", W1, f({}, {h, h})},
            {"∅", W2, f({}, {h, h})},      {"3T", U, f({}, {z, h})},      {"2T", U, f({}, {h, h})},
            {"2T", U, f({z, h}, {h, z})},  {"2T", U, uce},                {"2T", V, f({}, {h, h})},
            {"2K⊔T", P, f({}, {z, h})},    {"2K⊔T", Q, f({}, {h, z})}};
        int n = 0;
        for (auto& r : rows)
            out.push_back(detail::make_slot(id("Z2xZ2", ++n), "Z2xZ2/Z2cube", N::Z2xZ2, N::Z2cube, true, "-1", r.exp,
                                            r.e, r.f));
    }

    // G = (Z/2)^2 with D4
    {
        std::vector<EAlt> X{e3(UC, "tau", {}, {h, z}, {h, h}), e3(UC, "-tau", {}, {z, h}, {h, h}),
                            e3(HL, "1", {}, {z, h}, {h, z}), e3(HL, "-1", {}, {z, h}, {h, z})};
        struct Row {
            const char* exp;
            std::vector<FAlt> f;
        };
        std::vector<Row> rows{
            {"2T", {fa(IM, "1", {z, q}, RatVec2{z, h}), fa(IM, "-1", {-q, z}, RatVec2{h, z})}},
            {"2T",
             {fa(UC, "tau", {q, -q}, RatVec2{h, h}), fa(UC, "-tau", {q, q}, RatVec2{h, h}),
              fa(HL, "1", {q, h}, RatVec2{h, z}), fa(HL, "-1", {-q, z}, RatVec2{h, z})}},
            {"∅", {fa(IM, "1", {h, q}, RatVec2{z, h}), fa(IM, "-1", {-q, h}, RatVec2{h, z})}}};
        int n = 0;
        for (auto& r : rows) {
            auto s = detail::make_slot(id("D4", ++n), "Z2xZ2/D4", N::Z2xZ2, N::D4, true, "-1", r.exp, X, r.f);
            s.flagged = true;
            s.note = "sigma_2 / eps_2 alternatives paired per the local reading of the table cell";
            if (n <= 2) s.note += "; printed S(R) is 2T but every variant has one component";
            out.push_back(std::move(s));
        }
    }

    // non-split
    {
        std::vector<EAlt> ns{e3(IM, "1", {q, z}, {h, h}, {h, z}), e3(IM, "-1", {z, q}, {h, h}, {z, h})};
        out.push_back(detail::make_slot("NS-01", "nonsplit", N::Z2xZ2, N::Z4xZ2, false, "-1", "∅", ns,
                                        {fa(UC, "tau", {h, z}, RatVec2{h, h}), fa(HL, "1", {z, h}, RatVec2{h, z})}));
    }
    return out;
}

inline RealHypSurface build_surface(const CatalogSlot& slot, std::size_t variant_index) {
    if (variant_index >= slot.variants.size()) throw Error("build_surface: no variant " + std::to_string(variant_index));
    const Variant& v = slot.variants[variant_index];
    if (v.eps1.has_value() != v.eps2.has_value()) throw Error("build_surface: malformed slot " + slot.id);
    RealHypSurface s;
    s.E = {v.sigma1.family, Role::E};
    s.F = {v.sigma2.family, Role::F};
    s.sigma = ProductMap(CurveMap(antiholo_linear(v.sigma1.family, v.sigma1.a), v.sigma1.b),
                         CurveMap(antiholo_linear(v.sigma2.family, v.sigma2.a), v.sigma2.b));
    s.G_gens.push_back(ProductMap(CurveMap::translation(v.eta), CurveMap(holo_linear(slot.xi), {})));
    if (v.eps1) s.G_gens.push_back(ProductMap(CurveMap::translation(*v.eps1), CurveMap::translation(*v.eps2)));
    for (const auto& g : v.extra_gens)
        s.G_gens.push_back(ProductMap(CurveMap::translation(g.e), CurveMap(holo_linear(g.xi), g.f)));
    return s;
}

struct SlotReport {
    std::string id, section;
    NamedGroup group = NamedGroup::Unknown;
    NamedGroup full_expected = NamedGroup::Unknown, full_computed = NamedGroup::Unknown;
    bool split_expected = true, split_computed = true;
    std::size_t variants = 0;
    bool validated = true;
    bool coherent = true;
    bool group_ok = true;
    bool flagged = false;
    RealPartTopology expected, computed;
    InvariantFingerprint fingerprint;
    std::vector<std::string> failures;
    std::string note;

    bool real_part_ok() const { return expected == computed; }
    bool pass() const { return validated && coherent && group_ok && real_part_ok() && failures.empty(); }
};

inline SlotReport verify_slot(const CatalogSlot& slot, double tol = 1e-9) {
    SlotReport r;
    r.id = slot.id;
    r.section = slot.section;
    r.group = slot.group;
    r.full_expected = slot.full_group;
    r.split_expected = slot.split;
    r.expected = slot.expected;
    r.variants = slot.variants.size();
    r.flagged = slot.flagged;
    r.note = slot.note;
    std::optional<InvariantFingerprint> first;
    std::optional<RealPartTopology> first_rp;
    for (std::size_t i = 0; i < slot.variants.size(); ++i) {
        std::string tag = "variant " + std::to_string(i) + ": ";
        try {
            auto s = build_surface(slot, i);
            auto d = validate(s, tol);
            if (!d.ok()) {
                r.validated = false;
                for (auto& f : d.failures) r.failures.push_back(tag + f);
                continue;
            }
            auto fp = fingerprint(s);
            if (!first) {
                first = fp;
                first_rp = fp.real_part;
            } else if (fp != *first) {
                r.coherent = false;
                r.failures.push_back(tag + "fingerprint differs from variant 0");
            }
            if (fp.real_part != slot.expected)
                r.failures.push_back(tag + "real part " + to_string(fp.real_part) + " != expected " +
                                     to_string(slot.expected));
        } catch (const Error& e) {
            r.validated = false;
            r.failures.push_back(tag + e.what());
        }
    }
    if (first) {
        r.fingerprint = *first;
        r.computed = *first_rp;
        r.full_computed = first->name_full;
        r.split_computed = first->split;
        r.group_ok = first->name_holo == slot.group && first->name_full == slot.full_group &&
                     first->split == slot.split && matches_action_case(first->name_holo, first->name_full, first->split);
        if (!r.group_ok) r.failures.push_back("group data does not match (G, G^, split) of the section");
    } else {
        r.group_ok = false;
    }
    return r;
}

struct HtkRow {
    int bound = 0;
    int max_components = 0;
    bool attained = false;
    bool within = true;
};

struct VerificationReport {
    std::vector<SlotReport> slots;
    std::size_t slots_passed = 0;
    std::size_t distinct_fingerprints = 0;
    std::vector<RealPartTopology> topologies;
    std::map<NamedGroup, HtkRow> htk;
    bool action_ok = true;
    std::vector<std::string> failed_assertions;
    bool ok() const { return failed_assertions.empty(); }
};

inline constexpr std::size_t expected_slot_count = 78;

inline VerificationReport verify_all(const std::vector<CatalogSlot>& catalog, bool parallel = false,
                                     double tol = 1e-9) {
    VerificationReport rep;
    if (parallel) {
        std::vector<std::future<SlotReport>> jobs;
        for (const auto& s : catalog) jobs.push_back(std::async(std::launch::async, [&s, tol] { return verify_slot(s, tol); }));
        for (auto& j : jobs) rep.slots.push_back(j.get());
    } else {
        for (const auto& s : catalog) rep.slots.push_back(verify_slot(s, tol));
    }

    std::set<InvariantFingerprint> fps;
    std::set<RealPartTopology> tops;
    std::string first_failed;
    for (const auto& s : rep.slots) {
        if (s.pass()) ++rep.slots_passed;
        else if (first_failed.empty()) first_failed = s.id;
        fps.insert(s.fingerprint);
        tops.insert(s.computed);
        if (!matches_action_case(s.group, s.full_computed, s.split_computed)) rep.action_ok = false;
        if (is_bdf_group(s.group)) {
            auto& row = rep.htk[s.group];
            row.bound = htk_bound(s.group);
            row.max_components = std::max(row.max_components, s.computed.components());
            if (s.computed.components() > row.bound) row.within = false;
        }
    }
    rep.distinct_fingerprints = fps.size();
    rep.topologies.assign(tops.begin(), tops.end());
    for (auto& [g, row] : rep.htk) row.attained = row.max_components == row.bound;

    auto& fa = rep.failed_assertions;
    if (rep.slots.size() != expected_slot_count)
        fa.push_back("slot count " + std::to_string(rep.slots.size()) + " != 78");
    if (rep.slots_passed != rep.slots.size())
        fa.push_back("slots pass: first failing slot " + first_failed + " (" +
                     std::to_string(rep.slots.size() - rep.slots_passed) + " failing)");
    if (rep.distinct_fingerprints != expected_slot_count)
        fa.push_back("distinct fingerprints " + std::to_string(rep.distinct_fingerprints) + " != 78");
    std::set<RealPartTopology> admissible(admissible_real_parts().begin(), admissible_real_parts().end());
    if (tops != admissible) fa.push_back("real-part topologies differ from the 11 admissible types");
    for (auto& [g, row] : rep.htk) {
        if (!row.within) fa.push_back("HTK bound exceeded for " + to_string(g));
        if (!row.attained) fa.push_back("HTK bound not attained for " + to_string(g));
    }
    if (rep.htk.size() != 7) fa.push_back("HTK table does not cover the seven groups");
    if (!rep.action_ok) fa.push_back("(G, G^, split) outside the admissible action cases");
    return rep;
}

inline VerificationReport verify_all(bool parallel = false) { return verify_all(builtin_catalog(), parallel); }

// serialization

using json = nlohmann::ordered_json;

inline json to_json(const RatVec2& v) { return json::array({to_string(v.x), to_string(v.y)}); }

inline RatVec2 vec_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error("expected a pair of rationals");
    return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>())};
}

inline json to_json(const SigmaData& s) { return {{"family", to_string(s.family)}, {"a", s.a}, {"b", to_json(s.b)}}; }

inline SigmaData sigma_from_json(const json& j) {
    return {family_from_string(j.at("family").get<std::string>()), j.at("a").get<std::string>(), vec_from_json(j.at("b"))};
}

inline json to_json(const CatalogSlot& s) {
    json vs = json::array();
    for (const auto& v : s.variants) {
        json extra = json::array();
        for (const auto& g : v.extra_gens) extra.push_back({{"e", to_json(g.e)}, {"xi", g.xi}, {"f", to_json(g.f)}});
        vs.push_back({{"sigma1", to_json(v.sigma1)},
                      {"sigma2", to_json(v.sigma2)},
                      {"eta", to_json(v.eta)},
                      {"eps1", v.eps1 ? to_json(*v.eps1) : json(nullptr)},
                      {"eps2", v.eps2 ? to_json(*v.eps2) : json(nullptr)},
                      {"extra_gens", extra}});
    }
    json t1 = json::array(), t2 = json::array();
    for (auto f : s.tau1) t1.push_back(to_string(f));
    for (auto f : s.tau2) t2.push_back(to_string(f));
    return {{"id", s.id},
            {"section", s.section},
            {"G", to_string(s.group)},
            {"G_hat", to_string(s.full_group)},
            {"xi", s.xi},
            {"tau1", t1},
            {"tau2", t2},
            {"split", s.split},
            {"variants", vs},
            {"expected", {{"tori", s.expected.tori}, {"klein", s.expected.klein}}},
            {"flagged", s.flagged},
            {"note", s.note}};
}

inline CatalogSlot slot_from_json(const json& j) {
    CatalogSlot s;
    s.id = j.at("id").get<std::string>();
    s.section = j.at("section").get<std::string>();
    s.group = named_group_from_string(j.at("G").get<std::string>());
    s.full_group = named_group_from_string(j.at("G_hat").get<std::string>());
    s.xi = j.at("xi").get<std::string>();
    for (auto& f : j.at("tau1")) s.tau1.push_back(family_from_string(f.get<std::string>()));
    for (auto& f : j.at("tau2")) s.tau2.push_back(family_from_string(f.get<std::string>()));
    s.split = j.at("split").get<bool>();
    for (auto& jv : j.at("variants")) {
        Variant v;
        v.sigma1 = sigma_from_json(jv.at("sigma1"));
        v.sigma2 = sigma_from_json(jv.at("sigma2"));
        v.eta = vec_from_json(jv.at("eta"));
        if (!jv.at("eps1").is_null()) v.eps1 = vec_from_json(jv.at("eps1"));
        if (!jv.at("eps2").is_null()) v.eps2 = vec_from_json(jv.at("eps2"));
        for (auto& g : jv.at("extra_gens"))
            v.extra_gens.push_back({vec_from_json(g.at("e")), g.at("xi").get<std::string>(), vec_from_json(g.at("f"))});
        s.variants.push_back(std::move(v));
    }
    s.expected = {j.at("expected").at("tori").get<int>(), j.at("expected").at("klein").get<int>()};
    s.flagged = j.value("flagged", false);
    s.note = j.value("note", std::string());
    return s;
}

inline std::string export_catalog_json(const std::vector<CatalogSlot>& catalog) {
    json arr = json::array();
    for (const auto& s : catalog) arr.push_back(to_json(s));
    return arr.dump(2) + "\n";
}

inline std::vector<CatalogSlot> import_catalog_json(const std::string& text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("catalog json: ") + e.what());
    }
    if (!arr.is_array()) throw Error("catalog json: expected an array");
    std::vector<CatalogSlot> out;
    try {
        for (auto& j : arr) out.push_back(slot_from_json(j));
    } catch (const json::exception& e) {
        throw Error(std::string("catalog json: ") + e.what());
    }
    return out;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) {
        if (c == '"') o += '"';
        o += c;
    }
    return o + "\"";
}

inline std::string report_csv(const VerificationReport& rep) {
    std::ostringstream os;
    os << "id,G,G_hat,split,expected,computed,pass\n";
    for (const auto& s : rep.slots)
        os << s.id << ',' << to_string(s.group) << ',' << to_string(s.full_computed) << ','
           << (s.split_computed ? "split" : "nonsplit") << ',' << csv_field(to_string(s.expected)) << ','
           << csv_field(to_string(s.computed)) << ',' << (s.pass() ? "pass" : "fail") << '\n';
    return os.str();
}

inline std::string report_markdown(const VerificationReport& rep) {
    std::ostringstream os;
    os << "# Real hyperelliptic surfaces: catalog verification\n";
    std::string section;
    for (const auto& s : rep.slots) {
        if (s.section != section) {
            section = s.section;
            os << "\n## " << section << "\n\n| id | G | G^ | split | S(R) expected | S(R) computed | pass |\n"
               << "|---|---|---|---|---|---|---|\n";
        }
        os << "| " << s.id << " | " << to_string(s.group) << " | " << to_string(s.full_computed) << " | "
           << (s.split_computed ? "yes" : "no") << " | " << to_string(s.expected) << " | " << to_string(s.computed)
           << " | " << (s.pass() ? "pass" : "fail") << " |\n";
    }
    return os.str();
}

inline json to_json(const SlotReport& s) {
    json fails = json::array();
    for (auto& f : s.failures) fails.push_back(f);
    return {{"id", s.id},
            {"section", s.section},
            {"G", to_string(s.group)},
            {"G_hat", to_string(s.full_computed)},
            {"split", s.split_computed},
            {"variants", s.variants},
            {"expected", to_string(s.expected)},
            {"computed", to_string(s.computed)},
            {"fingerprint", to_string(s.fingerprint)},
            {"flagged", s.flagged},
            {"pass", s.pass()},
            {"failures", fails}};
}

inline std::string report_json(const VerificationReport& rep) {
    json slots = json::array();
    for (const auto& s : rep.slots) slots.push_back(to_json(s));
    json tops = json::array();
    for (auto& t : rep.topologies) tops.push_back(to_string(t));
    json htk = json::object();
    for (auto& [g, row] : rep.htk)
        htk[to_string(g)] = {{"bound", row.bound}, {"max", row.max_components}, {"attained", row.attained}};
    json fa = json::array();
    for (auto& f : rep.failed_assertions) fa.push_back(f);
    json out = {{"slot_count", rep.slots.size()},
                {"slots_passed", rep.slots_passed},
                {"distinct_fingerprints", rep.distinct_fingerprints},
                {"topologies", tops},
                {"htk", htk},
                {"action_cases_ok", rep.action_ok},
                {"failed_assertions", fa},
                {"slots", slots}};
    return out.dump(2) + "\n";
}

inline std::string report_text(const VerificationReport& rep, bool quiet = false) {
    std::ostringstream os;
    if (!quiet)
        for (const auto& s : rep.slots) {
            os << (s.pass() ? "pass " : "FAIL ") << s.id << "  G=" << to_string(s.group)
               << " G^=" << to_string(s.full_computed) << (s.split_computed ? " split" : " nonsplit")
               << "  S(R) expected " << to_string(s.expected) << " computed " << to_string(s.computed)
               << (s.flagged ? "  [flagged]" : "") << '\n';
            for (auto& f : s.failures) os << "     " << f << '\n';
        }
    os << rep.slots_passed << "/" << rep.slots.size() << " slots pass\n";
    os << "distinct fingerprints: " << rep.distinct_fingerprints << "\n";
    os << "real-part topologies (" << rep.topologies.size() << "): "
       << join(rep.topologies, [](const RealPartTopology& t) { return to_string(t); }, " ") << "\n";
    for (auto& [g, row] : rep.htk)
        os << "HTK " << to_string(g) << ": bound " << row.bound << ", max " << row.max_components
           << (row.attained ? ", attained" : ", not attained") << (row.within ? "" : ", EXCEEDED") << "\n";
    os << "action cases: " << (rep.action_ok ? "ok" : "mismatch") << "\n";
    for (auto& f : rep.failed_assertions) os << "failed: " << f << "\n";
    return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw Error("write failed: " + path);
}

}  // namespace realhyp
