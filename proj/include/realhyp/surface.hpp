#pragma once

#include "grp.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <tuple>

namespace realhyp {

struct RealHypSurface {
    EllipticCurve E{TauFamily::ImAxisGeneric, Role::E};
    EllipticCurve F{TauFamily::ImAxisGeneric, Role::F};
    std::vector<ProductMap> G_gens;
    ProductMap sigma;
};

struct RealPartTopology {
    int tori = 0;
    int klein = 0;
    friend auto operator<=>(const RealPartTopology&, const RealPartTopology&) = default;
    int components() const { return tori + klein; }
};

inline std::string to_string(const RealPartTopology& r) {
    auto part = [](int n, const char* s) { return n == 1 ? std::string(s) : std::to_string(n) + s; };
    if (r.tori == 0 && r.klein == 0) return "∅";
    if (r.klein == 0) return part(r.tori, "T");
    if (r.tori == 0) return part(r.klein, "K");
    return part(r.klein, "K") + "⊔" + part(r.tori, "T");
}

// grammar of the table column: "∅", "nT", "nK", "K ⊔ T", "2K ⊔ T" (spaces optional)
inline RealPartTopology parse_real_part(std::string s) {
    std::string t;
    for (char c : s)
        if (c != ' ') t += c;
    if (t == "∅" || t == "empty" || t == "0") return {};
    RealPartTopology r;
    std::size_t pos = 0;
    auto term = [&](const std::string& part) {
        if (part.empty()) throw Error("bad real part: " + s);
        char kind = part.back();
        std::string num = part.substr(0, part.size() - 1);
        int n = num.empty() ? 1 : std::stoi(num);
        if (kind == 'T') r.tori += n;
        else if (kind == 'K') r.klein += n;
        else throw Error("bad real part: " + s);
    };
    const std::string sep = "⊔";
    for (;;) {
        auto next = t.find(sep, pos);
        if (next == std::string::npos) {
            term(t.substr(pos));
            break;
        }
        term(t.substr(pos, next - pos));
        pos = next + sep.size();
    }
    return r;
}

// the admissible topologies (t, k) of real parts
inline const std::vector<RealPartTopology>& admissible_real_parts() {
    static const std::vector<RealPartTopology> v{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {0, 1},
                                                 {0, 2}, {0, 3}, {0, 4}, {1, 1}, {1, 2}};
    return v;
}

inline TransformationGroup holo_group(const RealHypSurface& s) { return closure(s.G_gens); }

inline Diagnostics validate(const RealHypSurface& s, double tol = 1e-9) {
    Diagnostics d;
    for (const auto& g : s.G_gens)
        if (g.antiholomorphic()) d.fail("G generator is not holomorphic");
    if (!s.sigma.antiholomorphic()) d.fail("sigma is not antiholomorphic");
    if (!d.ok()) return d;

    TransformationGroup G;
    try {
        G = closure(s.G_gens);
    } catch (const Error& e) {
        d.fail(std::string("closure: ") + e.what());
        return d;
    }

    std::set<RatVec2> etrans;
    std::set<IntMat2> flin;
    for (const auto& g : G.elements) {
        if (!g.e.is_translation()) {
            d.fail("translations: G does not act on E by translations");
            break;
        }
        etrans.insert(g.e.trans);
        flin.insert(g.f.linear);
    }
    if (etrans.size() != G.order()) d.fail("faithful: E-translations of G are not injective");
    if (flin.size() == 1) d.fail("quotient: G acts on F by translations only");
    bool cyclic = false;
    for (const auto& m : flin) {
        auto o = matrix_order(m);
        if (o && static_cast<std::size_t>(*o) == flin.size() && (*o == 2 || *o == 3 || *o == 4 || *o == 6))
            cyclic = true;
    }
    if (!cyclic) d.fail("F action: linear parts do not form a cyclic group of order 2, 3, 4 or 6");

    auto check_family = [&](const ProductMap& m) {
        return linear_allowed(m.e, s.E) && linear_allowed(m.f, s.F) && float_check(m.e, s.E, tol) &&
               float_check(m.f, s.F, tol);
    };
    bool fam = check_family(s.sigma);
    for (const auto& g : G.elements) fam = fam && check_family(g);
    if (!fam) d.fail("family: a linear part is not compatible with the curve's lattice");

    for (const auto& g : G.elements)
        if (!G.contains(conjugate(s.sigma, g))) {
            d.fail("normalization: sigma does not normalize G");
            break;
        }
    ProductMap sq = compose(s.sigma, s.sigma);
    if (!G.contains(sq)) d.fail("square: sigma^2 is not in G");
    if (!square_is_translation(s.sigma.e).is_translation || !square_is_translation(s.sigma.f).is_translation)
        d.fail("square: sigma^2 is not a translation");
    if (!d.ok()) return d;

    try {
        auto ext = make_extended(s.G_gens, s.sigma);
        for (auto& f : validate_extended(ext).failures) d.fail("extension: " + f);
    } catch (const Error& e) {
        d.fail(std::string("extension: ") + e.what());
    }
    return d;
}

inline std::vector<ProductMap> antiholomorphic_lifts(const RealHypSurface& s) {
    auto G = holo_group(s);
    std::vector<ProductMap> out;
    for (const auto& g : G.elements) out.push_back(compose(s.sigma, g));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::vector<ProductMap>> involutive_lift_partition(const RealHypSurface& s) {
    auto G = holo_group(s);
    std::set<ProductMap> pending;
    for (const auto& l : antiholomorphic_lifts(s))
        if (is_involution(l)) pending.insert(l);
    std::vector<std::vector<ProductMap>> classes;
    while (!pending.empty()) {
        ProductMap rep = *pending.begin();
        std::set<ProductMap> cls;
        for (const auto& h : G.elements) cls.insert(conjugate(h, rep));
        for (const auto& c : cls) pending.erase(c);
        classes.emplace_back(cls.begin(), cls.end());
    }
    return classes;
}

// one representative (the smallest) per G-conjugacy class of involutive lifts
inline std::vector<ProductMap> involutive_lift_classes(const RealHypSurface& s) {
    std::vector<ProductMap> reps;
    for (const auto& c : involutive_lift_partition(s)) reps.push_back(c.front());
    return reps;
}

struct TorusComponent {
    Circle e, f;
    friend auto operator<=>(const TorusComponent&, const TorusComponent&) = default;
};

inline TorusComponent image(const ProductMap& g, const TorusComponent& c) {
    return {circle_image(g.e, c.e), circle_image(g.f, c.f)};
}

struct ComponentClass {
    TorusComponent representative;
    std::size_t members = 0;     // fixed components in the class
    std::size_t stabilizer = 0;  // |H|
    bool klein = false;
};

struct RealPartAnalysis {
    RealPartTopology topology;
    std::size_t lift_classes = 0;
    std::size_t fixed_components = 0;
    std::vector<ComponentClass> classes;
};

inline std::vector<TorusComponent> fixed_tori(const ProductMap& l) {
    auto fe = fixed_locus(l.e), ff = fixed_locus(l.f);
    std::vector<TorusComponent> out;
    if (fe.empty || ff.empty) return out;
    if (fe.dimension != 1 || ff.dimension != 1) throw Error("fixed locus of an involution is not a union of circles");
    for (auto& ce : fe.components)
        for (auto& cf : ff.components)
            out.push_back({circle_through(ce.base, *ce.direction), circle_through(cf.base, *cf.direction)});
    return out;
}

inline RealPartAnalysis analyze_real_part(const RealHypSurface& s) {
    auto G = holo_group(s);
    auto reps = involutive_lift_classes(s);
    std::vector<TorusComponent> comps;
    for (const auto& r : reps)
        for (auto& c : fixed_tori(r)) comps.push_back(c);
    std::sort(comps.begin(), comps.end());
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());

    std::vector<std::size_t> parent(comps.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (const auto& g : G.elements) {
            auto img = image(g, comps[i]);
            auto it = std::lower_bound(comps.begin(), comps.end(), img);
            if (it != comps.end() && *it == img) parent[find(i)] = find(static_cast<std::size_t>(it - comps.begin()));
        }

    RealPartAnalysis out;
    out.lift_classes = reps.size();
    out.fixed_components = comps.size();
    std::map<std::size_t, ComponentClass> classes;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        auto root = find(i);
        auto [it, fresh] = classes.try_emplace(root);
        if (fresh) it->second.representative = comps[i];
        ++it->second.members;
    }
    for (auto& [root, cls] : classes) {
        const auto& W = cls.representative;
        for (const auto& h : G.elements) {
            if (image(h, W) != W) continue;
            ++cls.stabilizer;
            IntVec2 d = h.f.linear * W.f.dir;
            if (d == -W.f.dir) cls.klein = true;
        }
        if (cls.klein) ++out.topology.klein;
        else ++out.topology.tori;
        out.classes.push_back(cls);
    }
    return out;
}

inline RealPartTopology real_part(const RealHypSurface& s) { return analyze_real_part(s).topology; }

struct EigFlags {
    bool e_plus = false, e_minus = false;
    bool on_f = false;  // element is a pure translation on F as well
    bool f_plus = false, f_minus = false;
    friend auto operator<=>(const EigFlags&, const EigFlags&) = default;
};

inline std::string to_string(const EigFlags& f) {
    std::string s;
    s += f.e_plus ? '+' : '.';
    s += f.e_minus ? '-' : '.';
    if (f.on_f) {
        s += '/';
        s += f.f_plus ? '+' : '.';
        s += f.f_minus ? '-' : '.';
    }
    return s;
}

struct InvariantFingerprint {
    NamedGroup name_holo = NamedGroup::Unknown;
    NamedGroup name_full = NamedGroup::Unknown;
    bool split = false;
    RealPartTopology real_part;
    std::vector<int> nu_set_E, nu_set_F;
    std::vector<std::string> fix_g_action;
    std::vector<EigFlags> eig_flags;
    friend auto operator<=>(const InvariantFingerprint&, const InvariantFingerprint&) = default;
};

template <class T, class F>
std::string join(const std::vector<T>& v, F fmt, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += fmt(v[i]);
    }
    return s;
}

inline std::string to_string(const InvariantFingerprint& fp) {
    auto num = [](int x) { return std::to_string(x); };
    auto str = [](const std::string& x) { return x; };
    auto eig = [](const EigFlags& x) { return to_string(x); };
    return to_string(fp.name_holo) + "|" + to_string(fp.name_full) + "|" + (fp.split ? "split" : "nonsplit") + "|" +
           to_string(fp.real_part) + "|nuE=" + join(fp.nu_set_E, num) + "|nuF=" + join(fp.nu_set_F, num) +
           "|fix=" + join(fp.fix_g_action, str) + "|eig=" + join(fp.eig_flags, eig);
}

// is some lift v + n (n integral) a nonzero eigenvector of L for the eigenvalue lambda
inline bool eigen_lift(const IntMat2& L, const RatVec2& v, Int lambda) {
    IntMat2 M = L - IntMat2{lambda, 0, 0, lambda};
    auto sol = solve_affine_congruence(M, {});
    // kernel line through 0 with primitive direction p; need v on the closed circle through 0
    if (!sol.solvable || sol.dimension != 1) return false;
    IntVec2 p = *sol.direction;
    return is_integer(Rational(p.y) * v.x - Rational(p.x) * v.y);
}

// affine class of a map on the finite set Fix(g)
inline std::string fix_action_class(const CurveMap& s, const std::vector<RatVec2>& pts) {
    std::set<RatVec2> set(pts.begin(), pts.end());
    for (auto& p : pts)
        if (!set.count(s(p))) return "moves";
    bool has_fixed = false;
    for (auto& p : pts)
        if (s(p) == p) has_fixed = true;
    if (pts.size() == 1) return "identity";
    const RatVec2& p0 = pts.front();
    bool lin_id = true, lin_minus = true, unipotent = true;
    for (auto& p : pts) {
        RatVec2 k = mod1(p - p0);
        RatVec2 lk = mod1(s.linear * k);
        if (lk != k) lin_id = false;
        if (lk != mod1(-k)) lin_minus = false;
        RatVec2 n1 = mod1(lk - k);
        if (!mod1(s.linear * n1 - n1).is_zero()) unipotent = false;
    }
    if (lin_id) return has_fixed ? "identity" : "translation";
    if (lin_minus) return "minus-id";
    if (unipotent) return has_fixed ? "unipotent-linear" : "unipotent-affine";
    return "other";
}

inline InvariantFingerprint fingerprint(const RealHypSurface& s) {
    InvariantFingerprint fp;
    auto ext = make_extended(s.G_gens, s.sigma);
    const auto& G = ext.holo;
    fp.name_holo = ext.name_holo;
    fp.name_full = ext.name_full;
    fp.split = ext.split;
    fp.real_part = real_part(s);

    auto lifts = antiholomorphic_lifts(s);
    auto nu0 = [](const CurveMap& m) { return is_involution(m) ? nu(m) : 0; };
    for (const auto& l : lifts) {
        fp.nu_set_E.push_back(nu0(l.e));
        fp.nu_set_F.push_back(nu0(l.f));
    }
    std::sort(fp.nu_set_E.begin(), fp.nu_set_E.end());
    std::sort(fp.nu_set_F.begin(), fp.nu_set_F.end());

    int max_order = 1;
    for (const auto& g : G.elements) max_order = std::max(max_order, matrix_order(g.f.linear).value_or(0));
    if (max_order > 1)
        for (const auto& g : G.elements) {
            if (matrix_order(g.f.linear).value_or(0) != max_order) continue;
            auto fl = fixed_locus(g.f);
            std::vector<RatVec2> pts;
            for (auto& c : fl.components) pts.push_back(c.base);
            for (const auto& l : lifts) fp.fix_g_action.push_back(fix_action_class(l.f, pts));
        }
    std::sort(fp.fix_g_action.begin(), fp.fix_g_action.end());

    for (const auto& g : G.elements) {
        if (g.is_identity()) continue;
        EigFlags f;
        f.e_plus = eigen_lift(s.sigma.e.linear, g.e.trans, 1);
        f.e_minus = eigen_lift(s.sigma.e.linear, g.e.trans, -1);
        if (g.f.is_translation()) {
            f.on_f = true;
            f.f_plus = eigen_lift(s.sigma.f.linear, g.f.trans, 1);
            f.f_minus = eigen_lift(s.sigma.f.linear, g.f.trans, -1);
        }
        fp.eig_flags.push_back(f);
    }
    std::sort(fp.eig_flags.begin(), fp.eig_flags.end());
    return fp;
}

struct H1Data {
    int rank = 2;
    std::vector<Int> torsion;
};

inline bool is_bdf_group(NamedGroup g) {
    using N = NamedGroup;
    return g == N::Z2 || g == N::Z2xZ2 || g == N::Z4 || g == N::Z4xZ2 || g == N::Z3 || g == N::Z3xZ3 || g == N::Z6;
}

inline H1Data h1_of(NamedGroup g) {
    switch (g) {
        case NamedGroup::Z2: return {2, {2, 2}};
        case NamedGroup::Z2xZ2: return {2, {2}};
        case NamedGroup::Z4: return {2, {2}};
        case NamedGroup::Z4xZ2: return {2, {}};
        case NamedGroup::Z3: return {2, {3}};
        case NamedGroup::Z3xZ3: return {2, {}};
        case NamedGroup::Z6: return {2, {}};
        default: throw Error("h1_of: unknown name " + to_string(g));
    }
}

// sum of Z/2 Betti numbers over 4, from h0 = h4 = 1, h1 = h3 = 2 + t2, h2 = 2 h1 - 2
inline int htk_bound(NamedGroup g) {
    auto h = h1_of(g);
    int t2 = 0;
    for (Int c : h.torsion)
        if (c % 2 == 0) ++t2;
    int h1 = h.rank + t2;
    int h2 = 2 * h1 - 2;
    return (1 + h1 + h2 + h1 + 1) / 4;
}

// the seven Bagnera-de Franchis group actions on E x F
struct BdfCase {
    int number = 0;
    NamedGroup group = NamedGroup::Unknown;
    std::string description;
    EllipticCurve E, F;
    std::vector<ProductMap> gens;
};

inline std::vector<BdfCase> bdf_cases() {
    auto Q = [](Int p, Int q) { return Rational(p, q); };
    auto pm = [](RatVec2 e, const IntMat2& fl, RatVec2 ft = {}) {
        return ProductMap(CurveMap::translation(e), CurveMap(fl, ft));
    };
    EllipticCurve E{TauFamily::ImAxisGeneric, Role::E};
    EllipticCurve Fim{TauFamily::ImAxisGeneric, Role::F}, Fi{TauFamily::SquareI, Role::F},
        Frho{TauFamily::HexRho, Role::F};
    using namespace mats;
    return {
        {1, NamedGroup::Z2, "G=Z/2 on F by x->-x", E, Fim, {pm({Q(1, 2), 0}, -I)}},
        {2, NamedGroup::Z2xZ2, "G=Z/2+Z/2 on F by x->-x, x->x+e", E, Fim,
         {pm({Q(1, 2), 0}, -I), pm({0, Q(1, 2)}, I, {Q(1, 2), 0})}},
        {3, NamedGroup::Z4, "G=Z/4 on F_i by x->ix", E, Fi, {pm({Q(1, 4), 0}, rot4)}},
        {4, NamedGroup::Z4xZ2, "G=Z/4+Z/2 on F_i by x->ix, x->x+(1+i)/2", E, Fi,
         {pm({Q(1, 4), 0}, rot4), pm({0, Q(1, 2)}, I, {Q(1, 2), Q(1, 2)})}},
        {5, NamedGroup::Z3, "G=Z/3 on F_rho by x->rho x", E, Frho, {pm({Q(1, 3), 0}, rot3)}},
        {6, NamedGroup::Z3xZ3, "G=Z/3+Z/3 on F_rho by x->rho x, x->x+(1-rho)/3", E, Frho,
         {pm({Q(1, 3), 0}, rot3), pm({0, Q(1, 3)}, I, {Q(1, 3), Q(-1, 3)})}},
        {7, NamedGroup::Z6, "G=Z/6 on F_rho by x->-rho x", E, Frho, {pm({Q(1, 6), 0}, -rot3)}},
    };
}

struct BdfCheck {
    std::size_t order = 0;
    NamedGroup classified = NamedGroup::Unknown;
    int rotation_order = 0;        // order of the F-linear part of the generator
    std::size_t fixed_points = 0;  // |Fix(g)| on F for the rotation generator
    Diagnostics diagnostics;
};

inline BdfCheck check_bdf(const BdfCase& c) {
    BdfCheck out;
    auto G = closure(c.gens);
    out.order = G.order();
    out.classified = classify_abstract(abstract(G));
    if (out.classified != c.group) out.diagnostics.fail("group type");
    std::set<RatVec2> et;
    bool nontrivial = false;
    for (const auto& g : G.elements) {
        if (!g.e.is_translation()) out.diagnostics.fail("translations");
        et.insert(g.e.trans);
        if (!g.f.is_translation()) nontrivial = true;
        if (!linear_allowed(g.f, c.F) || !float_check(g.f, c.F, 1e-9)) out.diagnostics.fail("family");
    }
    if (et.size() != G.order()) out.diagnostics.fail("faithful");
    if (!nontrivial) out.diagnostics.fail("quotient");
    const auto& g0 = c.gens.front();
    out.rotation_order = matrix_order(g0.f.linear).value_or(0);
    auto fl = fixed_locus(g0.f);
    if (fl.empty || fl.dimension != 0) out.diagnostics.fail("fixed points");
    else out.fixed_points = fl.components.size();
    return out;
}

// excluded sub-case with G = Z/4 + Z/2: sigma inverts g, fixes t and squares to t, with t_F = z + (1+i)/2 on tau = i
struct ExcludedCaseSearch {
    std::size_t examined = 0;
    std::size_t relation_matches = 0;  // sigma^2 = t and sigma g sigma^-1 = g^-1
    std::size_t validating = 0;
};

inline ExcludedCaseSearch search_excluded_z4z2_case() {
    ExcludedCaseSearch out;
    std::vector<RatVec2> quarter, half;
    for (Int i = 0; i < 4; ++i)
        for (Int j = 0; j < 4; ++j) quarter.push_back({Rational(i, 4), Rational(j, 4)});
    for (Int i = 0; i < 2; ++i)
        for (Int j = 0; j < 2; ++j) half.push_back({Rational(i, 2), Rational(j, 2)});
    const EllipticCurve E{TauFamily::ImAxisGeneric, Role::E};
    const ProductMap id = ProductMap::identity();
    for (const auto& lin1 : allowed_antiholo_linears(E.family))
        for (const auto& b1 : quarter)
            for (const auto& ge : quarter) {
                if (mod1(ge + ge + ge + ge) != RatVec2{} || mod1(ge + ge).is_zero()) continue;
                for (const auto& te : half) {
                    if (te.is_zero()) continue;
                    for (TauFamily ff : {TauFamily::SquareI, TauFamily::SquareIRot})
                        for (const auto& lin2 : allowed_antiholo_linears(ff))
                            for (const auto& b2 : quarter) {
                                ++out.examined;
                                RealHypSurface s;
                                s.E = E;
                                s.F = {ff, Role::F};
                                ProductMap g(CurveMap::translation(ge), CurveMap(mats::rot4, {}));
                                ProductMap t(CurveMap::translation(te),
                                             CurveMap::translation({Rational(1, 2), Rational(1, 2)}));
                                s.G_gens = {g, t};
                                s.sigma = ProductMap(CurveMap(lin1, b1), CurveMap(lin2, b2));
                                if (compose(s.sigma, s.sigma) != t) continue;
                                if (compose(conjugate(s.sigma, g), g) != id) continue;
                                ++out.relation_matches;
                                if (validate(s).ok()) ++out.validating;
                            }
                }
            }
    return out;
}

}  // namespace realhyp
