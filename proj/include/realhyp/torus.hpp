#pragma once

#include "exactlin.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace realhyp {

enum class TauFamily { ImAxisGeneric, SquareI, SquareIRot, UnitCircleGeneric, HexRho, HexRhoNeg, HalfLine };

inline constexpr std::array<TauFamily, 7> all_families{
    TauFamily::ImAxisGeneric, TauFamily::SquareI,   TauFamily::SquareIRot, TauFamily::UnitCircleGeneric,
    TauFamily::HexRho,        TauFamily::HexRhoNeg, TauFamily::HalfLine};

inline std::string to_string(TauFamily f) {
    switch (f) {
        case TauFamily::ImAxisGeneric: return "ImAxisGeneric";
        case TauFamily::SquareI: return "SquareI";
        case TauFamily::SquareIRot: return "SquareIRot";
        case TauFamily::UnitCircleGeneric: return "UnitCircleGeneric";
        case TauFamily::HexRho: return "HexRho";
        case TauFamily::HexRhoNeg: return "HexRhoNeg";
        case TauFamily::HalfLine: return "HalfLine";
    }
    return "?";
}

inline TauFamily family_from_string(std::string_view s) {
    for (auto f : all_families)
        if (to_string(f) == s) return f;
    throw Error("unknown tau family: " + std::string(s));
}

namespace mats {
inline const IntMat2 I{1, 0, 0, 1};
inline const IntMat2 conj_im{1, 0, 0, -1};   // z -> conj(z), Re tau = 0
inline const IntMat2 swap{0, 1, 1, 0};       // z -> tau conj(z), |tau| = 1
inline const IntMat2 conj_half{1, -1, 0, -1}; // z -> conj(z), Re tau = -1/2
inline const IntMat2 rot4{0, -1, 1, 0};      // z -> i z on tau = i
inline const IntMat2 rot3{0, -1, 1, -1};     // z -> rho z on tau = rho
}  // namespace mats

inline std::complex<double> sample_tau(TauFamily f) {
    using namespace std::complex_literals;
    switch (f) {
        case TauFamily::ImAxisGeneric: return 1.5i;
        case TauFamily::SquareI:
        case TauFamily::SquareIRot: return 1.0i;
        case TauFamily::UnitCircleGeneric: return std::polar(1.0, 100.0 * std::numbers::pi / 180.0);
        case TauFamily::HexRho:
        case TauFamily::HexRhoNeg: return std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
        case TauFamily::HalfLine: return {-0.5, 1.2};
    }
    return 1.0i;
}

inline std::vector<IntMat2> allowed_antiholo_linears(TauFamily f) {
    using namespace mats;
    switch (f) {
        case TauFamily::ImAxisGeneric:
        case TauFamily::SquareI: return {conj_im, -conj_im};
        case TauFamily::SquareIRot:
        case TauFamily::UnitCircleGeneric: return {swap, -swap};
        case TauFamily::HalfLine: return {conj_half, -conj_half};
        case TauFamily::HexRho: return {conj_half, rot3 * conj_half, rot3 * rot3 * conj_half};
        case TauFamily::HexRhoNeg: return {-conj_half, -(rot3 * conj_half), -(rot3 * rot3 * conj_half)};
    }
    return {};
}

inline std::vector<IntMat2> allowed_holo_linears(TauFamily f) {
    using namespace mats;
    switch (f) {
        case TauFamily::SquareI:
        case TauFamily::SquareIRot: return {I, rot4, -I, -rot4};
        case TauFamily::HexRho:
        case TauFamily::HexRhoNeg: return {I, rot3, rot3 * rot3, -I, -rot3, -(rot3 * rot3)};
        default: return {I, -I};
    }
}

// every linear part reachable by composing allowed maps
inline std::set<IntMat2> allowed_linear_closure(TauFamily f) {
    std::set<IntMat2> out{mats::I};
    std::vector<IntMat2> gens = allowed_holo_linears(f);
    for (auto& m : allowed_antiholo_linears(f)) gens.push_back(m);
    std::vector<IntMat2> todo{mats::I};
    while (!todo.empty()) {
        IntMat2 x = todo.back();
        todo.pop_back();
        for (auto& g : gens)
            if (out.insert(x * g).second) todo.push_back(x * g);
    }
    return out;
}

// linear part of z -> a conj(z) for the printed a-symbol
inline IntMat2 antiholo_linear(TauFamily f, std::string_view a) {
    using namespace mats;
    auto fail = [&]() -> IntMat2 {
        throw Error("a = " + std::string(a) + " not allowed on " + to_string(f));
    };
    switch (f) {
        case TauFamily::ImAxisGeneric:
        case TauFamily::SquareI:
            if (a == "1") return conj_im;
            if (a == "-1") return -conj_im;
            return fail();
        case TauFamily::SquareIRot:
        case TauFamily::UnitCircleGeneric:
            if (a == "tau" || a == "i") return swap;
            if (a == "-tau" || a == "-i") return -swap;
            return fail();
        case TauFamily::HalfLine:
            if (a == "1") return conj_half;
            if (a == "-1") return -conj_half;
            return fail();
        case TauFamily::HexRho:
            if (a == "1") return conj_half;
            if (a == "rho") return rot3 * conj_half;
            if (a == "rho2") return rot3 * rot3 * conj_half;
            return fail();
        case TauFamily::HexRhoNeg:
            if (a == "-1") return -conj_half;
            if (a == "-rho") return -(rot3 * conj_half);
            if (a == "-rho2") return -(rot3 * rot3 * conj_half);
            return fail();
    }
    return fail();
}

// linear part of z -> xi z
inline IntMat2 holo_linear(std::string_view xi) {
    using namespace mats;
    if (xi == "1") return I;
    if (xi == "-1") return -I;
    if (xi == "i") return rot4;
    if (xi == "-i") return -rot4;
    if (xi == "rho") return rot3;
    if (xi == "rho2") return rot3 * rot3;
    if (xi == "-rho") return -rot3;
    if (xi == "-rho2") return -(rot3 * rot3);
    throw Error("unknown holomorphic multiplier: " + std::string(xi));
}

enum class Role { E, F };

struct EllipticCurve {
    TauFamily family = TauFamily::ImAxisGeneric;
    Role role = Role::E;
    friend bool operator==(const EllipticCurve&, const EllipticCurve&) = default;
};

enum class Kind { Holomorphic, Antiholomorphic };

struct CurveMap {
    IntMat2 linear;
    RatVec2 trans;
    Kind kind = Kind::Holomorphic;

    CurveMap() = default;
    CurveMap(const IntMat2& l, const RatVec2& t) : linear(l), trans(mod1(t)) {
        Int d = l.det();
        if (d == 1) kind = Kind::Holomorphic;
        else if (d == -1) kind = Kind::Antiholomorphic;
        else throw Error("curve map linear part must be unimodular, got " + to_string(l));
    }

    static CurveMap identity() { return {mats::I, {}}; }
    static CurveMap translation(const RatVec2& t) { return {mats::I, t}; }

    bool antiholomorphic() const { return kind == Kind::Antiholomorphic; }
    bool is_translation() const { return linear == mats::I; }
    bool is_identity() const { return linear == mats::I && trans.is_zero(); }
    RatVec2 operator()(const RatVec2& x) const { return mod1(linear * x + trans); }

    friend bool operator==(const CurveMap& f, const CurveMap& g) {
        return f.linear == g.linear && f.trans == g.trans;
    }
    friend std::strong_ordering operator<=>(const CurveMap& f, const CurveMap& g) {
        if (auto c = f.linear <=> g.linear; c != 0) return c;
        return f.trans <=> g.trans;
    }
};

inline std::ostream& operator<<(std::ostream& os, const CurveMap& f) {
    return os << f.linear << " x + " << f.trans;
}

// (f o g)(x) = f(g(x))
inline CurveMap compose(const CurveMap& f, const CurveMap& g) {
    return {f.linear * g.linear, f.linear * g.trans + f.trans};
}

inline CurveMap inverse(const CurveMap& f) {
    IntMat2 li = f.linear.inverse();
    return {li, -(li * f.trans)};
}

inline bool is_involution(const CurveMap& f) { return compose(f, f).is_identity(); }

struct FixedComponent {
    RatVec2 base;
    std::optional<IntVec2> direction;
};

struct FixedLocus {
    bool empty = true;
    int dimension = 0;
    std::vector<FixedComponent> components;
};

inline FixedLocus fixed_locus(const CurveMap& f) {
    CongruenceSolution s = solve_affine_congruence(f.linear - mats::I, f.trans);
    FixedLocus out;
    if (!s.solvable) return out;
    out.empty = false;
    out.dimension = s.dimension;
    for (auto& p : s.base_points) out.components.push_back({p, s.direction});
    return out;
}

inline int nu(const CurveMap& f) {
    if (!f.antiholomorphic()) throw Error("nu: map is not antiholomorphic");
    if (!is_involution(f)) throw Error("nu: map is not an involution");
    auto fl = fixed_locus(f);
    return fl.empty ? 0 : static_cast<int>(fl.components.size());
}

struct SquareTranslation {
    bool is_translation = false;
    RatVec2 vector;
};

inline SquareTranslation square_is_translation(const CurveMap& f) {
    if (!f.antiholomorphic()) throw Error("square_is_translation: map is not antiholomorphic");
    CurveMap s = compose(f, f);
    if (!s.is_translation()) return {};
    return {true, s.trans};
}

struct TorsionGroup {
    std::vector<Int> invariant_factors;  // d1 | d2, trivial factors dropped
    std::vector<RatVec2> elements;
};

// kernel of (A + I) on (Z/q)^2, i.e. torsion points c with a conj(c) + c = 0
inline TorsionGroup torsion_anti_invariants(const EllipticCurve& curve, const IntMat2& a_linear, Int q) {
    if (q != 2 && q != 3 && q != 4 && q != 6) throw Error("torsion_anti_invariants: q must be 2, 3, 4 or 6");
    auto allowed = allowed_antiholo_linears(curve.family);
    if (std::find(allowed.begin(), allowed.end(), a_linear) == allowed.end())
        throw Error("torsion_anti_invariants: linear part not allowed on " + to_string(curve.family));
    IntMat2 M = a_linear + mats::I;
    TorsionGroup out;
    Int exponent = 1;
    for (Int i = 0; i < q; ++i)
        for (Int j = 0; j < q; ++j) {
            IntVec2 img = M * IntVec2{i, j};
            if (((img.x % q) + q) % q != 0 || ((img.y % q) + q) % q != 0) continue;
            out.elements.push_back({Rational(i, q), Rational(j, q)});
            Int ord = q / std::gcd(std::gcd(i, j), q);
            exponent = std::lcm(exponent, ord);
        }
    Int size = static_cast<Int>(out.elements.size());
    if (size / exponent > 1) out.invariant_factors.push_back(size / exponent);
    if (exponent > 1) out.invariant_factors.push_back(exponent);
    return out;
}

struct ReducedTranslation {
    CurveMap map;
    RatVec2 shift;  // new origin: w -> w + shift
};

// f(w + v) - v = A w + (A - I) v + b; kill the part of b in the image of A - I
inline ReducedTranslation reduce_translation(const CurveMap& f) {
    if (!f.antiholomorphic()) throw Error("reduce_translation: map is not antiholomorphic");
    IntMat2 M = f.linear - mats::I;
    auto [U, D, V] = smith_normal_form(M);
    RatVec2 c = U * f.trans;
    RatVec2 y;
    if (D.a != 0) y.x = -c.x / D.a;
    if (D.d != 0) y.y = -c.y / D.d;
    RatVec2 v = mod1(V * y);
    return {CurveMap(f.linear, M * v + f.trans), v};
}

// numeric sanity check: lift to C at the family's sample tau
inline bool float_check(const CurveMap& f, const EllipticCurve& curve, double tol) {
    std::complex<double> tau = sample_tau(curve.family);
    const IntMat2& M = f.linear;
    std::complex<double> f1 = double(M.a) + double(M.c) * tau;
    std::complex<double> ft = double(M.b) + double(M.d) * tau;
    if (std::abs(std::abs(f1) - 1.0) > tol) return false;
    if (f.kind == Kind::Holomorphic) return std::abs(ft - f1 * tau) <= tol;
    return std::abs(ft - f1 * std::conj(tau)) <= tol;
}

inline bool linear_allowed(const CurveMap& f, const EllipticCurve& curve) {
    return allowed_linear_closure(curve.family).count(f.linear) > 0;
}

// a circle on the torus: direction d and invariant w = d.y * x1 - d.x * x2 mod 1
struct Circle {
    IntVec2 dir;
    Rational w{0};
    friend bool operator==(const Circle&, const Circle&) = default;
    friend std::strong_ordering operator<=>(const Circle& a, const Circle& b) {
        if (auto c = a.dir <=> b.dir; c != 0) return c;
        return cmp(a.w, b.w);
    }
};

inline Circle circle_through(const RatVec2& p, const IntVec2& d) {
    IntVec2 n = normalize_sign(d);
    return {n, floor_frac(Rational(n.y) * p.x - Rational(n.x) * p.y)};
}

inline RatVec2 point_on(const Circle& c) {
    if (c.dir.y != 0) return mod1({c.w / c.dir.y, Rational(0)});
    return mod1({Rational(0), -c.w / c.dir.x});
}

inline Circle circle_image(const CurveMap& f, const Circle& c) {
    return circle_through(f(point_on(c)), f.linear * c.dir);
}

}  // namespace realhyp
