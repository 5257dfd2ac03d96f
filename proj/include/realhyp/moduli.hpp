#pragma once

#include "exactlin.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace realhyp {

struct RatMat2 {
    Rational a, b, c, d;
    friend bool operator==(const RatMat2&, const RatMat2&) = default;
    RatMat2 operator*(const RatMat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    RatMat2 operator-() const { return {-a, -b, -c, -d}; }
    RatMat2 operator+(const RatMat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    RatMat2 operator-(const RatMat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
};

inline RatMat2 to_rat(const IntMat2& m) { return {m.a, m.b, m.c, m.d}; }

inline std::string to_string(const RatMat2& m) {
    auto s = [](const Rational& r) { return r.denominator() == 1 ? std::to_string(r.numerator()) : to_string(r); };
    return "[[" + s(m.a) + "," + s(m.b) + "],[" + s(m.c) + "," + s(m.d) + "]]";
}

// entries coeff * sqrt(radicand), one radicand for the whole matrix
struct SurdMat2 {
    RatMat2 coeff;
    Int radicand = 1;
    friend bool operator==(const SurdMat2&, const SurdMat2&) = default;
    SurdMat2 operator-() const { return {-coeff, radicand}; }
    std::array<double, 4> values() const {
        double r = std::sqrt(static_cast<double>(radicand));
        auto v = [&](const Rational& x) { return boost::rational_cast<double>(x) * r; };
        return {v(coeff.a), v(coeff.b), v(coeff.c), v(coeff.d)};
    }
};

inline std::string to_string(const SurdMat2& m) {
    if (m.radicand == 1) return to_string(m.coeff);
    return "sqrt(" + std::to_string(m.radicand) + ")*" + to_string(m.coeff);
}

namespace zeta {
inline const IntMat2 diag{1, 0, 0, -1};
inline const IntMat2 swap{0, 1, 1, 0};
}  // namespace zeta

enum class Relation { Commute, Invert };

inline std::string to_string(Relation r) { return r == Relation::Commute ? "commute" : "invert"; }

struct ZetaBCase {
    std::string label;  // I.1, I.2, II.1, II.2
    IntMat2 zeta;
    IntMat2 B;
    Relation relation = Relation::Commute;
    int order = 0;
    friend bool operator==(const ZetaBCase& x, const ZetaBCase& y) {
        return x.label == y.label && x.zeta == y.zeta && x.B == y.B && x.relation == y.relation;
    }
};

inline bool relation_holds(const IntMat2& z, const IntMat2& B, Relation r) {
    IntMat2 c = z * B * z;
    return r == Relation::Commute ? c == B : c == B.inverse();
}

// GL2(Z)-conjugate of an integral involution of determinant -1 into diag(1,-1) or swap
struct ZetaNormalForm {
    IntMat2 normal;
    IntMat2 P;  // P z P^-1 = normal
};

inline ZetaNormalForm zeta_normal_form(const IntMat2& z) {
    if (z.det() != -1 || z * z != IntMat2::identity()) throw Error("zeta must be an involution of determinant -1");
    for (const auto& target : {zeta::diag, zeta::swap})
        for (Int a = -4; a <= 4; ++a)
            for (Int b = -4; b <= 4; ++b)
                for (Int c = -4; c <= 4; ++c)
                    for (Int d = -4; d <= 4; ++d) {
                        IntMat2 P{a, b, c, d};
                        Int dt = P.det();
                        if (dt != 1 && dt != -1) continue;
                        if (P * z * P.inverse() == target) return {target, P};
                    }
    throw Error("zeta_normal_form: no conjugator with small entries");
}

// integer solutions of b (b - s) = c^2 - 1, s = +-1: (2c)^2 - (2b - s)^2 = 3 forces |c| = 1
inline std::vector<Int> trace_pm1_c_values() {
    std::vector<Int> cs;
    for (Int u : {-3, -1, 1, 3}) {
        Int v = 3 / u;  // (2c - m)(2c + m) = 3
        if ((u + v) % 4 == 0) cs.push_back((u + v) / 4);
    }
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
}

inline std::vector<ZetaBCase> enumerate_zeta_b() {
    const IntMat2 minus_id{-1, 0, 0, -1};
    std::vector<ZetaBCase> out;
    auto add = [&](const char* label, const IntMat2& z, const IntMat2& B, Relation r) {
        if (!relation_holds(z, B, r)) throw Error("enumerate_zeta_b: relation fails");
        out.push_back({label, z, B, r, *matrix_order(B)});
    };

    // I.1: B diagonal, b11 b22 = 1
    for (Int b : {1, -1}) {
        IntMat2 B{b, 0, 0, b};
        if (B != IntMat2::identity()) add("I.1", zeta::diag, B, Relation::Commute);
    }
    // I.2: b11 = b22 = b, B = -I or no real eigenvalues so b = 0, b12 b21 = -1; B^-1 lets b21 = 1
    add("I.2", zeta::diag, minus_id, Relation::Invert);
    for (Int b12 : {-1, 1}) {
        Int b21 = -1 / b12;
        if (b21 == 1) add("I.2", zeta::diag, {0, b12, b21, 0}, Relation::Invert);
    }
    // II.1: (b + c)(b - c) = 1 forces c = 0
    for (Int s : {1, -1})
        if (s == -1) add("II.1", zeta::swap, {s, 0, 0, s}, Relation::Commute);
    // II.2: B = [[b11, c], [-c, b22]] with b11 b22 + c^2 = 1
    add("II.2", zeta::swap, minus_id, Relation::Invert);
    for (Int c : trace_pm1_c_values()) {
        // |c| = 1: b11 b22 = 0; swapping the basis gives c = -1, inverting B gives b22 = 0
        if (c != -1) continue;
        for (Int b : {1, -1, 0}) add("II.2", zeta::swap, {b, c, -c, 0}, Relation::Invert);
    }
    return out;
}

enum class FamilyKind { Empty, TwoIsolatedPoints, OneParamTwoBranches };

inline std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::Empty: return "empty";
        case FamilyKind::TwoIsolatedPoints: return "two isolated points";
        case FamilyKind::OneParamTwoBranches: return "one-parameter family, two branches";
    }
    return "?";
}

struct SolutionFamily {
    FamilyKind kind = FamilyKind::Empty;
    IntMat2 zeta, B;
    std::string parametrization;
    std::string branch_rule;
    std::string note;
    std::optional<SurdMat2> point;         // the other point is its negative
    std::function<RatMat2(Rational)> at;   // parameter -> J
    std::function<int(const RatMat2&)> branch_of;
    std::array<std::vector<Rational>, 2> samples;  // rational parameter values per branch
};

namespace detail {

// rational nullspace basis of a row-major matrix with 4 columns
inline std::vector<std::array<Rational, 4>> nullspace4(std::vector<std::array<Rational, 4>> rows) {
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int col = 0; col < 4 && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col] == Rational(0)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        Rational inv = Rational(1) / rows[r][col];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][col] != Rational(0)) {
                Rational f = rows[i][col];
                for (int k = 0; k < 4; ++k) rows[i][k] -= f * rows[r][k];
            }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<std::array<Rational, 4>> basis;
    for (int free = 0; free < 4; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
        std::array<Rational, 4> v{};
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][free];
        basis.push_back(v);
    }
    return basis;
}

// rows of the linear map J -> L J R, J = [[j0, j1], [j2, j3]]
inline std::vector<std::array<Rational, 4>> sandwich_rows(const IntMat2& L, const IntMat2& R) {
    std::vector<std::array<Rational, 4>> rows;
    Int l[2][2] = {{L.a, L.b}, {L.c, L.d}}, rr[2][2] = {{R.a, R.b}, {R.c, R.d}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            std::array<Rational, 4> row{};
            for (int k = 0; k < 2; ++k)
                for (int m = 0; m < 2; ++m) row[2 * k + m] += Rational(l[i][k] * rr[m][j]);
            rows.push_back(row);
        }
    return rows;
}

inline std::vector<Rational> branch_samples(int sign, std::size_t n) {
    std::vector<Rational> out{Rational(1, 2), Rational(2), Rational(3)};
    for (Int k = 1; out.size() < n; ++k) out.push_back(Rational(k, 7) + Rational(1, k + 1));
    for (auto& x : out) x *= sign;
    return out;
}

}  // namespace detail

inline SolutionFamily solve_j(const ZetaBCase& cs, std::size_t samples_per_branch = 100) {
    if (cs.zeta != zeta::diag && cs.zeta != zeta::swap) throw Error("solve_j: zeta not in normal form");
    if (!relation_holds(cs.zeta, cs.B, cs.relation)) throw Error("solve_j: incompatible case");
    SolutionFamily fam;
    fam.zeta = cs.zeta;
    fam.B = cs.B;

    // zeta J zeta + J = 0 and B J - J B = 0
    auto rows = detail::sandwich_rows(cs.zeta, cs.zeta);
    auto id = detail::sandwich_rows(IntMat2::identity(), IntMat2::identity());
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) rows[i][k] += id[i][k];
    auto bl = detail::sandwich_rows(cs.B, IntMat2::identity());
    auto br = detail::sandwich_rows(IntMat2::identity(), cs.B);
    for (int i = 0; i < 4; ++i) {
        std::array<Rational, 4> row{};
        for (int k = 0; k < 4; ++k) row[k] = bl[i][k] - br[i][k];
        rows.push_back(row);
    }
    auto basis = detail::nullspace4(rows);

    if (basis.size() == 2) {
        fam.kind = FamilyKind::OneParamTwoBranches;
        if (cs.zeta == zeta::diag) {
            fam.parametrization = "J = [[0,-d],[1/d,0]], d != 0";
            fam.branch_rule = "branch +: d > 0; branch -: d < 0";
            fam.at = [](Rational d) { return RatMat2{0, -d, Rational(1) / d, 0}; };
            fam.branch_of = [](const RatMat2& J) { return -J.b > Rational(0) ? 1 : -1; };
        } else {
            fam.parametrization = "J = [[a,b],[-b,-a]], a = (c - 1/c)/2, b = (c + 1/c)/2, c != 0";
            fam.branch_rule = "branch +: b > 0 (c > 0); branch -: b < 0 (c < 0)";
            fam.at = [](Rational c) {
                Rational a = (c - Rational(1) / c) / 2, b = (c + Rational(1) / c) / 2;
                return RatMat2{a, b, -b, -a};
            };
            fam.branch_of = [](const RatMat2& J) { return J.b > Rational(0) ? 1 : -1; };
        }
        fam.samples = {detail::branch_samples(1, samples_per_branch), detail::branch_samples(-1, samples_per_branch)};
        return fam;
    }
    if (basis.size() == 1) {
        // J = t M with M integral and primitive; J^2 = -I needs M^2 = -m I, m > 0
        auto v = basis[0];
        Int den = 1;
        for (auto& x : v) den = std::lcm(den, x.denominator());
        Int e[4], g = 0;
        for (int k = 0; k < 4; ++k) {
            e[k] = (v[k] * den).numerator();
            g = std::gcd(g, std::abs(e[k]));
        }
        IntMat2 M{e[0] / g, e[1] / g, e[2] / g, e[3] / g};
        IntMat2 M2 = M * M;
        if (M2.b != 0 || M2.c != 0 || M2.a != M2.d || M2.a >= 0) {
            fam.kind = FamilyKind::Empty;
            return fam;
        }
        Int m = -M2.a;
        fam.kind = FamilyKind::TwoIsolatedPoints;
        // t = 1/sqrt(m) = sqrt(m)/m
        fam.point = SurdMat2{{Rational(M.a, m), Rational(M.b, m), Rational(M.c, m), Rational(M.d, m)}, m};
        if (m == 1) fam.point->radicand = 1;
        fam.parametrization = "J = +-" + to_string(*fam.point);
        fam.branch_rule = "point +: J0; point -: -J0";
        return fam;
    }
    fam.kind = FamilyKind::Empty;
    return fam;
}

struct FamilyCheck {
    bool ok = true;
    std::size_t samples = 0;
    double max_residual = 0;
    bool exact = true;           // every equation held in exact arithmetic
    bool negation_swaps = true;  // J -> -J exchanges the two branches / points
    std::vector<std::string> failures;
};

inline FamilyCheck verify_family(const SolutionFamily& fam, const ZetaBCase& cs, std::size_t n_samples = 100,
                                 double tol = 1e-12) {
    FamilyCheck out;
    const RatMat2 Z = to_rat(cs.zeta), B = to_rat(cs.B), minus_id{-1, 0, 0, -1};
    auto fail = [&](std::string s) {
        out.ok = false;
        out.failures.push_back(std::move(s));
    };
    auto check_exact = [&](const RatMat2& J) {
        ++out.samples;
        if (J * J != minus_id || Z * J * Z != -J || B * J != J * B) {
            out.exact = false;
            fail("equations fail at J = " + to_string(J));
        }
    };
    if (fam.kind == FamilyKind::OneParamTwoBranches) {
        for (int br = 0; br < 2; ++br) {
            const auto& ps = fam.samples[br];
            if (ps.size() < n_samples) fail("fewer samples than requested");
            for (std::size_t i = 0; i < std::min(n_samples, ps.size()); ++i) {
                RatMat2 J = fam.at(ps[i]);
                check_exact(J);
                int expect = br == 0 ? 1 : -1;
                if (fam.branch_of(J) != expect) fail("sample on wrong branch");
                if (fam.branch_of(-J) != -expect) out.negation_swaps = false;
            }
        }
    } else if (fam.kind == FamilyKind::TwoIsolatedPoints) {
        const SurdMat2& P = *fam.point;
        for (const SurdMat2& J : {P, -P}) {
            ++out.samples;
            // with one radicand r: J^2 = r C^2, and the linear equations act on C
            const RatMat2& C = J.coeff;
            RatMat2 sq = C * C;
            Rational r(J.radicand);
            RatMat2 jj{sq.a * r, sq.b * r, sq.c * r, sq.d * r};
            if (jj != minus_id || Z * C * Z != -C || B * C != C * B) {
                out.exact = false;
                fail("equations fail at J = " + to_string(J));
            }
            auto v = J.values();
            auto bz = cs.B, zz = cs.zeta;
            double m[4] = {v[0], v[1], v[2], v[3]};
            auto mul = [](const double* x, const double* y, double* o) {
                o[0] = x[0] * y[0] + x[1] * y[2];
                o[1] = x[0] * y[1] + x[1] * y[3];
                o[2] = x[2] * y[0] + x[3] * y[2];
                o[3] = x[2] * y[1] + x[3] * y[3];
            };
            double b[4] = {double(bz.a), double(bz.b), double(bz.c), double(bz.d)};
            double zd[4] = {double(zz.a), double(zz.b), double(zz.c), double(zz.d)};
            double j2[4], bj[4], jb[4], t[4], zjz[4];
            mul(m, m, j2);
            mul(b, m, bj);
            mul(m, b, jb);
            mul(zd, m, t);
            mul(t, zd, zjz);
            const double target[4] = {-1, 0, 0, -1};
            for (int k = 0; k < 4; ++k) {
                out.max_residual = std::max({out.max_residual, std::abs(j2[k] - target[k]),
                                             std::abs(bj[k] - jb[k]), std::abs(zjz[k] + m[k])});
            }
        }
        if (out.max_residual > tol) fail("floating residual above tolerance");
        if (P == -P) out.negation_swaps = false;
    }
    if (!out.negation_swaps) fail("negation does not exchange the branches");
    return out;
}

// the real elliptic curve picture: s = swap, J = [[a,b],[-b,-a]], b^2 - a^2 = 1
inline SolutionFamily elliptic_demo(std::size_t samples_per_branch = 100) {
    ZetaBCase cs{"elliptic", zeta::swap, IntMat2{-1, 0, 0, -1}, Relation::Commute, 2};
    auto fam = solve_j(cs, samples_per_branch);
    fam.note = "the moduli space of the real curve is one branch of the hyperbola b^2 - a^2 = 1; "
               "the other branch is its image under J -> -J";
    return fam;
}

}  // namespace realhyp
