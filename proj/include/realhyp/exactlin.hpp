#pragma once

#include <boost/rational.hpp>

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace realhyp {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational floor_frac(const Rational& r) {
    // r - floor(r), always in [0,1)
    Int q = r.numerator() / r.denominator();
    if (r.numerator() < 0 && r.numerator() % r.denominator() != 0) --q;
    return r - Rational(q);
}

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator() << '/' << r.denominator();
    return os.str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw Error("bad rational: " + s);
    }
}

inline std::strong_ordering cmp(const Rational& a, const Rational& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

struct RatVec2 {
    Rational x{0}, y{0};

    friend bool operator==(const RatVec2&, const RatVec2&) = default;
    friend std::strong_ordering operator<=>(const RatVec2& a, const RatVec2& b) {
        if (auto c = cmp(a.x, b.x); c != 0) return c;
        return cmp(a.y, b.y);
    }
    RatVec2 operator+(const RatVec2& o) const { return {x + o.x, y + o.y}; }
    RatVec2 operator-(const RatVec2& o) const { return {x - o.x, y - o.y}; }
    RatVec2 operator-() const { return {-x, -y}; }
    RatVec2 operator*(const Rational& s) const { return {x * s, y * s}; }
    bool is_zero() const { return x.numerator() == 0 && y.numerator() == 0; }
};

inline RatVec2 vec(Int x, Int y) { return {Rational(x), Rational(y)}; }
inline RatVec2 vec(Rational x, Rational y) { return {x, y}; }

// canonical representative in [0,1)^2
inline RatVec2 mod1(const RatVec2& v) { return {floor_frac(v.x), floor_frac(v.y)}; }

inline bool is_integral(const RatVec2& v) { return is_integer(v.x) && is_integer(v.y); }

inline std::ostream& operator<<(std::ostream& os, const RatVec2& v) {
    return os << '(' << to_string(v.x) << ", " << to_string(v.y) << ')';
}

struct IntVec2 {
    Int x = 0, y = 0;
    friend auto operator<=>(const IntVec2&, const IntVec2&) = default;
    IntVec2 operator-() const { return {-x, -y}; }
};

struct IntMat2 {
    // row-major [[a, b], [c, d]]
    Int a = 1, b = 0, c = 0, d = 1;

    static IntMat2 identity() { return {1, 0, 0, 1}; }
    static IntMat2 zero() { return {0, 0, 0, 0}; }
    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }

    friend auto operator<=>(const IntMat2&, const IntMat2&) = default;

    IntMat2 operator*(const IntMat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    IntMat2 operator+(const IntMat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    IntMat2 operator-(const IntMat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    IntMat2 operator-() const { return {-a, -b, -c, -d}; }
    RatVec2 operator*(const RatVec2& v) const {
        return {Rational(a) * v.x + Rational(b) * v.y, Rational(c) * v.x + Rational(d) * v.y};
    }
    IntVec2 operator*(const IntVec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

    // inverse of a unimodular matrix
    IntMat2 inverse() const {
        Int dt = det();
        if (dt != 1 && dt != -1) throw Error("inverse of non-unimodular matrix");
        return {d * dt, -b * dt, -c * dt, a * dt};
    }
    IntMat2 transpose() const { return {a, c, b, d}; }
};

inline std::ostream& operator<<(std::ostream& os, const IntMat2& m) {
    return os << "[[" << m.a << ',' << m.b << "],[" << m.c << ',' << m.d << "]]";
}

inline std::string to_string(const IntMat2& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

struct SnfDecomposition {
    IntMat2 U, D, V;
};

// U * L * V = D, D = diag(d1, d2), d1 | d2, entries >= 0, zeros last
inline SnfDecomposition smith_normal_form(const IntMat2& L) {
    std::array<std::array<Int, 2>, 2> m{{{L.a, L.b}, {L.c, L.d}}};
    std::array<std::array<Int, 2>, 2> u{{{1, 0}, {0, 1}}};
    std::array<std::array<Int, 2>, 2> v{{{1, 0}, {0, 1}}};

    auto swap_rows = [&] {
        std::swap(m[0], m[1]);
        std::swap(u[0], u[1]);
    };
    auto swap_cols = [&] {
        for (int i = 0; i < 2; ++i) {
            std::swap(m[i][0], m[i][1]);
            std::swap(v[i][0], v[i][1]);
        }
    };
    auto add_row = [&](int dst, int src, Int k) {  // row dst += k * row src
        for (int j = 0; j < 2; ++j) {
            m[dst][j] += k * m[src][j];
            u[dst][j] += k * u[src][j];
        }
    };
    auto add_col = [&](int dst, int src, Int k) {
        for (int i = 0; i < 2; ++i) {
            m[i][dst] += k * m[i][src];
            v[i][dst] += k * v[i][src];
        }
    };

    for (;;) {
        // pivot: smallest nonzero entry moved to (0,0)
        int pi = -1, pj = -1;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (m[i][j] != 0 && (pi < 0 || std::abs(m[i][j]) < std::abs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        if (pi == 1) swap_rows();
        if (pj == 1) swap_cols();
        Int p = m[0][0];
        bool dirty = false;
        if (m[1][0] != 0) {
            add_row(1, 0, -(m[1][0] / p));
            dirty = dirty || m[1][0] != 0;
        }
        if (m[0][1] != 0) {
            add_col(1, 0, -(m[0][1] / p));
            dirty = dirty || m[0][1] != 0;
        }
        if (dirty) continue;
        if (m[1][1] % p != 0) {
            add_row(0, 1, 1);
            continue;
        }
        break;
    }
    for (int i = 0; i < 2; ++i)
        if (m[i][i] < 0) {
            m[i][i] = -m[i][i];
            u[i][0] = -u[i][0];
            u[i][1] = -u[i][1];
        }
    return {{u[0][0], u[0][1], u[1][0], u[1][1]},
            {m[0][0], m[0][1], m[1][0], m[1][1]},
            {v[0][0], v[0][1], v[1][0], v[1][1]}};
}

inline IntVec2 normalize_sign(IntVec2 d) {
    if (d.x < 0 || (d.x == 0 && d.y < 0)) return -d;
    return d;
}

inline IntVec2 primitive_direction(const IntVec2& v) {
    if (v.x == 0 && v.y == 0) throw Error("primitive_direction of zero vector");
    Int g = std::gcd(v.x, v.y);
    return normalize_sign({v.x / g, v.y / g});
}

inline IntVec2 primitive_direction(const RatVec2& v) {
    if (v.is_zero()) throw Error("primitive_direction of zero vector");
    Int l = std::lcm(v.x.denominator(), v.y.denominator());
    return primitive_direction(IntVec2{(v.x * l).numerator(), (v.y * l).numerator()});
}

struct CongruenceSolution {
    bool solvable = false;
    int dimension = 0;
    Int component_count = 0;
    std::vector<RatVec2> base_points;
    std::optional<IntVec2> direction;
};

// { x in (Q/Z)^2 : L x + b in Z^2 }
inline CongruenceSolution solve_affine_congruence(const IntMat2& L, const RatVec2& b) {
    auto [U, D, V] = smith_normal_form(L);
    RatVec2 c = U * b;
    std::array<Int, 2> dd{D.a, D.d};
    std::array<Rational, 2> cc{c.x, c.y};

    CongruenceSolution sol;
    for (int i = 0; i < 2; ++i)
        if (dd[i] == 0 && !is_integer(cc[i])) return sol;
    sol.solvable = true;
    sol.dimension = (dd[0] == 0) + (dd[1] == 0);

    // y_i = (-c_i + k) / d_i for nonzero d_i, free coordinates set to 0
    std::array<std::vector<Rational>, 2> choices;
    for (int i = 0; i < 2; ++i) {
        if (dd[i] == 0) {
            choices[i] = {Rational(0)};
        } else {
            for (Int k = 0; k < dd[i]; ++k) choices[i].push_back(Rational(-cc[i] + k) / dd[i]);
        }
    }
    for (const auto& y0 : choices[0])
        for (const auto& y1 : choices[1]) sol.base_points.push_back(mod1(V * RatVec2{y0, y1}));
    std::sort(sol.base_points.begin(), sol.base_points.end());
    sol.component_count = static_cast<Int>(sol.base_points.size());
    if (sol.dimension == 1) {
        IntVec2 e = dd[0] == 0 ? IntVec2{1, 0} : IntVec2{0, 1};
        sol.direction = primitive_direction(V * e);
    }
    return sol;
}

// least n with M^n = I; nullopt when no n <= 12 works
inline std::optional<int> matrix_order(const IntMat2& M) {
    IntMat2 P = M;
    for (int n = 1; n <= 12; ++n) {
        if (P == IntMat2::identity()) return n;
        P = P * M;
    }
    return std::nullopt;
}

}  // namespace realhyp
