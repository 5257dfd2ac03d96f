#pragma once

#include "torus.hpp"

#include <functional>
#include <map>
#include <optional>

namespace realhyp {

struct ProductMap {
    CurveMap e, f;

    ProductMap() = default;
    ProductMap(const CurveMap& on_e, const CurveMap& on_f) : e(on_e), f(on_f) {
        if (e.kind != f.kind) throw Error("product map with mixed holomorphy");
    }
    static ProductMap identity() { return {CurveMap::identity(), CurveMap::identity()}; }
    bool antiholomorphic() const { return e.antiholomorphic(); }
    bool is_identity() const { return e.is_identity() && f.is_identity(); }

    friend bool operator==(const ProductMap&, const ProductMap&) = default;
    friend std::strong_ordering operator<=>(const ProductMap& a, const ProductMap& b) {
        if (auto c = a.e <=> b.e; c != 0) return c;
        return a.f <=> b.f;
    }
};

inline std::ostream& operator<<(std::ostream& os, const ProductMap& m) {
    return os << "(" << m.e << " ; " << m.f << ")";
}

inline ProductMap compose(const ProductMap& a, const ProductMap& b) {
    return {compose(a.e, b.e), compose(a.f, b.f)};
}
inline ProductMap inverse(const ProductMap& a) { return {inverse(a.e), inverse(a.f)}; }
inline ProductMap conjugate(const ProductMap& h, const ProductMap& x) {
    return compose(compose(h, x), inverse(h));
}
inline bool is_involution(const ProductMap& m) { return compose(m, m).is_identity(); }

struct TransformationGroup {
    std::vector<ProductMap> elements;  // sorted
    std::vector<ProductMap> generators;

    std::size_t order() const { return elements.size(); }
    bool contains(const ProductMap& m) const {
        return std::binary_search(elements.begin(), elements.end(), m);
    }
    std::size_t index_of(const ProductMap& m) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), m);
        if (it == elements.end() || !(*it == m)) throw Error("element not in group");
        return static_cast<std::size_t>(it - elements.begin());
    }
};

inline TransformationGroup closure(const std::vector<ProductMap>& gens, std::size_t cap = 64) {
    std::set<ProductMap> seen{ProductMap::identity()};
    std::vector<ProductMap> todo{ProductMap::identity()};
    while (!todo.empty()) {
        ProductMap x = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            ProductMap y = compose(x, g);
            if (seen.insert(y).second) {
                if (seen.size() > cap) throw Error("cap exceeded");
                todo.push_back(y);
            }
        }
    }
    return {{seen.begin(), seen.end()}, gens};
}

inline TransformationGroup holomorphic_subgroup(const TransformationGroup& full) {
    if (full.elements.empty()) throw Error("holomorphic_subgroup: empty group");
    TransformationGroup g;
    for (const auto& m : full.elements)
        if (!m.antiholomorphic()) g.elements.push_back(m);
    std::size_t idx = full.order() / g.order();
    if (idx * g.order() != full.order() || idx > 2) throw Error("holomorphic_subgroup: index > 2");
    g.generators = g.elements;
    return g;
}

// Cayley-table view of a finite group
struct AbstractGroup {
    std::size_t n = 0;
    std::size_t identity = 0;
    std::vector<std::vector<std::size_t>> mul;

    std::size_t op(std::size_t a, std::size_t b) const { return mul[a][b]; }
    std::size_t inv(std::size_t a) const {
        for (std::size_t b = 0; b < n; ++b)
            if (mul[a][b] == identity) return b;
        throw Error("no inverse");
    }
    std::size_t pow(std::size_t a, Int k) const {
        if (k < 0) return pow(inv(a), -k);
        std::size_t r = identity;
        for (Int i = 0; i < k; ++i) r = op(r, a);
        return r;
    }
    int order_of(std::size_t a) const {
        std::size_t x = a;
        int k = 1;
        while (x != identity) {
            x = op(x, a);
            ++k;
        }
        return k;
    }
    bool abelian() const {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (mul[a][b] != mul[b][a]) return false;
        return true;
    }
    std::vector<std::size_t> generated(const std::vector<std::size_t>& gens) const {
        std::vector<char> in(n, 0);
        std::vector<std::size_t> out{identity}, todo{identity};
        in[identity] = 1;
        while (!todo.empty()) {
            std::size_t x = todo.back();
            todo.pop_back();
            for (auto g : gens) {
                std::size_t y = op(x, g);
                if (!in[y]) {
                    in[y] = 1;
                    out.push_back(y);
                    todo.push_back(y);
                }
            }
        }
        return out;
    }
};

inline AbstractGroup abstract(const TransformationGroup& g) {
    AbstractGroup a;
    a.n = g.order();
    a.identity = g.index_of(ProductMap::identity());
    a.mul.assign(a.n, std::vector<std::size_t>(a.n));
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) a.mul[i][j] = g.index_of(compose(g.elements[i], g.elements[j]));
    return a;
}

// invariant factors (d1 | d2 | ...) of a finite abelian group
inline std::vector<Int> invariant_factors(const AbstractGroup& a) {
    if (!a.abelian()) throw Error("invariant_factors: group is not abelian");
    std::vector<Int> out;
    std::vector<std::size_t> sub{a.identity};
    std::vector<std::size_t> gens;
    while (sub.size() < a.n) {
        std::vector<char> in(a.n, 0);
        for (auto s : sub) in[s] = 1;
        // element of maximal order in the quotient
        std::size_t best = a.identity;
        Int best_ord = 1;
        for (std::size_t x = 0; x < a.n; ++x) {
            Int k = 1;
            std::size_t y = x;
            while (!in[y]) {
                y = a.op(y, x);
                ++k;
            }
            if (k > best_ord) {
                best_ord = k;
                best = x;
            }
        }
        out.push_back(best_ord);
        gens.push_back(best);
        sub = a.generated(gens);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

enum class NamedGroup { Z2, Z4, Z6, Z2xZ2, Z4xZ2, Z2cube, Z3, Z3xZ3, D4, D6, S3, S3xZ3, Z2xD4, G1, Unknown };

inline constexpr std::array<NamedGroup, 14> all_named_groups{
    NamedGroup::Z2,    NamedGroup::Z4, NamedGroup::Z6, NamedGroup::Z2xZ2, NamedGroup::Z4xZ2,
    NamedGroup::Z2cube, NamedGroup::Z3, NamedGroup::Z3xZ3, NamedGroup::D4, NamedGroup::D6,
    NamedGroup::S3,    NamedGroup::S3xZ3, NamedGroup::Z2xD4, NamedGroup::G1};

inline std::string to_string(NamedGroup g) {
    switch (g) {
        case NamedGroup::Z2: return "Z2";
        case NamedGroup::Z4: return "Z4";
        case NamedGroup::Z6: return "Z6";
        case NamedGroup::Z2xZ2: return "Z2xZ2";
        case NamedGroup::Z4xZ2: return "Z4xZ2";
        case NamedGroup::Z2cube: return "Z2cube";
        case NamedGroup::Z3: return "Z3";
        case NamedGroup::Z3xZ3: return "Z3xZ3";
        case NamedGroup::D4: return "D4";
        case NamedGroup::D6: return "D6";
        case NamedGroup::S3: return "S3";
        case NamedGroup::S3xZ3: return "S3xZ3";
        case NamedGroup::Z2xD4: return "Z2xD4";
        case NamedGroup::G1: return "G1";
        case NamedGroup::Unknown: return "unknown";
    }
    return "unknown";
}

inline NamedGroup named_group_from_string(std::string_view s) {
    for (auto g : all_named_groups)
        if (to_string(g) == s) return g;
    throw Error("unknown group name: " + std::string(s));
}

// a relation is a word in generators; letter k+1 means gen k, -(k+1) its inverse
using Word = std::vector<int>;

struct Presentation {
    NamedGroup name;
    std::size_t order;
    int ngens;
    std::vector<Word> relators;
};

inline std::vector<Presentation> nonabelian_presentations() {
    auto dihedral = [](NamedGroup name, int n) {
        // <r, s | r^n, s^2, (s r)^2>
        return Presentation{name, std::size_t(2 * n), 2, {Word(n, 1), {2, 2}, {2, 1, 2, 1}}};
    };
    Presentation s3z3{NamedGroup::S3xZ3, 18, 3, {{1, 1, 1}, {2, 2}, {2, 1, 2, 1}, {3, 3, 3}, {3, 1, -3, -1}, {3, 2, -3, -2}}};
    Presentation z2d4{NamedGroup::Z2xD4, 16, 3, {{1, 1, 1, 1}, {2, 2}, {2, 1, 2, 1}, {3, 3}, {3, 1, -3, -1}, {3, 2, -3, -2}}};
    // sigma = 1, g = 2, t = 3; sigma g sigma^-1 = g^-1 t
    Presentation g1{NamedGroup::G1, 16, 3,
                    {{1, 1}, {2, 2, 2, 2}, {3, 3}, {3, 1, -3, -1}, {3, 2, -3, -2}, {1, 2, -1, -3, 2}}};
    return {dihedral(NamedGroup::S3, 3), dihedral(NamedGroup::D4, 4), dihedral(NamedGroup::D6, 6), s3z3, z2d4, g1};
}

inline std::size_t eval_word(const AbstractGroup& a, const Word& w, const std::vector<std::size_t>& imgs) {
    std::size_t r = a.identity;
    for (int l : w) r = a.op(r, l > 0 ? imgs[l - 1] : a.inv(imgs[-l - 1]));
    return r;
}

// generator images satisfying the presentation and generating the group
inline std::optional<std::vector<std::size_t>> find_presentation_map(const AbstractGroup& a, const Presentation& p) {
    if (a.n != p.order) return std::nullopt;
    std::vector<std::size_t> imgs(p.ngens, 0);
    std::function<bool(int)> rec = [&](int k) -> bool {
        if (k == p.ngens) {
            for (const auto& r : p.relators)
                if (eval_word(a, r, imgs) != a.identity) return false;
            return a.generated(imgs).size() == a.n;
        }
        for (std::size_t x = 0; x < a.n; ++x) {
            imgs[k] = x;
            if (rec(k + 1)) return true;
        }
        return false;
    };
    if (rec(0)) return imgs;
    return std::nullopt;
}

inline NamedGroup classify_abstract(const AbstractGroup& a) {
    if (a.abelian()) {
        auto f = invariant_factors(a);
        using V = std::vector<Int>;
        if (f == V{2}) return NamedGroup::Z2;
        if (f == V{4}) return NamedGroup::Z4;
        if (f == V{6}) return NamedGroup::Z6;
        if (f == V{3}) return NamedGroup::Z3;
        if (f == V{2, 2}) return NamedGroup::Z2xZ2;
        if (f == V{2, 4}) return NamedGroup::Z4xZ2;
        if (f == V{3, 3}) return NamedGroup::Z3xZ3;
        if (f == V{2, 2, 2}) return NamedGroup::Z2cube;
        return NamedGroup::Unknown;
    }
    for (const auto& p : nonabelian_presentations())
        if (find_presentation_map(a, p)) return p.name;
    return NamedGroup::Unknown;
}

inline NamedGroup iso_classify(const TransformationGroup& g) {
    NamedGroup n = classify_abstract(abstract(g));
    if (n == NamedGroup::Unknown) throw Error("unrecognized group");
    return n;
}

inline std::optional<NamedGroup> try_iso_classify(const TransformationGroup& g) {
    NamedGroup n = classify_abstract(abstract(g));
    if (n == NamedGroup::Unknown) return std::nullopt;
    return n;
}

// H^2(Z/2, G) = ker(s - 1) / (1 + s)G for G = sum Z/n_i, s given on coordinates
inline std::vector<Int> h2_z2(const std::vector<Int>& factors, const std::vector<std::vector<Int>>& action) {
    std::size_t k = factors.size();
    if (action.size() != k) throw Error("h2_z2: action has wrong size");
    std::vector<std::vector<Int>> elems{{}};
    for (Int n : factors) {
        std::vector<std::vector<Int>> next;
        for (auto& e : elems)
            for (Int v = 0; v < n; ++v) {
                auto x = e;
                x.push_back(v);
                next.push_back(x);
            }
        elems = next;
    }
    auto red = [&](std::vector<Int> x) {
        for (std::size_t i = 0; i < k; ++i) x[i] = ((x[i] % factors[i]) + factors[i]) % factors[i];
        return x;
    };
    auto act = [&](const std::vector<Int>& x) {
        std::vector<Int> y(k, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) y[i] += action[i][j] * x[j];
        return red(y);
    };
    auto add = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
        std::vector<Int> z(k);
        for (std::size_t i = 0; i < k; ++i) z[i] = x[i] + y[i];
        return red(z);
    };
    for (auto& x : elems)
        if (act(act(x)) != x) throw Error("h2_z2: action is not an involution");

    std::vector<std::vector<Int>> ker, img;
    for (auto& x : elems) {
        if (act(x) == x) ker.push_back(x);
        img.push_back(add(x, act(x)));
    }
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());

    // quotient ker / img as an abstract abelian group on coset representatives
    std::map<std::vector<Int>, std::size_t> coset_of;
    std::vector<std::vector<Int>> reps;
    for (auto& x : ker) {
        if (coset_of.count(x)) continue;
        std::size_t id = reps.size();
        reps.push_back(x);
        for (auto& y : img) coset_of[add(x, y)] = id;
    }
    AbstractGroup q;
    q.n = reps.size();
    q.identity = coset_of.at(std::vector<Int>(k, 0));
    q.mul.assign(q.n, std::vector<std::size_t>(q.n));
    for (std::size_t i = 0; i < q.n; ++i)
        for (std::size_t j = 0; j < q.n; ++j) q.mul[i][j] = coset_of.at(add(reps[i], reps[j]));
    return invariant_factors(q);
}

struct Diagnostics {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    void fail(const std::string& what) { failures.push_back(what); }
    void merge(const Diagnostics& o) {
        for (auto& f : o.failures) failures.push_back(f);
    }
};

struct ExtendedBdFGroup {
    TransformationGroup full;
    TransformationGroup holo;
    bool split = false;
    NamedGroup name_full = NamedGroup::Unknown;
    NamedGroup name_holo = NamedGroup::Unknown;
};

inline bool is_split(const ExtendedBdFGroup& ext) {
    for (const auto& m : ext.full.elements)
        if (m.antiholomorphic() && is_involution(m)) return true;
    return false;
}

inline ExtendedBdFGroup make_extended(const std::vector<ProductMap>& holo_gens, const ProductMap& sigma,
                                      std::size_t cap = 64) {
    ExtendedBdFGroup ext;
    auto gens = holo_gens;
    gens.push_back(sigma);
    ext.full = closure(gens, cap);
    ext.holo = holomorphic_subgroup(ext.full);
    ext.holo.generators = holo_gens;
    ext.split = is_split(ext);
    ext.name_full = classify_abstract(abstract(ext.full));
    ext.name_holo = classify_abstract(abstract(ext.holo));
    return ext;
}

struct ActionCase {
    NamedGroup holo, full;
    bool split;
};

// the admissible (G, G^, split) triples
inline const std::vector<ActionCase>& action_cases() {
    using N = NamedGroup;
    static const std::vector<ActionCase> cases{
        {N::Z2, N::Z2xZ2, true},    {N::Z2xZ2, N::Z2cube, true}, {N::Z2xZ2, N::Z4xZ2, false},
        {N::Z2xZ2, N::D4, true},    {N::Z4, N::D4, true},        {N::Z4xZ2, N::Z2xD4, true},
        {N::Z4xZ2, N::G1, true},    {N::Z3, N::S3, true},        {N::Z3xZ3, N::S3xZ3, true},
        {N::Z6, N::D6, true}};
    return cases;
}

inline bool matches_action_case(NamedGroup holo, NamedGroup full, bool split) {
    for (auto& c : action_cases())
        if (c.holo == holo && c.full == full && c.split == split) return true;
    return false;
}

inline Diagnostics validate_extended(const ExtendedBdFGroup& ext) {
    Diagnostics d;
    auto normal = [&] {
        for (const auto& x : ext.full.elements)
            for (const auto& h : ext.holo.elements)
                if (!ext.holo.contains(conjugate(x, h))) return false;
        return true;
    };
    if (!normal()) d.fail("normality");
    for (const auto& x : ext.full.elements) {
        if (!x.antiholomorphic()) continue;
        if (!square_is_translation(x.e).is_translation || !square_is_translation(x.f).is_translation) {
            d.fail("antiholomorphic square is not a translation");
            break;
        }
    }
    if (ext.full.order() != 2 * ext.holo.order()) d.fail("index");
    if (ext.name_full == NamedGroup::Unknown || ext.name_holo == NamedGroup::Unknown)
        d.fail("unrecognized group");
    else if (!matches_action_case(ext.name_holo, ext.name_full, ext.split))
        d.fail("no matching action case for (" + to_string(ext.name_holo) + ", " + to_string(ext.name_full) +
               (ext.split ? ", split)" : ", non-split)"));
    return d;
}

}  // namespace realhyp
