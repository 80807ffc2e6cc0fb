#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ideal.hpp"
#include "lattice.hpp"
#include "module.hpp"

namespace hibi {

enum class Kind { S1, S2, L, B1, B2, G1, G2, G3, G4, G5, G6, G, D };

inline constexpr std::array<Kind, 13> kAllKinds{Kind::S1, Kind::S2, Kind::L,  Kind::B1, Kind::B2,
                                                Kind::G1, Kind::G2, Kind::G3, Kind::G4, Kind::G5,
                                                Kind::G6, Kind::G,  Kind::D};

constexpr std::string_view to_string(Kind k) {
    constexpr std::array<std::string_view, 13> names{"S1", "S2", "L",  "B1", "B2", "G1", "G2",
                                                     "G3", "G4", "G5", "G6", "G",  "D"};
    return names[static_cast<int>(k)];
}

inline std::optional<Kind> kind_from_string(std::string_view s) {
    for (Kind k : kAllKinds)
        if (to_string(k) == s) return k;
    return std::nullopt;
}

// strip, L, box, other shared-element kinds, diamond
inline std::string_view family(Kind k) {
    switch (k) {
    case Kind::S1:
    case Kind::S2: return "strip";
    case Kind::L: return "L";
    case Kind::B1:
    case Kind::B2: return "box";
    case Kind::D: return "diamond";
    default: return "G";
    }
}

inline char relation(const Lattice& L, int x, int y) {
    if (x == y) return '=';
    if (L.leq(x, y)) return '<';
    if (L.leq(y, x)) return '>';
    return '~';
}

// For the generator pairs (a,b1), (a,b2).
struct RelationProfile {
    bool join_equal = false;
    bool meet_equal = false;
    std::array<char, 5> rel{};  // b1:b2, b1:a v b2, b1:a ^ b2, b2:a v b1, b2:a ^ b1

    bool operator==(const RelationProfile&) const = default;

    std::string str() const {
        std::string s;
        s += join_equal ? 'T' : 'F';
        s += meet_equal ? 'T' : 'F';
        for (char c : rel) s += c;
        return s;
    }
};

inline RelationProfile profile(const Lattice& L, int a, int b1, int b2) {
    RelationProfile p;
    p.join_equal = L.join(a, b1) == L.join(a, b2);
    p.meet_equal = L.meet(a, b1) == L.meet(a, b2);
    p.rel = {relation(L, b1, b2), relation(L, b1, L.join(a, b2)), relation(L, b1, L.meet(a, b2)),
             relation(L, b2, L.join(a, b1)), relation(L, b2, L.meet(a, b1))};
    return p;
}

namespace detail {

inline RelationProfile prof(const char* s) {
    RelationProfile p;
    p.join_equal = s[0] == 'T';
    p.meet_equal = s[1] == 'T';
    for (int k = 0; k < 5; ++k) p.rel[k] = s[2 + k];
    return p;
}

struct ProfileRow {
    const char* code;
    Kind kind;
};

// the consistent profiles of two generators sharing an element, after normalization
inline const std::array<ProfileRow, 12>& profile_table() {
    static const std::array<ProfileRow, 12> t{{{"FF<<~~>", Kind::L},
                                               {"FF~<>~~", Kind::B1},
                                               {"FF~<~~~", Kind::G3},
                                               {"FF~~>~~", Kind::G4},
                                               {"FF~~~<>", Kind::B2},
                                               {"FF~~~<~", Kind::G6},
                                               {"FF~~~~>", Kind::G5},
                                               {"FF~~~~~", Kind::G},
                                               {"FT<<>~>", Kind::S1},
                                               {"FT~~>~>", Kind::G1},
                                               {"TF<<~<>", Kind::S2},
                                               {"TF~<~<~", Kind::G2}}};
    return t;
}

// profile the typed formula expects of its witness triple
inline RelationProfile witness_profile(Kind k) {
    switch (k) {
    case Kind::S2: return prof("FT<<>~>");
    case Kind::B2: return prof("FF~<>~~");
    default:
        for (auto& row : profile_table())
            if (row.kind == k) return prof(row.code);
    }
    throw Error(ErrorKind::BadInput, "no witness profile for kind D");
}

struct FormulaTerm {
    int sign;
    int var;
    int x;
    int y;
};

inline std::vector<FormulaTerm> formula(const Lattice& L, Kind k, int a, int b1, int b2) {
    auto J = [&](int x, int y) { return L.join(x, y); };
    auto M = [&](int x, int y) { return L.meet(x, y); };
    switch (k) {
    case Kind::S1: return {{-1, b2, a, b1}, {1, b1, a, b2}, {-1, M(a, b1), b2, J(a, b1)}};
    case Kind::S2: return {{1, J(a, b2), a, b1}, {-1, J(a, b1), a, b2}, {1, a, b2, J(a, b1)}};
    case Kind::L:
        return {{-1, b2, a, b1},
                {1, b1, a, b2},
                {1, J(a, b2), b1, M(a, b2)},
                {-1, M(a, b1), b2, J(a, b1)}};
    case Kind::B1:
        return {{-1, b2, a, b1},
                {1, b1, a, b2},
                {-1, J(a, b1), b2, M(a, b1)},
                {-1, M(a, b2), J(a, b1), J(b1, b2)}};
    case Kind::B2:
        return {{-1, b1, a, b2},
                {1, a, b1, b2},
                {1, J(b1, b2), a, M(b1, b2)},
                {1, M(a, b2), J(a, b1), J(b1, b2)}};
    case Kind::G1:
        return {{1, b2, a, b1},
                {-1, b1, a, b2},
                {-1, M(a, b1), b1, J(a, b2)},
                {1, M(a, b1), b2, J(a, b1)}};
    case Kind::G2:
        return {{1, b2, a, b1},
                {-1, b1, a, b2},
                {-1, J(a, b1), b1, M(a, b2)},
                {1, J(a, b1), b2, M(a, b1)}};
    case Kind::G3:
        return {{1, b2, a, b1},
                {-1, b1, a, b2},
                {-1, J(a, b2), b1, M(a, b2)},
                {1, J(a, b1), b2, M(a, b1)},
                {1, M(M(a, b1), b2), J(a, b1), J(b1, b2)}};
    case Kind::G4:
        return {{1, b2, a, b1},
                {-1, b1, a, b2},
                {1, M(a, b1), b2, J(a, b1)},
                {-1, M(a, b2), b1, J(a, b2)},
                {1, J(J(a, b1), b2), M(a, b1), M(b1, b2)}};
    case Kind::G5:
        return {{1, b2, a, b1},
                {-1, b1, a, b2},
                {-1, J(a, b2), b1, M(a, b2)},
                {1, M(a, b1), b2, J(a, b1)},
                {-1, M(a, b1), J(b1, M(a, b2)), J(a, b2)}};
    case Kind::G6:
        return {{1, b2, a, b1},
                {-1, b1, a, b2},
                {-1, J(a, b2), b1, M(a, b2)},
                {1, J(a, b1), b2, M(a, b1)},
                {-1, M(M(a, b1), b2), J(a, b2), J(b1, b2)}};
    case Kind::G:
        return {{1, b2, a, b1},
                {-1, b1, a, b2},
                {-1, J(a, b2), b1, M(a, b2)},
                {1, J(a, b1), b2, M(a, b1)},
                {-1, M(M(a, b1), b2), J(b1, M(a, b2)), J(a, b2)},
                {1, M(M(a, b1), b2), J(b2, M(a, b1)), J(a, b1)}};
    case Kind::D: break;
    }
    throw Error(ErrorKind::BadInput, "kind D has no three-element formula");
}

inline std::string name_of_slot(int k) {
    static const char* n[] = {"b1 vs b2", "b1 vs a v b2", "b1 vs a ^ b2", "b2 vs a v b1",
                              "b2 vs a ^ b1"};
    return n[k];
}

}  // namespace detail

inline std::vector<Kind> kinds_with_profiles() {
    std::vector<Kind> out;
    for (auto& r : detail::profile_table()) out.push_back(r.kind);
    return out;
}

struct Classification {
    Kind kind = Kind::D;
    std::vector<int> witness;
    std::array<int, 3> triple{};  // normalized (a, b1, b2); unused for D
    RelationProfile profile;
};

inline Classification classify_pair(const Lattice& L, Pair p1, Pair p2) {
    if (p1 == p2) throw Error(ErrorKind::BadInput, "classify_pair needs two distinct pairs");
    int shared = -1;
    for (int x : {p1.a, p1.b})
        if (x == p2.a || x == p2.b) shared = x;
    Classification c;
    if (shared < 0) {
        c.kind = Kind::D;
        c.witness = {p1.a, p1.b, p2.a, p2.b};
        return c;
    }
    int a = shared;
    int b1 = p1.a == a ? p1.b : p1.a;
    int b2 = p2.a == a ? p2.b : p2.a;
    if (L.comparable(b1, b2) ? L.leq(b2, b1) : b2 < b1) std::swap(b1, b2);
    c.triple = {a, b1, b2};
    c.profile = profile(L, a, b1, b2);
    for (auto& row : detail::profile_table())
        if (detail::prof(row.code) == c.profile) {
            c.kind = row.kind;
            if (row.kind == Kind::B2)
                c.witness = {b1, b2, a};
            else if (row.kind == Kind::S2)
                c.witness = {b1, L.meet(a, b2), a};
            else
                c.witness = {a, b1, b2};
            return c;
        }
    throw Error(ErrorKind::InconsistentProfile,
                "pairs (" + L.label(p1.a) + "," + L.label(p1.b) + ") and (" + L.label(p2.a) + "," +
                    L.label(p2.b) + ") have profile " + c.profile.str());
}

struct TypedSyzygy {
    Kind kind = Kind::D;
    ModuleElement element;
    std::vector<int> witness;
};

inline ModuleElement diamond_element(const HibiIdeal& I, Pair p1, Pair p2) {
    int g1 = I.index_of(p1.a, p1.b), g2 = I.index_of(p2.a, p2.b);
    if (g1 < 0 || g2 < 0) throw Error(ErrorKind::ConditionViolated, "diamond pair is comparable");
    std::vector<ModuleTerm> ts;
    for (auto& t : I.polys()[g2].terms) ts.push_back({t.coeff, t.mono, g1});
    for (auto& t : I.polys()[g1].terms) ts.push_back({-t.coeff, t.mono, g2});
    return make_element(I.schreyer(), std::move(ts));
}

inline TypedSyzygy typed_generator(const HibiIdeal& I, Kind kind, const std::vector<int>& w) {
    const Lattice& L = I.lattice();
    TypedSyzygy out;
    out.kind = kind;
    out.witness = w;
    for (int x : w)
        if (x < 0 || x >= L.size()) throw Error(ErrorKind::BadInput, "witness element out of range");
    if (kind == Kind::D) {
        if (w.size() != 4) throw Error(ErrorKind::ConditionViolated, "D needs four elements");
        if (L.comparable(w[0], w[1]) || L.comparable(w[2], w[3]))
            throw Error(ErrorKind::ConditionViolated, "D witness pairs must be incomparable");
        for (int i : {0, 1})
            for (int j : {2, 3})
                if (w[i] == w[j])
                    throw Error(ErrorKind::ConditionViolated, "D witness pairs share an element");
        out.element = diamond_element(I, {w[0], w[1]}, {w[2], w[3]});
        return out;
    }
    if (w.size() != 3) throw Error(ErrorKind::ConditionViolated, "witness needs three elements");
    const int a = w[0], b1 = w[1], b2 = w[2];
    if (L.comparable(a, b1)) throw Error(ErrorKind::ConditionViolated, "a and b1 are comparable");
    if (L.comparable(a, b2)) throw Error(ErrorKind::ConditionViolated, "a and b2 are comparable");
    RelationProfile want = detail::witness_profile(kind), got = profile(L, a, b1, b2);
    if (want.join_equal != got.join_equal)
        throw Error(ErrorKind::ConditionViolated,
                    std::string("a v b1 = a v b2 should be ") + (want.join_equal ? "true" : "false"));
    if (want.meet_equal != got.meet_equal)
        throw Error(ErrorKind::ConditionViolated,
                    std::string("a ^ b1 = a ^ b2 should be ") + (want.meet_equal ? "true" : "false"));
    for (int k = 0; k < 5; ++k)
        if (want.rel[k] != got.rel[k])
            throw Error(ErrorKind::ConditionViolated, detail::name_of_slot(k) + ": expected '" +
                                                          want.rel[k] + "', found '" + got.rel[k] +
                                                          "'");
    std::vector<ModuleTerm> ts;
    for (auto t : detail::formula(L, kind, a, b1, b2)) {
        int g = I.index_of(t.x, t.y);
        if (g < 0) continue;
        ts.push_back({t.sign, Monomial::var(t.var), g});
    }
    out.element = make_element(I.schreyer(), std::move(ts));
    return out;
}

// One typed element per unordered pair of generators, in generator order.
inline std::vector<TypedSyzygy> typed_generators(const HibiIdeal& I) {
    std::vector<TypedSyzygy> out;
    const auto& rel = I.relations();
    for (std::size_t i = 0; i < rel.size(); ++i)
        for (std::size_t j = i + 1; j < rel.size(); ++j) {
            Classification c = classify_pair(I.lattice(), rel[i].pair, rel[j].pair);
            out.push_back(typed_generator(I, c.kind, c.witness));
        }
    return out;
}

inline ModuleElement schreyer_pair(const HibiIdeal& I, int i, int j) {
    if (i == j) throw Error(ErrorKind::BadInput, "schreyer_pair needs distinct generators");
    const auto& R = I.ring();
    const auto& fs = I.polys();
    const Polynomial& fi = fs[i];
    const Polynomial& fj = fs[j];
    Monomial gam = lcm(fi.lead().mono, fj.lead().mono);
    Monomial ci = fi.lead().mono.cofactor(gam), cj = fj.lead().mono.cofactor(gam);
    Division d = R.divide(R.s_polynomial(fi, fj), fs);
    std::vector<ModuleTerm> ts{{1 / fi.lead().coeff, ci, i}, {-1 / fj.lead().coeff, cj, j}};
    for (std::size_t k = 0; k < d.quotients.size(); ++k)
        for (auto& t : d.quotients[k].terms) ts.push_back({-t.coeff, t.mono, static_cast<int>(k)});
    return make_element(I.schreyer(), std::move(ts));
}

inline std::vector<ModuleElement> schreyer_pairs(const HibiIdeal& I) {
    std::vector<ModuleElement> out;
    for (int i = 0; i < static_cast<int>(I.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(I.size()); ++j) out.push_back(schreyer_pair(I, i, j));
    return out;
}

inline bool diamond_comparable(const Lattice& L, Pair d1, Pair d2) {
    return L.leq(d1.a, d2.a) && L.leq(d1.a, d2.b) && L.leq(d1.b, d2.a) && L.leq(d1.b, d2.b);
}

namespace detail {

// A diamond (x,y) with x between the two diamonds, x ^ y an atom of the lower one and x v y a
// coatom of the upper one.
inline bool has_l2_bridge(const Lattice& L, Pair lo, Pair hi) {
    const int from = L.join(lo.a, lo.b), to = L.meet(hi.a, hi.b);
    if (!L.leq(from, to)) return false;
    for (int x = 0; x < L.size(); ++x) {
        if (!L.leq(from, x) || !L.leq(x, to)) continue;
        for (int y = 0; y < L.size(); ++y) {
            if (L.comparable(x, y)) continue;
            int m = L.meet(x, y), j = L.join(x, y);
            if ((m == lo.a || m == lo.b) && (j == hi.a || j == hi.b)) return true;
        }
    }
    return false;
}

}  // namespace detail

inline bool diamond_reducible(const Lattice& L, Pair d1, Pair d2) {
    if (diamond_comparable(L, d1, d2)) return detail::has_l2_bridge(L, d1, d2);
    if (diamond_comparable(L, d2, d1)) return detail::has_l2_bridge(L, d2, d1);
    return true;
}

}  // namespace hibi
