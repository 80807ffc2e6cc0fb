#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "field.hpp"
#include "ideal.hpp"
#include "lattice.hpp"
#include "oracle.hpp"
#include "syzygy.hpp"

namespace hibi {

inline long long binom(long long n, long long k) {
    if (k < 0 || n < k) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace detail {
inline void require_nonneg(long long m, long long n = 0) {
    if (m < 0 || n < 0) throw Error(ErrorKind::BadInput, "grid dimensions must be non-negative");
}
}  // namespace detail

// Side-sharing diamond pairs of the 1 x n grid; 0 for n = 0.
inline long long strip_1d(long long n) {
    detail::require_nonneg(n);
    return 2 * binom(n + 1, 3);
}

inline long long strip_grid(long long m, long long n) {
    detail::require_nonneg(m, n);
    if (m == 0 || n == 0) return 0;
    return binom(m + 1, 2) * strip_1d(n) + binom(n + 1, 2) * strip_1d(m);
}

inline long long l_2n(long long n) {
    detail::require_nonneg(n);
    return n * (n * n - 1) / 3;
}

inline long long l_grid(long long m, long long n) {
    detail::require_nonneg(m, n);
    return l_2n(m) * l_2n(n) / 2;
}

inline long long box_grid(long long m, long long n) { return l_grid(m, n); }

struct GridBettiBreakdown {
    long long m = 0, n = 0;
    long long strip = 0, l = 0, box = 0, total = 0;
};

inline GridBettiBreakdown grid_betti(long long m, long long n) {
    GridBettiBreakdown b{m, n, strip_grid(m, n), l_grid(m, n), box_grid(m, n), 0};
    b.total = b.strip + b.l + b.box;
    return b;
}

// side lengths of the interval [x ^ y, x v y] seen from x and y
inline std::pair<int, int> dims(const Lattice& L, int x, int y) {
    int h = L.height(L.meet(x, y));
    return {L.height(x) - h, L.height(y) - h};
}

inline long long n_pair_strip(const Lattice& L, int ti, int tj) {
    auto jm = jm_set(L);
    auto in = [&](int x) { return std::binary_search(jm.begin(), jm.end(), x); };
    if (!in(ti) || !in(tj) || L.comparable(ti, tj))
        throw Error(ErrorKind::NotJMPair,
                    L.label(ti) + ", " + L.label(tj) + " is not an incomparable JM pair");
    auto [r, s] = dims(L, ti, tj);
    return strip_grid(r, s);
}

struct JMTriple {
    int i, j, k;
};

// theta_i ~ theta_j ~ theta_k incomparable in turn, theta_i < theta_k
inline std::vector<JMTriple> jm_triples(const Lattice& L) {
    auto jm = jm_set(L);
    std::vector<JMTriple> out;
    for (int i : jm)
        for (int j : jm)
            for (int k : jm) {
                if (i == j || j == k || i == k) continue;
                if (L.comparable(i, j) || L.comparable(j, k) || !L.less(i, k)) continue;
                out.push_back({i, j, k});
            }
    return out;
}

namespace detail {
inline void require_planar(const Lattice& L) {
    if (!is_planar(L))
        throw Error(ErrorKind::NotPlanar, "join-irreducibles contain a 3-element antichain");
}

template <class Count>
long long paired_count(const Lattice& L, Count c) {
    long long s = 0;
    for (Pair p : jm_pairs(L)) {
        auto [r, t] = dims(L, p.a, p.b);
        s += c(r, t);
    }
    for (auto [i, j, k] : jm_triples(L)) {
        auto [r, t] = dims(L, L.join(i, L.meet(j, k)), j);
        s -= c(r, t);
    }
    return s;
}
}  // namespace detail

inline long long n_strip_planar(const Lattice& L) {
    detail::require_planar(L);
    return detail::paired_count(L, [](int r, int s) { return strip_grid(r, s); });
}

inline long long n_box_planar(const Lattice& L) {
    detail::require_planar(L);
    return detail::paired_count(L, [](int r, int s) { return box_grid(r, s); });
}

inline long long n_l_planar(const Lattice& L) {
    detail::require_planar(L);
    long long s = 0;
    for (Pair p : jm_pairs(L)) {
        auto [r, t] = dims(L, p.a, p.b);
        s += l_grid(r, t);
    }
    for (auto [i, j, k] : jm_triples(L)) {
        const int r = L.height(L.join(i, j)) - L.height(j);
        const int t = L.height(j) - L.height(L.meet(j, k));
        s -= l_grid(r, t);
        const long long up = L.height(L.join(j, k)) - L.height(L.join(i, j));
        const long long down = L.height(L.meet(j, k)) - L.height(L.meet(i, j));
        s += up * down * binom(r + 1, 2) * binom(t + 1, 2);
    }
    return s;
}

// Irreducible diamond pairs counted up to the span of degree-3 syzygies times variables.
template <class F = RationalField>
long long n_diamond_planar(const HibiIdeal& I, F field = {}) {
    const Lattice& L = I.lattice();
    detail::require_planar(L);
    std::vector<ModuleElement> linear, irreducible;
    for (auto& t : typed_generators(I)) {
        if (t.kind != Kind::D)
            linear.push_back(std::move(t.element));
        else if (!diamond_reducible(L, {t.witness[0], t.witness[1]}, {t.witness[2], t.witness[3]}))
            irreducible.push_back(std::move(t.element));
    }
    if (irreducible.empty()) return 0;
    GradedSpan<F> span(I, 4, field);
    std::set<FineGrading::Degree> wanted;
    for (auto& e : irreducible) wanted.insert(span.degree_of(e));
    span.restrict_to(std::move(wanted));
    for (auto& e : linear) span.insert_multiples(e);
    long long grew = 0;
    for (auto& e : irreducible) grew += span.insert(e);
    return grew;
}

inline int family_rank(Kind k) {
    auto f = family(k);
    if (f == "strip") return 0;
    if (f == "L") return 1;
    if (f == "box") return 2;
    if (f == "G") return 3;
    return 4;
}

// Greedy minimal generating subset of the typed elements, strip first and diamonds last.
template <class F = RationalField>
std::vector<TypedSyzygy> minimal_typed(const HibiIdeal& I, F field = {}) {
    auto typed = typed_generators(I);
    std::stable_sort(typed.begin(), typed.end(), [](const TypedSyzygy& x, const TypedSyzygy& y) {
        return family_rank(x.kind) < family_rank(y.kind);
    });
    std::vector<TypedSyzygy> kept;
    GradedSpan<F> deg3(I, 3, field);
    std::vector<const TypedSyzygy*> diamonds;
    for (auto& t : typed) {
        if (t.kind == Kind::D)
            diamonds.push_back(&t);
        else if (deg3.insert(t.element))
            kept.push_back(t);
    }
    if (!diamonds.empty()) {
        GradedSpan<F> deg4(I, 4, field);
        std::set<FineGrading::Degree> wanted;
        for (auto* d : diamonds) wanted.insert(deg4.degree_of(d->element));
        deg4.restrict_to(std::move(wanted));
        for (auto& k : kept) deg4.insert_multiples(k.element);
        for (auto* d : diamonds)
            if (deg4.insert(d->element)) kept.push_back(*d);
    }
    return kept;
}

struct PlanarBettiBreakdown {
    long long nS = 0, nL = 0, nB = 0, nD = 0, total = 0;
    std::optional<long long> oracle_total;
};

inline std::string to_string(const PlanarBettiBreakdown& b) {
    std::string s = "strip=" + std::to_string(b.nS) + " L=" + std::to_string(b.nL) +
                    " box=" + std::to_string(b.nB) + " diamond=" + std::to_string(b.nD) +
                    " total=" + std::to_string(b.total);
    if (b.oracle_total) s += " oracle=" + std::to_string(*b.oracle_total);
    return s;
}

template <class F = RationalField>
PlanarBettiBreakdown planar_betti(const HibiIdeal& I, bool check_oracle = false, F field = {}) {
    const Lattice& L = I.lattice();
    detail::require_planar(L);
    PlanarBettiBreakdown b;
    b.nS = n_strip_planar(L);
    b.nL = n_l_planar(L);
    b.nB = n_box_planar(L);
    b.nD = n_diamond_planar(I, field);
    b.total = b.nS + b.nL + b.nB + b.nD;
    if (check_oracle) {
        b.oracle_total = I.size() < 2 ? 0 : betti_total(graded_betti_oracle(I, 4, field));
        if (*b.oracle_total != b.total)
            throw Error(ErrorKind::OracleMismatch, "formula and oracle disagree: " + to_string(b));
    }
    return b;
}

inline int k_of(const Lattice& L) { return static_cast<int>(jm_pairs(L).size()); }

enum class Verdict { Linear, Nonlinear, Conditional };

constexpr std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Linear: return "linear";
    case Verdict::Nonlinear: return "nonlinear";
    case Verdict::Conditional: return "conditional";
    }
    return "?";
}

struct LinearityVerdict {
    int k = 0;
    Verdict verdict = Verdict::Linear;
    bool predicted_linear = true;  // the height test's answer when conditional
    int gap_meet = 0, gap_join = 0;  // conditional case only
    std::string reason;
    std::optional<bool> oracle_agrees;
};

inline LinearityVerdict linearity_by_k(const Lattice& L) {
    detail::require_planar(L);
    auto jp = jm_pairs(L);
    LinearityVerdict v;
    v.k = static_cast<int>(jp.size());
    auto set = [&](Verdict x, bool lin, std::string why) {
        v.verdict = x;
        v.predicted_linear = lin;
        v.reason = std::move(why);
    };
    if (v.k == 0) {
        set(Verdict::Linear, true, "k=0: no incomparable JM pair");
    } else if (v.k == 1) {
        set(Verdict::Linear, true, "k=1");
    } else if (v.k >= 3) {
        set(Verdict::Nonlinear, false, "k>=3");
    } else {
        Pair p = jp[0], q = jp[1];
        auto lo_hi = [&](Pair x, Pair y) { return L.leq(L.join(x.a, x.b), L.meet(y.a, y.b)); };
        if (lo_hi(p, q) || lo_hi(q, p)) {
            set(Verdict::Nonlinear, false, "k=2, stacked diamonds");
        } else {
            int mid = -1;
            for (int x : {p.a, p.b})
                if (x == q.a || x == q.b) mid = x;
            if (mid < 0)
                throw Error(ErrorKind::UnrecognizedShape,
                            "k=2 with disjoint, unstacked JM pairs");
            int t1 = p.a == mid ? p.b : p.a;
            int t3 = q.a == mid ? q.b : q.a;
            if (L.leq(t3, t1)) std::swap(t1, t3);
            const int gap_meet = L.height(L.meet(mid, t3)) - L.height(L.meet(t1, mid));
            const int gap_join = L.height(L.join(mid, t3)) - L.height(L.join(t1, mid));
            const bool lin = gap_meet == 1 || gap_join == 1;
            v.gap_meet = gap_meet;
            v.gap_join = gap_join;
            set(Verdict::Conditional, lin,
                "k=2, shared middle irreducible, height gaps " + std::to_string(gap_meet) + "," +
                    std::to_string(gap_join));
        }
    }
    return v;
}

}  // namespace hibi
