#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace hibi {

struct Pair {
    int a = 0;
    int b = 0;
    auto operator<=>(const Pair&) const = default;
};

namespace detail {

class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : w_((n + 63) / 64, 0) {}
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    Bits& operator|=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    friend Bits operator&(Bits x, const Bits& y) {
        for (std::size_t k = 0; k < x.w_.size(); ++k) x.w_[k] &= y.w_[k];
        return x;
    }
    bool operator==(const Bits&) const = default;
    int count() const {
        int c = 0;
        for (auto v : w_) c += std::popcount(v);
        return c;
    }

private:
    std::vector<std::uint64_t> w_;
};

}  // namespace detail

class Lattice {
public:
    Lattice() = default;

    // covers are (lower, upper) with zero-based indices; redundant transitive edges are tolerated
    static Lattice from_covers(std::vector<std::string> names,
                               const std::vector<std::pair<int, int>>& covers) {
        const int n = static_cast<int>(names.size());
        if (n == 0) throw Error(ErrorKind::EmptyInput, "lattice has no elements");
        std::vector<std::vector<int>> succ(n);
        std::vector<int> indeg(n, 0);
        for (auto [a, b] : covers) {
            if (a < 0 || b < 0 || a >= n || b >= n)
                throw Error(ErrorKind::BadInput, "cover (" + std::to_string(a) + "," +
                                                     std::to_string(b) + ") out of range");
            if (a == b) throw Error(ErrorKind::NotALattice, "self-cover on " + names[a]);
            succ[a].push_back(b);
            ++indeg[b];
        }
        std::vector<int> topo;
        topo.reserve(n);
        for (int v = 0; v < n; ++v)
            if (indeg[v] == 0) topo.push_back(v);
        for (std::size_t h = 0; h < topo.size(); ++h)
            for (int w : succ[topo[h]])
                if (--indeg[w] == 0) topo.push_back(w);
        if (static_cast<int>(topo.size()) != n)
            throw Error(ErrorKind::NotALattice, "cover relation has a cycle");

        std::vector<detail::Bits> up(n, detail::Bits(n));
        for (int h = n - 1; h >= 0; --h) {
            int v = topo[h];
            up[v].set(v);
            for (int w : succ[v]) up[v] |= up[w];
        }
        std::vector<detail::Bits> down(n, detail::Bits(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (up[a].test(b)) down[b].set(a);

        Lattice L;
        L.n_ = n;
        L.labels_ = std::move(names);
        L.leq_.assign(static_cast<std::size_t>(n) * n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) L.leq_[a * n + b] = up[a].test(b);

        std::vector<int> upc(n), downc(n);
        for (int v = 0; v < n; ++v) {
            upc[v] = up[v].count();
            downc[v] = down[v].count();
        }
        L.join_.assign(static_cast<std::size_t>(n) * n, -1);
        L.meet_.assign(static_cast<std::size_t>(n) * n, -1);
        for (int a = 0; a < n; ++a) {
            for (int b = a; b < n; ++b) {
                detail::Bits ub = up[a] & up[b];
                detail::Bits lb = down[a] & down[b];
                int nu = ub.count(), nl = lb.count();
                int j = -1, m = -1;
                for (int u = 0; u < n; ++u) {
                    if (j < 0 && ub.test(u) && upc[u] == nu && up[u] == ub) j = u;
                    if (m < 0 && lb.test(u) && downc[u] == nl && down[u] == lb) m = u;
                }
                if (j < 0)
                    throw Error(ErrorKind::NotALattice, L.labels_[a] + " and " + L.labels_[b] +
                                                            " have no least upper bound");
                if (m < 0)
                    throw Error(ErrorKind::NotALattice, L.labels_[a] + " and " + L.labels_[b] +
                                                            " have no greatest lower bound");
                L.join_[a * n + b] = L.join_[b * n + a] = j;
                L.meet_[a * n + b] = L.meet_[b * n + a] = m;
            }
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (L.meet(L.join(x, y), z) != L.join(L.meet(x, z), L.meet(y, z)))
                        throw Error(ErrorKind::NotDistributive,
                                    "(x v y) ^ z != (x ^ z) v (y ^ z) at x=" + L.labels_[x] +
                                        ", y=" + L.labels_[y] + ", z=" + L.labels_[z]);

        L.bottom_ = L.meet(0, 0);
        L.top_ = L.join(0, 0);
        for (int v = 1; v < n; ++v) {
            L.bottom_ = L.meet(L.bottom_, v);
            L.top_ = L.join(L.top_, v);
        }

        L.lower_.assign(n, {});
        L.upper_.assign(n, {});
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b && up[a].test(b) && (up[a] & down[b]).count() == 2) {
                    L.covers_.emplace_back(a, b);
                    L.upper_[a].push_back(b);
                    L.lower_[b].push_back(a);
                }

        L.height_.assign(n, 0);
        for (int v : topo)
            for (int w : L.upper_[v]) L.height_[w] = std::max(L.height_[w], L.height_[v] + 1);
        for (auto [a, b] : L.covers_)
            if (L.height_[b] != L.height_[a] + 1)
                throw Error(ErrorKind::NotDistributive,
                            "lattice is not graded at cover " + L.labels_[a] + " < " +
                                L.labels_[b]);
        return L;
    }

    int size() const { return n_; }
    bool leq(int a, int b) const { return leq_[a * n_ + b] != 0; }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
    int join(int a, int b) const { return join_[a * n_ + b]; }
    int meet(int a, int b) const { return meet_[a * n_ + b]; }
    int height(int a) const { return height_[a]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    int rank() const { return height_[top_]; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& lower_covers(int a) const { return lower_[a]; }
    const std::vector<int>& upper_covers(int a) const { return upper_[a]; }
    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool same_order(const Lattice& o) const { return n_ == o.n_ && leq_ == o.leq_; }

private:
    int n_ = 0;
    int bottom_ = 0;
    int top_ = 0;
    std::vector<std::uint8_t> leq_;
    std::vector<int> join_, meet_, height_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> lower_, upper_;
    std::vector<std::string> labels_;
};

inline Lattice chain(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> cov;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) cov.emplace_back(i, i + 1);
    return Lattice::from_covers(std::move(names), cov);
}

// C_{m+1} x C_{n+1}; element (i,j) gets index by (i+j, j) so labels read bottom-up, right to left
inline Lattice grid(int m, int n) {
    if (m < 1 || n < 1) throw Error(ErrorKind::BadInput, "grid dimensions must be positive");
    std::vector<std::pair<int, int>> pts;
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) pts.emplace_back(i, j);
    std::sort(pts.begin(), pts.end(), [](auto p, auto q) {
        return std::pair(p.first + p.second, p.second) < std::pair(q.first + q.second, q.second);
    });
    std::vector<int> id((m + 1) * (n + 1));
    std::vector<std::string> names;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        id[pts[k].first * (n + 1) + pts[k].second] = static_cast<int>(k);
        names.push_back("(" + std::to_string(pts[k].first) + "," + std::to_string(pts[k].second) +
                        ")");
    }
    std::vector<std::pair<int, int>> cov;
    for (auto [i, j] : pts) {
        if (i < m) cov.emplace_back(id[i * (n + 1) + j], id[(i + 1) * (n + 1) + j]);
        if (j < n) cov.emplace_back(id[i * (n + 1) + j], id[i * (n + 1) + j + 1]);
    }
    return Lattice::from_covers(std::move(names), cov);
}

// grid point lookup matching grid()'s indexing
inline int grid_index(int m, int n, int i, int j) {
    int idx = 0;
    for (int s = 0; s < i + j; ++s) idx += std::min(s, m) - std::max(0, s - n) + 1;
    return idx + (j - std::max(0, i + j - m));
}

inline std::vector<Pair> incomparable_pairs(const Lattice& L) {
    std::vector<Pair> out;
    for (int a = 0; a < L.size(); ++a)
        for (int b = a + 1; b < L.size(); ++b)
            if (!L.comparable(a, b)) out.push_back({a, b});
    return out;
}

inline std::vector<int> join_irreducibles(const Lattice& L) {
    std::vector<int> out;
    for (int a = 0; a < L.size(); ++a)
        if (L.lower_covers(a).size() == 1) out.push_back(a);
    return out;
}

inline std::vector<int> meet_irreducibles(const Lattice& L) {
    std::vector<int> out;
    for (int a = 0; a < L.size(); ++a)
        if (L.upper_covers(a).size() == 1) out.push_back(a);
    return out;
}

inline std::vector<int> jm_set(const Lattice& L) {
    std::vector<int> out;
    for (int a = 0; a < L.size(); ++a)
        if (L.lower_covers(a).size() == 1 && L.upper_covers(a).size() == 1) out.push_back(a);
    return out;
}

inline std::vector<Pair> jm_pairs(const Lattice& L) {
    auto jm = jm_set(L);
    std::vector<Pair> out;
    for (std::size_t i = 0; i < jm.size(); ++i)
        for (std::size_t j = i + 1; j < jm.size(); ++j)
            if (!L.comparable(jm[i], jm[j])) out.push_back({jm[i], jm[j]});
    return out;
}

struct Interval {
    Lattice lattice;
    std::vector<int> parent;
};

inline Interval interval(const Lattice& L, int a, int b) {
    if (!L.leq(a, b))
        throw Error(ErrorKind::NotComparable, L.label(a) + " is not below " + L.label(b));
    Interval iv;
    std::vector<int> local(L.size(), -1);
    std::vector<std::string> names;
    for (int x = 0; x < L.size(); ++x)
        if (L.leq(a, x) && L.leq(x, b)) {
            local[x] = static_cast<int>(iv.parent.size());
            iv.parent.push_back(x);
            names.push_back(L.label(x));
        }
    std::vector<std::pair<int, int>> cov;
    for (auto [x, y] : L.covers())
        if (local[x] >= 0 && local[y] >= 0) cov.emplace_back(local[x], local[y]);
    iv.lattice = Lattice::from_covers(std::move(names), cov);
    return iv;
}

inline std::vector<int> linear_extension(const Lattice& L) {
    std::vector<int> order(L.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return L.height(x) < L.height(y); });
    return order;
}

inline bool is_planar(const Lattice& L) {
    auto ji = join_irreducibles(L);
    for (std::size_t i = 0; i < ji.size(); ++i)
        for (std::size_t j = i + 1; j < ji.size(); ++j) {
            if (L.comparable(ji[i], ji[j])) continue;
            for (std::size_t k = j + 1; k < ji.size(); ++k)
                if (!L.comparable(ji[i], ji[k]) && !L.comparable(ji[j], ji[k])) return false;
        }
    return true;
}

// Finite poset given by strict down-sets as bitmasks over at most 30 elements.
struct Poset {
    std::vector<std::uint32_t> below;
    int size() const { return static_cast<int>(below.size()); }
};

inline std::vector<std::uint32_t> order_ideals(const Poset& P) {
    std::vector<std::uint32_t> ideals{0};
    for (int x = 0; x < P.size(); ++x) {
        std::size_t cur = ideals.size();
        for (std::size_t k = 0; k < cur; ++k)
            if ((ideals[k] & P.below[x]) == P.below[x]) ideals.push_back(ideals[k] | (1u << x));
    }
    return ideals;
}

// requires x's strict down-set to precede x in index order (natural labelling)
inline Lattice ideal_lattice(const Poset& P) {
    auto ideals = order_ideals(P);
    std::sort(ideals.begin(), ideals.end(), [](std::uint32_t x, std::uint32_t y) {
        return std::pair(std::popcount(x), x) < std::pair(std::popcount(y), y);
    });
    std::vector<std::string> names;
    for (auto I : ideals) {
        std::string s = "{";
        for (int x = 0; x < P.size(); ++x)
            if (I >> x & 1u) s += (s.size() > 1 ? "," : "") + std::to_string(x);
        names.push_back(s + "}");
    }
    std::vector<std::pair<int, int>> cov;
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (std::size_t j = 0; j < ideals.size(); ++j)
            if ((ideals[i] & ideals[j]) == ideals[i] &&
                std::popcount(ideals[j]) == std::popcount(ideals[i]) + 1)
                cov.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Lattice::from_covers(std::move(names), cov);
}

inline Lattice product(const Lattice& A, const Lattice& B) {
    std::vector<std::pair<int, int>> pts;
    for (int i = 0; i < A.size(); ++i)
        for (int j = 0; j < B.size(); ++j) pts.emplace_back(i, j);
    std::stable_sort(pts.begin(), pts.end(), [&](auto p, auto q) {
        return A.height(p.first) + B.height(p.second) < A.height(q.first) + B.height(q.second);
    });
    std::vector<int> id(A.size() * B.size());
    std::vector<std::string> names;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        id[pts[k].first * B.size() + pts[k].second] = static_cast<int>(k);
        names.push_back("(" + A.label(pts[k].first) + "," + B.label(pts[k].second) + ")");
    }
    std::vector<std::pair<int, int>> cov;
    for (auto [i, j] : pts) {
        for (int i2 : A.upper_covers(i)) cov.emplace_back(id[i * B.size() + j], id[i2 * B.size() + j]);
        for (int j2 : B.upper_covers(j)) cov.emplace_back(id[i * B.size() + j], id[i * B.size() + j2]);
    }
    return Lattice::from_covers(std::move(names), cov);
}

// Lexicographically least order matrix over relabellings that respect a local invariant.
inline std::vector<std::uint8_t> canonical_form(const Lattice& L) {
    const int n = L.size();
    std::vector<std::array<int, 5>> sig(n);
    for (int v = 0; v < n; ++v) {
        int above = 0, below = 0;
        for (int w = 0; w < n; ++w) {
            above += L.leq(v, w);
            below += L.leq(w, v);
        }
        sig[v] = {L.height(v), below, above, static_cast<int>(L.lower_covers(v).size()),
                  static_cast<int>(L.upper_covers(v).size())};
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return sig[x] < sig[y]; });
    std::vector<std::pair<int, int>> blocks;
    for (int s = 0; s < n;) {
        int e = s;
        while (e < n && sig[order[e]] == sig[order[s]]) ++e;
        blocks.emplace_back(s, e);
        s = e;
    }
    std::vector<std::uint8_t> best, cur(static_cast<std::size_t>(n) * n);
    auto emit = [&] {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cur[i * n + j] = L.leq(order[i], order[j]);
        if (best.empty() || cur < best) best = cur;
    };
    for (auto [s, e] : blocks) std::sort(order.begin() + s, order.begin() + e);
    while (true) {
        emit();
        std::size_t k = 0;
        for (; k < blocks.size(); ++k) {
            auto [s, e] = blocks[k];
            if (std::next_permutation(order.begin() + s, order.begin() + e)) break;
        }
        if (k == blocks.size()) break;
    }
    best.insert(best.begin(), static_cast<std::uint8_t>(n));
    return best;
}

inline bool isomorphic(const Lattice& A, const Lattice& B) {
    return A.size() == B.size() && canonical_form(A) == canonical_form(B);
}

inline constexpr int kCensusCap = 10;

// Every distributive lattice with at most max_elements elements, one per isomorphism class.
template <class Fn>
void for_each_distributive(int max_elements, Fn&& fn, int cap = kCensusCap) {
    if (max_elements > cap)
        throw Error(ErrorKind::CapExceeded, "census limited to " + std::to_string(cap) +
                                                " elements, asked for " +
                                                std::to_string(max_elements));
    if (max_elements < 1) return;
    std::vector<std::vector<std::uint8_t>> seen;
    Poset P;
    auto visit = [&](auto&& self, const std::vector<std::uint32_t>& ideals) -> void {
        Lattice L = ideal_lattice(P);
        auto key = canonical_form(L);
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
            seen.push_back(std::move(key));
            fn(L);
        }
        for (auto D : ideals) {
            std::vector<std::uint32_t> next = ideals;
            const std::uint32_t bit = 1u << P.size();
            for (auto I : ideals)
                if ((I & D) == D) next.push_back(I | bit);
            if (static_cast<int>(next.size()) > max_elements) continue;
            P.below.push_back(D);
            self(self, next);
            P.below.pop_back();
        }
    };
    visit(visit, {0u});
}

inline std::vector<Lattice> enumerate_distributive(int max_elements, int cap = kCensusCap) {
    std::vector<Lattice> out;
    for_each_distributive(max_elements, [&](const Lattice& L) { out.push_back(L); }, cap);
    std::stable_sort(out.begin(), out.end(),
                     [](const Lattice& x, const Lattice& y) { return x.size() < y.size(); });
    return out;
}

}  // namespace hibi
