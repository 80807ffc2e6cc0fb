#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include "field.hpp"
#include "ideal.hpp"
#include "module.hpp"

namespace hibi {

struct GradedBettiRow {
    int degree = 0;
    long kernel_dim = 0;
    long trivial_dim = 0;
    long minimal_generators = 0;
};

// deg(x_a) = (1, [j <= a] for each join-irreducible j); the Hibi binomials are homogeneous for it.
class FineGrading {
public:
    using Degree = std::vector<int>;

    explicit FineGrading(const Lattice& L) {
        auto ji = join_irreducibles(L);
        var_.assign(L.size(), Degree(ji.size() + 1, 0));
        for (int a = 0; a < L.size(); ++a) {
            var_[a][0] = 1;
            for (std::size_t k = 0; k < ji.size(); ++k) var_[a][k + 1] = L.leq(ji[k], a);
        }
    }

    const Degree& of_var(int v) const { return var_[v]; }

    Degree of(const Monomial& m) const {
        Degree d(var_.empty() ? 1 : var_[0].size(), 0);
        for (auto [v, e] : m.exponents())
            for (std::size_t k = 0; k < d.size(); ++k) d[k] += e * var_[v][k];
        return d;
    }

    static Degree plus(Degree a, const Degree& b) {
        for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
        return a;
    }

private:
    std::vector<Degree> var_;
};

inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            Monomial m;
            for (int v : pick) m = m * Monomial::var(v);
            out.push_back(std::move(m));
            return;
        }
        for (int v = from; v < nvars; ++v) {
            pick.push_back(v);
            self(self, v, left - 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, d);
    return out;
}

namespace detail {

template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t t = std::min<std::size_t>(threads, n);
    for (std::size_t w = 0; w < t; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += t) fn(i);
        });
    for (auto& th : pool) th.join();
}

using ColKey = std::pair<Monomial, int>;

}  // namespace detail

// Degree-d pieces of ker(phi) split by fine degree, previous degree kept for the m*Syz count.
template <class F>
class SyzygyOracle {
public:
    SyzygyOracle(const HibiIdeal& I, F field = {}, int threads = 1)
        : I_(&I), f_(std::move(field)), grading_(I.lattice()), threads_(threads) {}

    std::vector<GradedBettiRow> run(int max_degree) {
        if (max_degree < 3)
            throw Error(ErrorKind::DegreeTooSmall, "degree bound must be at least 3");
        std::vector<GradedBettiRow> rows;
        prev_.clear();
        for (int d = 3; d <= max_degree; ++d) rows.push_back(step(d));
        return rows;
    }

private:
    struct Component {
        std::vector<detail::ColKey> cols;
        std::map<detail::ColKey, int> col_index;
        std::vector<SparseVec<F>> kernel;
        long trivial = 0;
    };

    GradedBettiRow step(int d) {
        const auto& fs = I_->polys();
        const int n = I_->lattice().size();
        std::map<FineGrading::Degree, Component> comps;
        std::vector<FineGrading::Degree> gdeg;
        for (auto& f : fs) gdeg.push_back(grading_.of(f.lead().mono));
        for (auto& m : monomials_of_degree(n, d - 2)) {
            FineGrading::Degree md = grading_.of(m);
            for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
                auto& c = comps[FineGrading::plus(md, gdeg[i])];
                c.col_index.emplace(detail::ColKey{m, i}, static_cast<int>(c.cols.size()));
                c.cols.emplace_back(m, i);
            }
        }
        std::vector<std::pair<const FineGrading::Degree*, Component*>> work;
        for (auto& [deg, c] : comps) work.emplace_back(&deg, &c);

        detail::parallel_for(work.size(), threads_, [&](std::size_t w) {
            Component& c = *work[w].second;
            std::map<Monomial, int> row_index;
            for (auto& [m, i] : c.cols)
                for (auto& t : fs[i].terms) row_index.emplace(m * t.mono, 0);
            int r = 0;
            for (auto& [mono, idx] : row_index) idx = r++;
            std::vector<std::vector<typename F::value_type>> a(
                r, std::vector<typename F::value_type>(c.cols.size(), f_.zero()));
            for (std::size_t col = 0; col < c.cols.size(); ++col) {
                auto& [m, i] = c.cols[col];
                for (auto& t : fs[i].terms) {
                    auto& slot = a[row_index.at(m * t.mono)][col];
                    slot = f_.add(slot, f_.from(t.coeff));
                }
            }
            c.kernel = kernel_basis(f_, std::move(a), static_cast<int>(c.cols.size()));

            const auto& target = *work[w].first;
            Echelon<F> span(f_);
            for (int v = 0; v < n; ++v) {
                FineGrading::Degree src = target;
                bool ok = true;
                for (std::size_t k = 0; k < src.size(); ++k) {
                    src[k] -= grading_.of_var(v)[k];
                    ok = ok && src[k] >= 0;
                }
                if (!ok) continue;
                auto it = prev_.find(src);
                if (it == prev_.end()) continue;
                const Component& pc = it->second;
                const Monomial xv = Monomial::var(v);
                for (auto& vec : pc.kernel) {
                    SparseVec<F> lifted;
                    for (auto& [col, x] : vec) {
                        auto& [m, i] = pc.cols[col];
                        lifted.emplace_back(c.col_index.at({m * xv, i}), x);
                    }
                    span.insert(std::move(lifted));
                    if (span.rank() == c.kernel.size()) break;
                }
            }
            c.trivial = static_cast<long>(span.rank());
        });

        GradedBettiRow row;
        row.degree = d;
        for (auto& [deg, c] : comps) {
            row.kernel_dim += static_cast<long>(c.kernel.size());
            row.trivial_dim += c.trivial;
        }
        row.minimal_generators = row.kernel_dim - row.trivial_dim;
        for (auto it = comps.begin(); it != comps.end();) {
            it->second.col_index.clear();
            it = it->second.kernel.empty() ? comps.erase(it) : std::next(it);
        }
        prev_ = std::move(comps);
        return row;
    }

    const HibiIdeal* I_;
    F f_;
    FineGrading grading_;
    int threads_;
    std::map<FineGrading::Degree, Component> prev_;
};

template <class F = RationalField>
std::vector<GradedBettiRow> graded_betti_oracle(const HibiIdeal& I, int max_degree, F field = {},
                                                int threads = 1) {
    return SyzygyOracle<F>(I, std::move(field), threads).run(max_degree);
}

inline long betti_total(const std::vector<GradedBettiRow>& rows) {
    long s = 0;
    for (auto& r : rows) s += r.minimal_generators;
    return s;
}

inline long betti_at(const std::vector<GradedBettiRow>& rows, int d) {
    for (auto& r : rows)
        if (r.degree == d) return r.minimal_generators;
    return 0;
}

template <class F = RationalField>
bool is_linear_first_syzygy(const HibiIdeal& I, int max_degree = 6, F field = {}) {
    if (I.size() < 2) return true;
    for (auto& r : graded_betti_oracle(I, max_degree, std::move(field)))
        if (r.degree >= 4 && r.minimal_generators != 0) return false;
    return true;
}

// Span of {m * e} inside one total degree, accumulated per fine degree.
template <class F>
class GradedSpan {
public:
    GradedSpan(const HibiIdeal& I, int degree, F field = {})
        : I_(&I), f_(std::move(field)), grading_(I.lattice()), degree_(degree) {}

    // true when the rank grew
    bool insert(const ModuleElement& e) {
        if (e.is_zero()) return false;
        const int shift = e.lead().mono.degree() + 2;
        if (shift != degree_) throw Error(ErrorKind::BadInput, "element lies in another degree");
        FineGrading::Degree deg = degree_of(e);
        if (only_ && !only_->count(deg)) return false;
        auto& piece = pieces_.try_emplace(deg, f_).first->second;
        SparseVec<F> v;
        for (auto& t : e.terms) v.emplace_back(key(t), f_.from(t.coeff));
        return piece.insert(std::move(v));
    }

    // every multiple of e by a monomial landing in this degree
    std::size_t insert_multiples(const ModuleElement& e) {
        if (e.is_zero()) return 0;
        const int gap = degree_ - (e.lead().mono.degree() + 2);
        if (gap < 0) return 0;
        std::size_t grew = 0;
        for (auto& m : monomials_of_degree(I_->lattice().size(), gap)) {
            ModuleElement me;
            for (auto& t : e.terms) me.terms.push_back({t.coeff, t.mono * m, t.gen});
            grew += insert(me);
        }
        return grew;
    }

    FineGrading::Degree degree_of(const ModuleElement& e) const {
        FineGrading::Degree deg = term_degree(e.lead());
        for (auto& t : e.terms)
            if (term_degree(t) != deg)
                throw Error(ErrorKind::BadInput, "element is not homogeneous for the fine grading");
        return deg;
    }

    // drop everything outside these fine degrees
    void restrict_to(std::set<FineGrading::Degree> keep) { only_ = std::move(keep); }

    std::size_t rank() const {
        std::size_t r = 0;
        for (auto& [d, p] : pieces_) r += p.rank();
        return r;
    }

private:
    FineGrading::Degree term_degree(const ModuleTerm& t) const {
        return FineGrading::plus(grading_.of(t.mono), grading_.of(I_->polys()[t.gen].lead().mono));
    }

    int key(const ModuleTerm& t) {
        auto [it, fresh] = keys_.try_emplace({t.mono, t.gen}, static_cast<int>(keys_.size()));
        return it->second;
    }

    const HibiIdeal* I_;
    F f_;
    FineGrading grading_;
    int degree_;
    std::map<detail::ColKey, int> keys_;
    std::map<FineGrading::Degree, Echelon<F>> pieces_;
    std::optional<std::set<FineGrading::Degree>> only_;
};

template <class F = RationalField>
std::size_t span_rank(const HibiIdeal& I, const std::vector<ModuleElement>& gens, int degree,
                      F field = {}) {
    GradedSpan<F> s(I, degree, std::move(field));
    for (auto& g : gens) s.insert_multiples(g);
    return s.rank();
}

}  // namespace hibi
