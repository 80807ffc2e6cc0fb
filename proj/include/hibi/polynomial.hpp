#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace hibi {

// Sparse exponent vector: (variable, exponent) pairs sorted by variable, exponents positive.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::initializer_list<int> vars) {
        for (int v : vars) *this = *this * var(v);
    }

    static Monomial var(int v, int e = 1) {
        Monomial m;
        if (e > 0) {
            m.exps_.emplace_back(v, e);
            m.deg_ = e;
        }
        return m;
    }

    int degree() const { return deg_; }
    bool is_one() const { return exps_.empty(); }
    const std::vector<std::pair<int, int>>& exponents() const { return exps_; }

    int exponent(int v) const {
        for (auto [x, e] : exps_)
            if (x == v) return e;
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        auto i = a.exps_.begin(), j = b.exps_.begin();
        while (i != a.exps_.end() || j != b.exps_.end()) {
            if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first))
                r.exps_.push_back(*i++);
            else if (i == a.exps_.end() || j->first < i->first)
                r.exps_.push_back(*j++);
            else {
                r.exps_.emplace_back(i->first, i->second + j->second);
                ++i, ++j;
            }
        }
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }

    bool divides(const Monomial& b) const {
        auto j = b.exps_.begin();
        for (auto [v, e] : exps_) {
            while (j != b.exps_.end() && j->first < v) ++j;
            if (j == b.exps_.end() || j->first != v || j->second < e) return false;
        }
        return true;
    }

    // b / *this, assuming divides(b)
    Monomial cofactor(const Monomial& b) const {
        Monomial r;
        auto i = exps_.begin();
        for (auto [v, e] : b.exps_) {
            int d = e;
            if (i != exps_.end() && i->first == v) d -= (i++)->second;
            if (d > 0) r.exps_.emplace_back(v, d);
        }
        r.deg_ = b.deg_ - deg_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        auto i = a.exps_.begin(), j = b.exps_.begin();
        while (i != a.exps_.end() || j != b.exps_.end()) {
            if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first))
                r.exps_.push_back(*i++);
            else if (i == a.exps_.end() || j->first < i->first)
                r.exps_.push_back(*j++);
            else {
                r.exps_.emplace_back(i->first, std::max(i->second, j->second));
                ++i, ++j;
            }
        }
        for (auto [v, e] : r.exps_) r.deg_ += e;
        return r;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    // structural order for use as a container key; unrelated to any term order
    bool operator<(const Monomial& o) const {
        return std::pair(deg_, exps_) < std::pair(o.deg_, o.exps_);
    }

    std::string str(const std::string& prefix = "x", bool star = false) const {
        if (exps_.empty()) return "1";
        std::string s;
        for (auto [v, e] : exps_) {
            if (star && !s.empty()) s += "*";
            s += prefix + std::to_string(v + 1);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    std::vector<std::pair<int, int>> exps_;
    int deg_ = 0;
};

// Graded reverse lexicographic order on variables ranked by a linear extension.
// Equal degree: at the lowest-ranked variable where exponents differ, the smaller exponent wins.
class MonomialOrder {
public:
    MonomialOrder() = default;
    explicit MonomialOrder(std::vector<int> rank) : rank_(std::move(rank)) {}

    static MonomialOrder from_extension(const std::vector<int>& ext) {
        std::vector<int> rank(ext.size());
        for (std::size_t p = 0; p < ext.size(); ++p) rank[ext[p]] = static_cast<int>(p);
        return MonomialOrder(std::move(rank));
    }

    int nvars() const { return static_cast<int>(rank_.size()); }
    int rank(int v) const { return rank_[v]; }

    std::strong_ordering cmp(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        auto ra = ranked(a), rb = ranked(b);
        std::size_t i = 0, j = 0;
        while (i < ra.size() || j < rb.size()) {
            int ka = i < ra.size() ? ra[i].first : 1 << 30;
            int kb = j < rb.size() ? rb[j].first : 1 << 30;
            int ea = ka <= kb ? ra[i].second : 0;
            int eb = kb <= ka ? rb[j].second : 0;
            if (ea != eb) return eb <=> ea;
            if (ka <= kb) ++i;
            if (kb <= ka) ++j;
        }
        return std::strong_ordering::equal;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

private:
    std::vector<std::pair<int, int>> ranked(const Monomial& m) const {
        std::vector<std::pair<int, int>> out;
        for (auto [v, e] : m.exponents()) out.emplace_back(rank_[v], e);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> rank_;
};

struct Term {
    mpq_class coeff;
    Monomial mono;
};

// Terms strictly decreasing in the ring's order, no zero coefficients.
struct Polynomial {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lead() const { return terms.front(); }
    bool operator==(const Polynomial& o) const {
        if (terms.size() != o.terms.size()) return false;
        for (std::size_t k = 0; k < terms.size(); ++k)
            if (terms[k].coeff != o.terms[k].coeff || !(terms[k].mono == o.terms[k].mono))
                return false;
        return true;
    }
};

struct Division {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

class PolyRing {
public:
    PolyRing() = default;
    explicit PolyRing(MonomialOrder ord) : ord_(std::move(ord)) {}

    const MonomialOrder& order() const { return ord_; }
    int nvars() const { return ord_.nvars(); }
    std::strong_ordering cmp(const Monomial& a, const Monomial& b) const { return ord_.cmp(a, b); }

    Polynomial make(std::vector<Term> ts) const {
        std::sort(ts.begin(), ts.end(),
                  [&](const Term& x, const Term& y) { return ord_.greater(x.mono, y.mono); });
        Polynomial p;
        for (auto& t : ts) {
            if (!p.terms.empty() && p.terms.back().mono == t.mono)
                p.terms.back().coeff += t.coeff;
            else
                p.terms.push_back(std::move(t));
            if (sgn(p.terms.back().coeff) == 0) p.terms.pop_back();
        }
        return p;
    }

    Polynomial monomial(const Monomial& m, const mpq_class& c = 1) const {
        Polynomial p;
        if (sgn(c) != 0) p.terms.push_back({c, m});
        return p;
    }

    Polynomial add(const Polynomial& f, const Polynomial& g) const { return combine(f, g, 1); }
    Polynomial sub(const Polynomial& f, const Polynomial& g) const { return combine(f, g, -1); }

    Polynomial mul(const Polynomial& f, const mpq_class& c, const Monomial& m) const {
        Polynomial r;
        if (sgn(c) == 0) return r;
        r.terms.reserve(f.terms.size());
        for (auto& t : f.terms) r.terms.push_back({t.coeff * c, t.mono * m});
        return r;
    }

    Polynomial mul(const Polynomial& f, const Polynomial& g) const {
        Polynomial r;
        for (auto& t : g.terms) r = add(r, mul(f, t.coeff, t.mono));
        return r;
    }

    Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) const {
        if (f.is_zero() || g.is_zero())
            throw Error(ErrorKind::ZeroInput, "S-polynomial of a zero polynomial");
        Monomial gam = lcm(f.lead().mono, g.lead().mono);
        return sub(mul(f, 1 / f.lead().coeff, f.lead().mono.cofactor(gam)),
                   mul(g, 1 / g.lead().coeff, g.lead().mono.cofactor(gam)));
    }

    // Reducer choice: the lowest-index divisor whose initial term divides the current term.
    Division divide(const Polynomial& f, const std::vector<Polynomial>& ds) const {
        Division out;
        out.quotients.resize(ds.size());
        for (auto& d : ds)
            if (d.is_zero()) throw Error(ErrorKind::ZeroInput, "division by zero polynomial");
        Polynomial p = f;
        std::vector<Term> rem;
        while (!p.is_zero()) {
            const Term lt = p.lead();
            std::size_t k = 0;
            while (k < ds.size() && !ds[k].lead().mono.divides(lt.mono)) ++k;
            if (k == ds.size()) {
                rem.push_back(lt);
                p.terms.erase(p.terms.begin());
                continue;
            }
            mpq_class c = lt.coeff / ds[k].lead().coeff;
            Monomial q = ds[k].lead().mono.cofactor(lt.mono);
            out.quotients[k].terms.push_back({c, q});
            p = sub(p, mul(ds[k], c, q));
        }
        out.remainder.terms = std::move(rem);
        return out;
    }

    std::string str(const Polynomial& f, const std::string& prefix = "x", bool star = false) const {
        if (f.is_zero()) return "0";
        std::string s;
        for (auto& t : f.terms) {
            mpq_class a = abs(t.coeff);
            bool neg = sgn(t.coeff) < 0;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? "-" : "+";
            bool unit = a == 1 && !t.mono.is_one();
            if (!unit) s += a.get_str() + (t.mono.is_one() ? "" : (star ? "*" : ""));
            if (!t.mono.is_one()) s += t.mono.str(prefix, star);
        }
        return s;
    }

private:
    Polynomial combine(const Polynomial& f, const Polynomial& g, int sign) const {
        Polynomial r;
        r.terms.reserve(f.terms.size() + g.terms.size());
        std::size_t i = 0, j = 0;
        while (i < f.terms.size() || j < g.terms.size()) {
            std::strong_ordering c = std::strong_ordering::equal;
            if (i == f.terms.size())
                c = std::strong_ordering::less;
            else if (j == g.terms.size())
                c = std::strong_ordering::greater;
            else
                c = ord_.cmp(f.terms[i].mono, g.terms[j].mono);
            if (c > 0) {
                r.terms.push_back(f.terms[i++]);
            } else if (c < 0) {
                r.terms.push_back({sign * g.terms[j].coeff, g.terms[j].mono});
                ++j;
            } else {
                mpq_class s = f.terms[i].coeff + sign * g.terms[j].coeff;
                if (sgn(s) != 0) r.terms.push_back({s, f.terms[i].mono});
                ++i, ++j;
            }
        }
        return r;
    }

    MonomialOrder ord_;
};

}  // namespace hibi
