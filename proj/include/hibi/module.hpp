#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace hibi {

struct ModuleTerm {
    mpq_class coeff;
    Monomial mono;
    int gen = 0;
};

struct ModuleElement {
    std::vector<ModuleTerm> terms;

    bool is_zero() const { return terms.empty(); }
    const ModuleTerm& lead() const { return terms.front(); }
    int degree_shift() const { return terms.empty() ? 0 : terms.front().mono.degree(); }
};

// m e_i > n e_j  iff  in(m g_i) > in(n g_j), or they coincide and i < j.
class SchreyerOrder {
public:
    SchreyerOrder(const PolyRing& ring, std::vector<Monomial> initials)
        : ring_(&ring), init_(std::move(initials)) {}

    std::strong_ordering cmp(const ModuleTerm& s, const ModuleTerm& t) const {
        auto c = ring_->cmp(s.mono * init_[s.gen], t.mono * init_[t.gen]);
        if (c != 0) return c;
        return t.gen <=> s.gen;
    }

    const PolyRing& ring() const { return *ring_; }
    std::string name() const { return "schreyer"; }

private:
    const PolyRing* ring_;
    std::vector<Monomial> init_;
};

// Position first (higher generator index greater), then the ring order on the coefficient monomial.
class PositionOverTerm {
public:
    explicit PositionOverTerm(const PolyRing& ring) : ring_(&ring) {}

    std::strong_ordering cmp(const ModuleTerm& s, const ModuleTerm& t) const {
        if (s.gen != t.gen) return s.gen <=> t.gen;
        return ring_->cmp(s.mono, t.mono);
    }

    const PolyRing& ring() const { return *ring_; }
    std::string name() const { return "position-over-term"; }

private:
    const PolyRing* ring_;
};

template <class Order>
ModuleElement make_element(const Order& ord, std::vector<ModuleTerm> ts) {
    std::sort(ts.begin(), ts.end(),
              [&](const ModuleTerm& x, const ModuleTerm& y) { return ord.cmp(x, y) > 0; });
    ModuleElement e;
    for (auto& t : ts) {
        if (!e.terms.empty() && e.terms.back().gen == t.gen && e.terms.back().mono == t.mono)
            e.terms.back().coeff += t.coeff;
        else
            e.terms.push_back(std::move(t));
        if (sgn(e.terms.back().coeff) == 0) e.terms.pop_back();
    }
    return e;
}

template <class Order>
ModuleElement add(const Order& ord, const ModuleElement& u, const ModuleElement& v,
                  const mpq_class& vc = 1, const Monomial& vm = {}) {
    std::vector<ModuleTerm> ts = u.terms;
    for (auto& t : v.terms) ts.push_back({t.coeff * vc, t.mono * vm, t.gen});
    return make_element(ord, std::move(ts));
}

template <class Order>
ModuleElement scale(const Order& ord, const ModuleElement& u, const mpq_class& c,
                    const Monomial& m) {
    return add(ord, ModuleElement{}, u, c, m);
}

inline Polynomial phi(const PolyRing& ring, const ModuleElement& e,
                      const std::vector<Polynomial>& gens) {
    std::vector<Term> ts;
    for (auto& t : e.terms)
        for (auto& g : gens[t.gen].terms) ts.push_back({t.coeff * g.coeff, t.mono * g.mono});
    return ring.make(std::move(ts));
}

inline bool same_element(const ModuleElement& u, const ModuleElement& v) {
    if (u.terms.size() != v.terms.size()) return false;
    for (std::size_t k = 0; k < u.terms.size(); ++k)
        if (u.terms[k].gen != v.terms[k].gen || !(u.terms[k].mono == v.terms[k].mono) ||
            u.terms[k].coeff != v.terms[k].coeff)
            return false;
    return true;
}

// Equality up to an overall sign; both must be sorted under the same order.
inline bool same_up_to_sign(const ModuleElement& u, const ModuleElement& v) {
    if (same_element(u, v)) return true;
    ModuleElement w = v;
    for (auto& t : w.terms) t.coeff = -t.coeff;
    return same_element(u, w);
}

// Module S-pair; empty when the leading terms sit on different basis vectors.
template <class Order>
std::optional<ModuleElement> s_pair(const Order& ord, const ModuleElement& u,
                                    const ModuleElement& v) {
    if (u.is_zero() || v.is_zero())
        throw Error(ErrorKind::ZeroInput, "S-pair of a zero module element");
    if (u.lead().gen != v.lead().gen) return std::nullopt;
    Monomial gam = lcm(u.lead().mono, v.lead().mono);
    ModuleElement a = scale(ord, u, 1 / u.lead().coeff, u.lead().mono.cofactor(gam));
    return add(ord, a, v, -1 / v.lead().coeff, v.lead().mono.cofactor(gam));
}

template <class Order>
ModuleElement reduce(const Order& ord, ModuleElement p, const std::vector<ModuleElement>& basis) {
    std::vector<ModuleTerm> rem;
    while (!p.is_zero()) {
        const ModuleTerm lt = p.lead();
        std::size_t k = 0;
        for (; k < basis.size(); ++k) {
            const auto& b = basis[k].lead();
            if (b.gen == lt.gen && b.mono.divides(lt.mono)) break;
        }
        if (k == basis.size()) {
            rem.push_back(lt);
            p.terms.erase(p.terms.begin());
            continue;
        }
        const auto& b = basis[k].lead();
        p = add(ord, p, basis[k], -lt.coeff / b.coeff, b.mono.cofactor(lt.mono));
    }
    return make_element(ord, std::move(rem));
}

inline std::string to_string(const PolyRing& ring, const ModuleElement& e,
                             const std::string& basis = "e") {
    if (e.is_zero()) return "0";
    std::string s;
    for (auto& t : e.terms) {
        Polynomial p = ring.monomial(t.mono, t.coeff);
        std::string c = ring.str(p);
        if (!s.empty() && c[0] != '-') s += "+";
        if (c == "1") c = "";
        if (c == "-1") c = "-";
        s += c + basis + std::to_string(t.gen + 1);
    }
    return s;
}

}  // namespace hibi
