#pragma once

#include <map>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "module.hpp"
#include "polynomial.hpp"

namespace hibi {

// f = x_a x_b - x_{a v b} x_{a ^ b} for one incomparable pair.
struct DiamondRelation {
    Pair pair;
    Polynomial poly;
    int index = 0;
};

class HibiIdeal {
public:
    explicit HibiIdeal(const Lattice& L)
        : lat_(&L), ring_(MonomialOrder::from_extension(linear_extension(L))) {
        for (Pair p : incomparable_pairs(L)) {
            DiamondRelation r;
            r.pair = p;
            r.index = static_cast<int>(rel_.size());
            r.poly = ring_.make({{1, Monomial{p.a, p.b}},
                                 {-1, Monomial{L.join(p.a, p.b), L.meet(p.a, p.b)}}});
            index_[p] = r.index;
            polys_.push_back(r.poly);
            rel_.push_back(std::move(r));
        }
    }

    // the ideal keeps a pointer to its lattice
    explicit HibiIdeal(Lattice&&) = delete;

    const Lattice& lattice() const { return *lat_; }
    const PolyRing& ring() const { return ring_; }
    const std::vector<DiamondRelation>& relations() const { return rel_; }
    const std::vector<Polynomial>& polys() const { return polys_; }
    std::size_t size() const { return rel_.size(); }

    // -1 when the elements are comparable
    int index_of(int a, int b) const {
        if (a > b) std::swap(a, b);
        auto it = index_.find({a, b});
        return it == index_.end() ? -1 : it->second;
    }

    std::vector<Monomial> initials() const {
        std::vector<Monomial> out;
        for (auto& r : rel_) out.push_back(r.poly.lead().mono);
        return out;
    }

    SchreyerOrder schreyer() const { return SchreyerOrder(ring_, initials()); }

private:
    const Lattice* lat_;
    PolyRing ring_;
    std::vector<DiamondRelation> rel_;
    std::vector<Polynomial> polys_;
    std::map<Pair, int> index_;
};

inline std::vector<DiamondRelation> hibi_ideal(const Lattice& L) {
    HibiIdeal I(L);
    return I.relations();
}

struct CertificateReport {
    std::size_t pairs_checked = 0;
    std::size_t max_terms = 0;
};

inline CertificateReport buchberger_check(const HibiIdeal& I) {
    CertificateReport rep;
    const auto& R = I.ring();
    const auto& fs = I.polys();
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            Polynomial s = R.s_polynomial(fs[i], fs[j]);
            rep.max_terms = std::max(rep.max_terms, s.terms.size());
            Division d = R.divide(s, fs);
            ++rep.pairs_checked;
            if (!d.remainder.is_zero()) {
                const auto& L = I.lattice();
                auto p = I.relations()[i].pair, q = I.relations()[j].pair;
                throw Error(ErrorKind::NotGroebner,
                            "S(f(" + L.label(p.a) + "," + L.label(p.b) + "), f(" + L.label(q.a) +
                                "," + L.label(q.b) + ")) leaves remainder " +
                                R.str(d.remainder));
            }
        }
    return rep;
}

inline Polynomial normal_form(const Polynomial& f, const HibiIdeal& I) {
    return I.ring().divide(f, I.polys()).remainder;
}

// Tail monomials never divisible by another generator's initial term.
inline bool is_reduced(const HibiIdeal& I) {
    const auto& fs = I.polys();
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t t = 1; t < fs[i].terms.size(); ++t)
            for (std::size_t j = 0; j < fs.size(); ++j)
                if (fs[j].lead().mono.divides(fs[i].terms[t].mono)) return false;
    return true;
}

inline std::string ideal_to_macaulay2(const HibiIdeal& I, const std::string& field = "QQ") {
    const int n = I.lattice().size();
    std::string s = "R = " + field + "[x_1..x_" + std::to_string(n) + "];\n";
    s += "I = ideal(";
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (k) s += ",\n    ";
        s += I.ring().str(I.polys()[k], "x_", true);
    }
    if (I.size() == 0) s += "0_R";
    s += ");\n";
    s += "C = res I;\n";
    s += "print betti C;\n";
    return s;
}

inline std::string ideal_to_singular(const HibiIdeal& I, const std::string& charac = "0") {
    const int n = I.lattice().size();
    std::string s = "ring R = " + charac + ",(x(1.." + std::to_string(n) + ")),dp;\n";
    s += "ideal I = ";
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (k) s += ",\n    ";
        std::string p = I.ring().str(I.polys()[k], "x", true);
        std::string q;
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (p[c] == 'x') {
                std::size_t e = c + 1;
                while (e < p.size() && isdigit(static_cast<unsigned char>(p[e]))) ++e;
                q += "x(" + p.substr(c + 1, e - c - 1) + ")";
                c = e - 1;
            } else {
                q += p[c];
            }
        }
        s += q;
    }
    if (I.size() == 0) s += "0";
    s += ";\n";
    s += "resolution F = mres(I, 0);\n";
    s += "print(betti(F), \"betti\");\n";
    return s;
}

}  // namespace hibi
