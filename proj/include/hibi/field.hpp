#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace hibi {

struct RationalField {
    using value_type = mpq_class;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from(const mpq_class& q) const { return q; }
    value_type from(long v) const { return v; }
    bool is_zero(const value_type& v) const { return sgn(v) == 0; }
    value_type add(const value_type& x, const value_type& y) const { return x + y; }
    value_type sub(const value_type& x, const value_type& y) const { return x - y; }
    value_type mul(const value_type& x, const value_type& y) const { return x * y; }
    value_type neg(const value_type& x) const { return -x; }
    value_type inv(const value_type& x) const { return 1 / x; }
    std::string name() const { return "QQ"; }
};

class PrimeField {
public:
    using value_type = std::uint32_t;

    PrimeField() : PrimeField(32003) {}
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2) throw Error(ErrorKind::BadInput, "modulus must be prime");
        for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
            if (p % d == 0) throw Error(ErrorKind::BadInput, std::to_string(p) + " is not prime");
    }

    std::uint32_t modulus() const { return p_; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from(long v) const {
        long r = v % static_cast<long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }
    value_type from(const mpq_class& q) const {
        mpz_class num = q.get_num() % p_, den = q.get_den() % p_;
        if (den == 0) throw Error(ErrorKind::BadInput, "denominator vanishes mod p");
        return mul(from(num.get_si()), inv(from(den.get_si())));
    }
    bool is_zero(value_type v) const { return v == 0; }
    value_type add(value_type x, value_type y) const { return (x + y) % p_; }
    value_type sub(value_type x, value_type y) const { return (x + p_ - y) % p_; }
    value_type mul(value_type x, value_type y) const {
        return static_cast<value_type>(static_cast<std::uint64_t>(x) * y % p_);
    }
    value_type neg(value_type x) const { return x == 0 ? 0 : p_ - x; }
    value_type inv(value_type x) const {
        std::uint64_t r = 1, b = x, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return static_cast<value_type>(r);
    }
    std::string name() const { return "ZZ/" + std::to_string(p_); }

private:
    std::uint32_t p_;
};

template <class F>
using SparseVec = std::vector<std::pair<int, typename F::value_type>>;

// Row echelon form built one vector at a time; rows are keyed by their smallest column.
template <class F>
class Echelon {
public:
    explicit Echelon(F field = {}) : f_(std::move(field)) {}

    bool insert(SparseVec<F> v) {
        std::map<int, typename F::value_type> acc;
        for (auto& [c, x] : v)
            if (!f_.is_zero(x)) acc[c] = f_.add(acc.count(c) ? acc[c] : f_.zero(), x);
        while (!acc.empty()) {
            auto it = acc.begin();
            if (f_.is_zero(it->second)) {
                acc.erase(it);
                continue;
            }
            auto p = pivot_.find(it->first);
            if (p == pivot_.end()) {
                auto s = f_.inv(it->second);
                SparseVec<F> row;
                for (auto& [c, x] : acc)
                    if (!f_.is_zero(x)) row.emplace_back(c, f_.mul(s, x));
                pivot_.emplace(row.front().first, rows_.size());
                rows_.push_back(std::move(row));
                return true;
            }
            auto s = it->second;
            for (auto& [c, x] : rows_[p->second]) {
                auto& slot = acc[c];
                slot = f_.sub(slot, f_.mul(s, x));
                if (f_.is_zero(slot)) acc.erase(c);
            }
        }
        return false;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    F f_;
    std::vector<SparseVec<F>> rows_;
    std::map<int, std::size_t> pivot_;
};

// Null space of a dense rows x cols matrix; basis vectors are indexed by column.
template <class F>
std::vector<SparseVec<F>> kernel_basis(const F& f,
                                       std::vector<std::vector<typename F::value_type>> a,
                                       int cols) {
    const int rows = static_cast<int>(a.size());
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (!f.is_zero(a[i][c])) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[r], a[sel]);
        auto s = f.inv(a[r][c]);
        for (int k = c; k < cols; ++k) a[r][k] = f.mul(a[r][k], s);
        for (int i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(a[i][c])) continue;
            auto t = a[i][c];
            for (int k = c; k < cols; ++k) a[i][k] = f.sub(a[i][k], f.mul(t, a[r][k]));
        }
        pivcol.push_back(c);
        ++r;
    }
    std::vector<char> is_piv(cols, 0);
    for (int c : pivcol) is_piv[c] = 1;
    std::vector<SparseVec<F>> out;
    for (int free = 0; free < cols; ++free) {
        if (is_piv[free]) continue;
        SparseVec<F> v;
        for (int i = 0; i < r; ++i)
            if (!f.is_zero(a[i][free])) v.emplace_back(pivcol[i], f.neg(a[i][free]));
        v.emplace_back(free, f.one());
        std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.first < y.first; });
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace hibi
