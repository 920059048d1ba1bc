#pragma once

#include "galinv/gaussian.hpp"

#include <map>
#include <string>
#include <type_traits>

namespace galinv {

// Finite sum of c_k eps^k, k in Z. Zero coefficients are never stored.
template <class C>
class LaurentPoly {
public:
    using Coeff = C;

    LaurentPoly() = default;
    LaurentPoly(int v) { set(0, C(v)); }
    template <class U>
        requires(std::is_constructible_v<C, const U&> && !std::is_same_v<std::decay_t<U>, LaurentPoly> &&
                 !std::is_same_v<std::decay_t<U>, int>)
    LaurentPoly(const U& c) {
        set(0, C(c));
    }

    static LaurentPoly monomial(int k, const C& c = C(1)) {
        LaurentPoly p;
        p.set(k, c);
        return p;
    }
    static LaurentPoly eps() { return monomial(1); }

    const std::map<int, C>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_monomial() const { return c_.size() == 1; }
    int min_exponent() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exponent() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    C coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? C(0) : it->second;
    }

    void set(int k, const C& c) {
        if (c.is_zero())
            c_.erase(k);
        else
            c_[k] = c;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [k, c] : c_) r.c_.emplace(k, -c);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [k, c] : o.c_) add_term(k, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [k, c] : o.c_) add_term(k, -c);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [ka, ca] : a.c_)
            for (auto& [kb, cb] : b.c_) r.add_term(ka + kb, ca * cb);
        return r;
    }
    // Exact division; throws DomainError when b does not divide a.
    friend LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b) { return exact_div(a, b); }
    LaurentPoly& operator/=(const LaurentPoly& o) { return *this = exact_div(*this, o); }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw DomainError("division by zero laurent polynomial");
        if (a.is_zero()) return {};
        // a = eps^amin A, b = eps^bmin B with A(0), B(0) nonzero. Since B is
        // coprime to eps, b | a exactly when B | A as ordinary polynomials.
        LaurentPoly rem = a, q;
        const int amin = a.min_exponent();
        const int bmax = b.max_exponent(), bmin = b.min_exponent();
        const C lead = b.coeff(bmax);
        while (!rem.is_zero()) {
            int k = rem.max_exponent() - bmax;
            if (rem.max_exponent() - amin < bmax - bmin)
                throw DomainError("laurent polynomial division is not exact");
            C c = rem.coeff(rem.max_exponent()) / lead;
            LaurentPoly t = monomial(k, c);
            q += t;
            rem -= t * b;
        }
        return q;
    }

    // Substitute eps -> value. Only valid when value is invertible or no
    // negative powers appear.
    template <class V>
    V evaluate(const V& x) const {
        V r(0);
        for (auto& [k, c] : c_) {
            V p(1);
            if (k >= 0)
                for (int i = 0; i < k; ++i) p = p * x;
            else
                for (int i = 0; i < -k; ++i) p = p / x;
            r = r + V(c) * p;
        }
        return r;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (auto& [k, c] : c_) {
            if (!s.empty()) s += " + ";
            std::string cs = c.str();
            if (k == 0)
                s += cs;
            else
                s += "(" + cs + ")*eps^" + std::to_string(k);
        }
        return s;
    }

private:
    void add_term(int k, const C& c) {
        auto it = c_.find(k);
        if (it == c_.end()) {
            if (!c.is_zero()) c_.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }

    std::map<int, C> c_;
};

using LaurentQ = LaurentPoly<Rational>;
using LaurentQi = LaurentPoly<GaussRational>;

template <class C, class D>
LaurentPoly<D> convert_coeffs(const LaurentPoly<C>& p) {
    LaurentPoly<D> r;
    for (auto& [k, c] : p.terms()) r.set(k, D(c));
    return r;
}

}  // namespace galinv
