#pragma once

#include "galinv/gaussian.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <type_traits>
#include <vector>

namespace galinv {

using VarList = std::shared_ptr<const std::vector<std::string>>;

inline VarList make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

// Exponent vector packed one byte per variable. std::string gives us small
// buffer storage and memcmp ordering for free.
using Exponents = std::string;

// Sparse multivariate polynomial over C. Every non-constant polynomial carries
// an immutable variable list; constants carry none and combine with anything.
template <class C>
class MultiPoly {
public:
    using Coeff = C;

    MultiPoly() = default;
    MultiPoly(int v) { if (v != 0) terms_.emplace(Exponents(), C(v)); }
    template <class U>
        requires(std::is_constructible_v<C, const U&> && !std::is_same_v<std::decay_t<U>, MultiPoly> &&
                 !std::is_same_v<std::decay_t<U>, int>)
    MultiPoly(const U& c) {
        C cc(c);
        if (!cc.is_zero()) terms_.emplace(Exponents(), std::move(cc));
    }

    static MultiPoly var(const VarList& vars, size_t i) {
        MultiPoly p;
        p.vars_ = vars;
        Exponents e(vars->size(), '\0');
        e[i] = 1;
        p.terms_.emplace(std::move(e), C(1));
        return p;
    }
    static MultiPoly var(const VarList& vars, const std::string& name) { return var(vars, index_of(vars, name)); }
    static MultiPoly monomial(const VarList& vars, const Exponents& e, const C& c) {
        MultiPoly p;
        if (c.is_zero()) return p;
        p.vars_ = vars;
        p.terms_.emplace(e, c);
        p.normalize_constant();
        return p;
    }
    static size_t index_of(const VarList& vars, const std::string& name) {
        auto it = std::find(vars->begin(), vars->end(), name);
        if (it == vars->end()) throw DomainError("unknown polynomial variable " + name);
        return static_cast<size_t>(it - vars->begin());
    }

    const VarList& vars() const { return vars_; }
    size_t nvars() const { return vars_ ? vars_->size() : 0; }
    const std::map<Exponents, C>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                                  [](char c) { return c == 0; }));
    }
    C constant_term() const {
        for (auto& [e, c] : terms_)
            if (std::all_of(e.begin(), e.end(), [](char x) { return x == 0; })) return c;
        return C(0);
    }

    int total_degree() const {
        int d = 0;
        for (auto& [e, c] : terms_) {
            int s = 0;
            for (char x : e) s += static_cast<unsigned char>(x);
            d = std::max(d, s);
        }
        return d;
    }
    int degree_in(size_t i) const {
        int d = 0;
        for (auto& [e, c] : terms_)
            if (i < e.size()) d = std::max(d, static_cast<int>(static_cast<unsigned char>(e[i])));
        return d;
    }

    // Re-express over a superset variable list (by name)
    MultiPoly over(const VarList& target) const {
        if (vars_ == target) return *this;
        MultiPoly r;
        r.vars_ = target;
        std::vector<size_t> map(nvars());
        for (size_t i = 0; i < nvars(); ++i) map[i] = index_of(target, (*vars_)[i]);
        for (auto& [e, c] : terms_) {
            Exponents ne(target->size(), '\0');
            for (size_t i = 0; i < e.size(); ++i) ne[map[i]] = e[i];
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return accumulate(o, false); }
    MultiPoly& operator-=(const MultiPoly& o) { return accumulate(o, true); }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (b.is_constant() && b.nvars() == 0) return a.scaled(b.constant_term());
        if (a.is_constant() && a.nvars() == 0) return b.scaled(a.constant_term());
        VarList v = common_vars(a, b);
        MultiPoly r;
        r.vars_ = v;
        const MultiPoly& aa = a.vars_ == v ? a : a.over(v);
        const MultiPoly bb = b.vars_ == v ? b : b.over(v);
        const size_t n = v->size();
        Exponents e(n, '\0');
        for (auto& [ea, ca] : aa.terms_)
            for (auto& [eb, cb] : bb.terms_) {
                for (size_t i = 0; i < n; ++i) e[i] = static_cast<char>(ea[i] + eb[i]);
                auto it = r.terms_.find(e);
                if (it == r.terms_.end())
                    r.terms_.emplace(e, ca * cb);
                else {
                    it->second += ca * cb;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        r.normalize_constant();
        return r;
    }
    // Division only by nonzero constants
    friend MultiPoly operator/(const MultiPoly& a, const MultiPoly& b) {
        if (!b.is_constant() || b.is_zero()) throw DomainError("polynomial division by a non-constant");
        return a.scaled(C(1) / b.constant_term());
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
        if (a.nvars() && b.nvars() && *a.vars_ != *b.vars_) return false;
        return (a - b).is_zero();
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly scaled(const C& s) const {
        if (s.is_zero()) return {};
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c *= s;
        return r;
    }

    MultiPoly derivative(size_t i) const {
        MultiPoly r;
        if (i >= nvars()) return r;
        r.vars_ = vars_;
        for (auto& [e, c] : terms_) {
            unsigned k = static_cast<unsigned char>(e[i]);
            if (k == 0) continue;
            Exponents ne = e;
            ne[i] = static_cast<char>(k - 1);
            r.terms_.emplace(std::move(ne), c * C(static_cast<int>(k)));
        }
        r.normalize_constant();
        return r;
    }
    MultiPoly derivative(const std::string& name) const {
        if (!vars_) return {};
        auto it = std::find(vars_->begin(), vars_->end(), name);
        if (it == vars_->end()) return {};
        return derivative(static_cast<size_t>(it - vars_->begin()));
    }

    // Coefficient of x_i^k as a polynomial in the remaining variables
    MultiPoly coefficient(size_t i, int k) const {
        MultiPoly r;
        r.vars_ = vars_;
        for (auto& [e, c] : terms_)
            if (i < e.size() && static_cast<unsigned char>(e[i]) == k) {
                Exponents ne = e;
                ne[i] = 0;
                r.terms_.emplace(std::move(ne), c);
            }
        if (i >= nvars() && k == 0) return *this;
        r.normalize_constant();
        return r;
    }

    template <class V>
    V evaluate(const std::vector<V>& x) const {
        V r(0);
        for (auto& [e, c] : terms_) {
            V t = V(c);
            for (size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < static_cast<unsigned char>(e[i]); ++k) t = t * x[i];
            r = r + t;
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string mono;
            for (size_t i = 0; i < e.size(); ++i) {
                int k = static_cast<unsigned char>(e[i]);
                if (k == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += (*vars_)[i];
                if (k > 1) mono += "^" + std::to_string(k);
            }
            std::string cs = c.str();
            if (!s.empty()) s += " + ";
            if (mono.empty())
                s += cs;
            else if (c == C(1))
                s += mono;
            else
                s += "(" + cs + ")*" + mono;
        }
        return s;
    }

    static VarList common_vars(const MultiPoly& a, const MultiPoly& b) {
        if (a.vars_ == b.vars_) return a.vars_;
        if (a.nvars() == 0) return b.vars_;
        if (b.nvars() == 0) return a.vars_;
        if (*a.vars_ == *b.vars_) return a.vars_;
        throw DomainError("polynomials over incompatible variable lists");
    }

private:
    MultiPoly& accumulate(const MultiPoly& o, bool negate) {
        if (o.terms_.empty()) return *this;
        if (terms_.empty() && !negate) return *this = o;
        VarList v = common_vars(*this, o);
        if (vars_ != v) *this = over_or_promote(v);
        const MultiPoly ob = o.vars_ == v ? MultiPoly() : o.over_or_promote(v);
        const MultiPoly& src = o.vars_ == v ? o : ob;
        for (auto& [e, c] : src.terms_) {
            auto it = terms_.find(e);
            if (it == terms_.end())
                terms_.emplace(e, negate ? -c : c);
            else {
                if (negate)
                    it->second -= c;
                else
                    it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        normalize_constant();
        return *this;
    }

    MultiPoly over_or_promote(const VarList& v) const {
        if (!v) return *this;
        if (nvars() == 0) {
            MultiPoly r;
            r.vars_ = v;
            for (auto& [e, c] : terms_) r.terms_.emplace(Exponents(v->size(), '\0'), c);
            return r;
        }
        return over(v);
    }

    // Constants drop their variable list so they stay compatible with all
    // other polynomials.
    void normalize_constant() {
        if (!vars_) return;
        if (terms_.empty()) {
            vars_.reset();
            return;
        }
        if (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                              [](char c) { return c == 0; })) {
            C c = terms_.begin()->second;
            terms_.clear();
            terms_.emplace(Exponents(), std::move(c));
            vars_.reset();
        }
    }

    VarList vars_;
    std::map<Exponents, C> terms_;
};

using PolyQ = MultiPoly<Rational>;

// Simultaneous substitution x_i -> images[i] with memoised monomial images.
// Repeated application to many polynomials over the same variables is the
// hot path of every pullback.
template <class C>
class Substitution {
public:
    Substitution(VarList vars, std::vector<MultiPoly<C>> images) : vars_(std::move(vars)), images_(std::move(images)) {
        if (images_.size() != vars_->size()) throw DomainError("substitution arity mismatch");
    }

    MultiPoly<C> apply(const MultiPoly<C>& p) {
        if (p.nvars() == 0) return p;
        const MultiPoly<C> q = p.vars() == vars_ ? p : p.over(vars_);
        MultiPoly<C> r;
        for (auto& [e, c] : q.terms()) r += image(e).scaled(c);
        return r;
    }

    const MultiPoly<C>& image(const Exponents& e) {
        auto it = memo_.find(e);
        if (it != memo_.end()) return it->second;
        size_t i = 0;
        while (i < e.size() && e[i] == 0) ++i;
        MultiPoly<C> val;
        if (i == e.size())
            val = MultiPoly<C>(1);
        else {
            Exponents lower = e;
            lower[i] = static_cast<char>(lower[i] - 1);
            val = image(lower) * images_[i];
        }
        return memo_.emplace(e, std::move(val)).first->second;
    }

private:
    VarList vars_;
    std::vector<MultiPoly<C>> images_;
    std::map<Exponents, MultiPoly<C>> memo_;
};

template <class C>
MultiPoly<C> substitute(const MultiPoly<C>& p, size_t var, const MultiPoly<C>& value) {
    std::vector<MultiPoly<C>> imgs;
    for (size_t i = 0; i < p.nvars(); ++i) imgs.push_back(i == var ? value : MultiPoly<C>::var(p.vars(), i));
    Substitution<C> s(p.vars(), std::move(imgs));
    return s.apply(p);
}

}  // namespace galinv
