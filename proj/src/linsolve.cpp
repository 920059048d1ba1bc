#include "galinv/linsolve.hpp"

namespace galinv {

namespace {
void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
    for (auto& [k, v] : x) {
        auto [it, fresh] = y.try_emplace(k, a * v);
        if (!fresh) {
            it->second += a * v;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}
}  // namespace

SparseVec Echelon::reduce(SparseVec v) const {
    auto it = v.begin();
    while (it != v.end()) {
        auto p = rows_.find(it->first);
        if (p == rows_.end()) {
            ++it;
            continue;
        }
        const size_t col = it->first;
        Rational f = -it->second;
        axpy(v, f, p->second);  // removes col and touches only larger columns
        it = v.upper_bound(col);
    }
    return v;
}

bool Echelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Rational inv = Rational(1) / v.begin()->second;
    for (auto& [k, x] : v) x *= inv;
    rows_.emplace(v.begin()->first, std::move(v));
    return true;
}

std::vector<Rational> Echelon::back_substitute(size_t n) const {
    std::vector<Rational> x(n);
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        Rational v;
        for (auto& [k, a] : it->second) {
            if (k == n)
                v += a;
            else if (k != it->first)
                v -= a * x[k];
        }
        x[it->first] = v;
    }
    return x;
}

void LinearSystem::add(const SparseVec& coeffs, const Rational& rhs) { eqs_.emplace_back(coeffs, rhs); }

std::optional<std::vector<Rational>> LinearSystem::solve() const {
    // the right-hand side lives in column n_
    Echelon ech;
    for (auto& [a, b] : eqs_) {
        SparseVec row = a;
        if (!b.is_zero()) row[n_] = b;
        SparseVec r = ech.reduce(row);
        if (r.empty()) continue;
        if (r.begin()->first == n_) return std::nullopt;
        ech.insert(std::move(r));
    }
    return ech.back_substitute(n_);
}

}  // namespace galinv
