#pragma once

#include "galinv/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace galinv {

using SparseVec = std::map<size_t, Rational>;

// Incremental row echelon form over Q. Each pivot row has its pivot at the
// smallest column and a unit pivot entry.
class Echelon {
public:
    // Reduces v against the pivot rows; returns the remainder
    SparseVec reduce(SparseVec v) const;
    // Adds v; returns false if it was already in the span
    bool insert(SparseVec v);
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    size_t rank() const { return rows_.size(); }
    // Solution of the system whose right-hand side is column n, with free
    // unknowns zero
    std::vector<Rational> back_substitute(size_t n) const;

private:
    std::map<size_t, SparseVec> rows_;  // pivot column -> row
};

// Solves sum_j a_ij x_j = b_i exactly. Free unknowns are set to zero;
// nullopt when the system is inconsistent.
class LinearSystem {
public:
    explicit LinearSystem(size_t unknowns) : n_(unknowns) {}
    void add(const SparseVec& coeffs, const Rational& rhs);
    std::optional<std::vector<Rational>> solve() const;
    size_t unknowns() const { return n_; }

private:
    size_t n_;
    std::vector<std::pair<SparseVec, Rational>> eqs_;
};

}  // namespace galinv
