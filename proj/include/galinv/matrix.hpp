#pragma once

#include "galinv/laurent.hpp"
#include "galinv/multipoly.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace galinv::detail {
template <class S>
struct ExactNumTraits : Eigen::GenericNumTraits<S> {
    using Real = S;
    using NonInteger = S;
    using Literal = S;
    using Nested = S;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 40,
        MulCost = 80
    };
    static S epsilon() { return S(0); }
    static S dummy_precision() { return S(0); }
    static S highest() { return S(0); }
    static S lowest() { return S(0); }
    static int digits10() { return 0; }
};
}  // namespace galinv::detail

namespace Eigen {
template <>
struct NumTraits<galinv::Rational> : galinv::detail::ExactNumTraits<galinv::Rational> {};
template <class T>
struct NumTraits<galinv::Gaussian<T>> : galinv::detail::ExactNumTraits<galinv::Gaussian<T>> {};
template <class C>
struct NumTraits<galinv::LaurentPoly<C>> : galinv::detail::ExactNumTraits<galinv::LaurentPoly<C>> {};
template <class C>
struct NumTraits<galinv::MultiPoly<C>> : galinv::detail::ExactNumTraits<galinv::MultiPoly<C>> {};
}  // namespace Eigen

namespace galinv {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using MatQ = Mat<Rational>;
using MatQi = Mat<GaussRational>;
using MatLQ = Mat<LaurentQ>;
using MatLQi = Mat<LaurentQi>;
using MatPQ = Mat<PolyQ>;

class NotNilpotent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Limit eps -> 0 of a Laurent matrix that has a negative power somewhere
class SingularLimit : public std::runtime_error {
public:
    SingularLimit(Eigen::Index row, Eigen::Index col, int pole_order)
        : std::runtime_error("limit diverges at entry (" + std::to_string(row) + "," + std::to_string(col) +
                             ") with pole order " + std::to_string(pole_order)),
          row_(row), col_(col), order_(pole_order) {}
    Eigen::Index row() const { return row_; }
    Eigen::Index col() const { return col_; }
    int pole_order() const { return order_; }

private:
    Eigen::Index row_, col_;
    int order_;
};

template <class S>
Mat<S> identity(Eigen::Index n) {
    Mat<S> m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = S(i == j ? 1 : 0);
    return m;
}

template <class S>
Mat<S> zeros(Eigen::Index r, Eigen::Index c) {
    Mat<S> m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = S(0);
    return m;
}

template <class S>
Mat<S> mat_mul(const Mat<S>& a, const Mat<S>& b) {
    if (a.cols() != b.rows())
        throw DomainError("matrix product dimension mismatch " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
    Mat<S> r = zeros<S>(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

template <class S>
Mat<S> mat_add(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix sum dimension mismatch");
    Mat<S> r(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.size(); ++i) r(i) = a(i) + b(i);
    return r;
}

template <class S>
Mat<S> mat_sub(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix difference dimension mismatch");
    Mat<S> r(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.size(); ++i) r(i) = a(i) - b(i);
    return r;
}

template <class S>
Mat<S> mat_scale(const Mat<S>& a, const S& s) {
    Mat<S> r(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.size(); ++i) r(i) = a(i) * s;
    return r;
}

template <class S>
Mat<S> commutator(const Mat<S>& a, const Mat<S>& b) {
    return mat_sub(mat_mul(a, b), mat_mul(b, a));
}

template <class S>
bool mat_equal(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (!(a(i) == b(i))) return false;
    return true;
}

template <class S>
bool is_zero_matrix(const Mat<S>& a) {
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (!a(i).is_zero()) return false;
    return true;
}

template <class S, class Fn>
auto mat_map(const Mat<S>& a, Fn&& f) {
    using T = std::decay_t<decltype(f(a(0, 0)))>;
    Mat<T> r(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = f(a(i, j));
    return r;
}

template <class S>
Mat<S> block_diag(const Mat<S>& a, const Mat<S>& b) {
    Mat<S> r = zeros<S>(a.rows() + b.rows(), a.cols() + b.cols());
    r.block(0, 0, a.rows(), a.cols()) = a;
    r.block(a.rows(), a.cols(), b.rows(), b.cols()) = b;
    return r;
}

// exp(M) for nilpotent M, exact: the series is finite. Throws NotNilpotent
// when M^n != 0 for n = dim.
template <class S>
Mat<S> nilpotent_exp(const Mat<S>& m) {
    if (m.rows() != m.cols()) throw DomainError("nilpotent_exp needs a square matrix");
    const Eigen::Index n = m.rows();
    Mat<S> result = identity<S>(n);
    Mat<S> power = identity<S>(n);
    Rational inv_fact(1);
    for (Eigen::Index k = 1; k <= n; ++k) {
        power = mat_mul(power, m);
        if (is_zero_matrix(power)) return result;
        inv_fact /= Rational(static_cast<long>(k));
        result = mat_add(result, mat_scale(power, S(inv_fact)));
    }
    throw NotNilpotent("matrix power " + std::to_string(n) + " does not vanish");
}

// Entrywise eps -> 0 limit
template <class C>
Mat<C> laurent_limit(const Mat<LaurentPoly<C>>& m) {
    Mat<C> r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const auto& p = m(i, j);
            if (!p.is_zero() && p.min_exponent() < 0) throw SingularLimit(i, j, -p.min_exponent());
            r(i, j) = p.coeff(0);
        }
    return r;
}

namespace detail {
template <class S>
bool is_unit(const S& s) {
    return !s.is_zero();
}
template <class C>
bool is_unit(const LaurentPoly<C>& s) {
    return s.is_monomial();
}
template <class C>
bool is_unit(const MultiPoly<C>& s) {
    return s.is_constant() && !s.is_zero();
}
}  // namespace detail

// Fraction-free Gauss-Jordan elimination on [A | I]. It ends at [d I | d A^-1]
// where d = +-det A, using only exact divisions by previous pivots, so it
// works over any integral domain. The inverse exists in the ring iff d is a
// unit there.
template <class S>
Mat<S> inverse(const Mat<S>& a) {
    if (a.rows() != a.cols()) throw DomainError("inverse of non-square matrix");
    const Eigen::Index n = a.rows();
    Mat<S> m = zeros<S>(n, 2 * n);
    m.block(0, 0, n, n) = a;
    for (Eigen::Index i = 0; i < n; ++i) m(i, n + i) = S(1);
    S prev(1);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) throw DomainError("matrix is singular");
        if (p != k) m.row(p).swap(m.row(k));
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == k) continue;
            for (Eigen::Index j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = S(0);
        }
        prev = m(k, k);
    }
    Mat<S> inv(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const S& d = m(i, i);
        if (!detail::is_unit(d)) throw DomainError("determinant " + d.str() + " is not a unit of the ring");
        for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = m(i, n + j) / d;
    }
    return inv;
}

}  // namespace galinv
