#pragma once

#include "galinv/rational.hpp"

#include <string>
#include <type_traits>

namespace galinv {

// Element a + b i of T[i]
template <class T>
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(int v) : re_(v), im_(0) {}
    Gaussian(const T& re) : re_(re), im_(0) {}
    Gaussian(const T& re, const T& im) : re_(re), im_(im) {}

    static Gaussian i() { return Gaussian(T(0), T(1)); }

    const T& re() const { return re_; }
    const T& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    Gaussian conj() const { return Gaussian(re_, -im_); }
    T norm2() const { return re_ * re_ + im_ * im_; }

    Gaussian operator-() const { return Gaussian(-re_, -im_); }
    Gaussian& operator+=(const Gaussian& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Gaussian& operator*=(const Gaussian& o) {
        T r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o) {
        T n = o.norm2();
        if (n.is_zero()) throw DomainError("division by zero gaussian");
        Gaussian p = *this * o.conj();
        re_ = p.re_ / n;
        im_ = p.im_ / n;
        return *this;
    }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    // "a+b i" / "a-b i"
    std::string str() const {
        std::string s = re_.str();
        if (im_.sign() < 0) return s + "-" + (-im_).str() + " i";
        return s + "+" + im_.str() + " i";
    }

private:
    T re_{};
    T im_{};
};

using GaussRational = Gaussian<Rational>;

GaussRational parse_gaussian(const std::string& s);

inline GaussRational conj(const GaussRational& z) { return z.conj(); }

}  // namespace galinv
