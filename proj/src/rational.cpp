#include "galinv/rational.hpp"

#include <cctype>
#include <ostream>

namespace galinv {

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (!s.empty() && s[0] == '+') s = s.substr(1);
    if (s.empty()) throw DomainError("empty rational literal");
    auto dot = s.find('.');
    try {
        if (dot != std::string::npos) {
            std::string intpart = s.substr(0, dot);
            std::string frac = s.substr(dot + 1);
            bool neg = !intpart.empty() && intpart[0] == '-';
            if (neg || (!intpart.empty() && intpart[0] == '+')) intpart = intpart.substr(1);
            if (intpart.empty()) intpart = "0";
            for (char c : intpart + frac)
                if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("bad decimal literal: " + text);
            mpz_class n(intpart + frac, 10);
            mpz_class d;
            mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
            Rational r(n, d);
            return neg ? -r : r;
        }
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(mpz_class(s, 10));
        mpz_class n(s.substr(0, slash), 10), d(s.substr(slash + 1), 10);
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw DomainError("bad rational literal: " + text);
    }
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero rational");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& r, int k) {
    if (k < 0) return pow(Rational(1) / r, -k);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), r.raw().get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(d.get_mpz_t(), r.raw().get_den_mpz_t(), static_cast<unsigned long>(k));
    return Rational(n, d);
}

}  // namespace galinv
