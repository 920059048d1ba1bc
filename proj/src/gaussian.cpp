#include "galinv/gaussian.hpp"

namespace galinv {

GaussRational parse_gaussian(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    if (s.empty()) throw DomainError("empty gaussian literal");
    if (s.back() != 'i') return GaussRational(Rational::parse(s));
    s.pop_back();
    // split at the last sign that is not the leading one
    size_t split = std::string::npos;
    for (size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
            split = k;
            break;
        }
    Rational re(0), im;
    std::string ims;
    if (split == std::string::npos)
        ims = s;
    else {
        re = Rational::parse(s.substr(0, split));
        ims = s.substr(split);
    }
    if (ims.empty() || ims == "+")
        im = Rational(1);
    else if (ims == "-")
        im = Rational(-1);
    else
        im = Rational::parse(ims);
    return GaussRational(re, im);
}

}  // namespace galinv
