#pragma once

#include "galinv/matrix.hpp"

#include <json.hpp>

namespace galinv {

using Json = nlohmann::json;

inline Json to_json(const Rational& r) { return r.str(); }
inline Json to_json(const GaussRational& z) { return z.str(); }

template <class C>
Json to_json(const LaurentPoly<C>& p) {
    Json terms = Json::array();
    for (auto& [k, c] : p.terms()) terms.push_back(Json::array({k, to_json(c)}));
    return terms;
}

template <class S>
Json to_json(const Mat<S>& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class S>
S scalar_from_json(const Json& j);

template <>
inline Rational scalar_from_json<Rational>(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return Rational::parse(j.get<std::string>());
}
template <>
inline GaussRational scalar_from_json<GaussRational>(const Json& j) {
    if (j.is_number_integer()) return GaussRational(Rational(j.get<long>()));
    return parse_gaussian(j.get<std::string>());
}
template <>
inline LaurentQ scalar_from_json<LaurentQ>(const Json& j) {
    LaurentQ p;
    for (auto& t : j) p += LaurentQ::monomial(t.at(0).get<int>(), scalar_from_json<Rational>(t.at(1)));
    return p;
}
template <>
inline LaurentQi scalar_from_json<LaurentQi>(const Json& j) {
    LaurentQi p;
    for (auto& t : j) p += LaurentQi::monomial(t.at(0).get<int>(), scalar_from_json<GaussRational>(t.at(1)));
    return p;
}

template <class S>
Mat<S> matrix_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError("matrix json must be an array of rows");
    const Eigen::Index r = static_cast<Eigen::Index>(j.size());
    const Eigen::Index c = r ? static_cast<Eigen::Index>(j.at(0).size()) : 0;
    Mat<S> m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
        if (static_cast<Eigen::Index>(j.at(i).size()) != c) throw DomainError("ragged matrix json");
        for (Eigen::Index k = 0; k < c; ++k) m(i, k) = scalar_from_json<S>(j.at(i).at(k));
    }
    return m;
}

}  // namespace galinv
