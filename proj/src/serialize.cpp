#include "rtorsion/serialize.hpp"

#include <stdexcept>

namespace rt {

Json encode(const Rational& x) { return x.str(); }

Json encode(const Cyclotomic& x) {
  if (x.is_rational()) return encode(x.to_rational());
  Json coeffs = Json::array();
  for (const auto& c : x.coords_at(x.order())) coeffs.push_back(encode(c));
  return {{"order", x.order()}, {"coeffs", coeffs}};
}

Json encode(const LaurentPoly& x) {
  Json terms = Json::array();
  if (x.is_zero()) return terms;
  for (long e = x.low(); e <= x.high(); ++e) {
    Cyclotomic c = x.coeff(e);
    if (!c.is_zero()) terms.push_back(Json::array({e, encode(c)}));
  }
  return terms;
}

Json encode(const LaurentRational& x) { return {{"num", encode(x.num())}, {"den", encode(x.den())}}; }

Json encode(const TorsionValue& x) {
  Json j = encode(x.value());
  j["pretty"] = x.str();
  return j;
}

Rational decode_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

Cyclotomic decode_cyclotomic(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return Cyclotomic(decode_rational(j));
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw std::invalid_argument("expected {order, coeffs} cyclotomic encoding, got " + j.dump());
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(decode_rational(x));
  return Cyclotomic::from_power_coeffs(j.at("order").get<int>(), c);
}

LaurentPoly decode_laurent(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected [[exponent, coeff], ...], got " + j.dump());
  LaurentPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw std::invalid_argument("malformed Laurent term " + term.dump());
    p += LaurentPoly::monomial(decode_cyclotomic(term[1]), term[0].get<long>());
  }
  return p;
}

LaurentRational decode_laurent_rational(const Json& j) {
  return LaurentRational(decode_laurent(j.at("num")), decode_laurent(j.at("den")));
}

namespace {

template <class S, class F>
Matrix<S> decode_matrix(const Json& j, F&& decode_entry) {
  const Json& rows = j.is_object() ? j.at("entries") : j;
  if (!rows.is_array()) throw std::invalid_argument("expected a matrix as a list of rows");
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? Eigen::Index(0) : static_cast<Eigen::Index>(rows[0].size());
  Matrix<S> m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
    for (Eigen::Index k = 0; k < c; ++k) m(i, k) = decode_entry(rows[i][k]);
  }
  return m;
}

}  // namespace

Matrix<Cyclotomic> decode_cyclotomic_matrix(const Json& j) {
  return decode_matrix<Cyclotomic>(j, [](const Json& e) { return decode_cyclotomic(e); });
}

Matrix<LaurentPoly> decode_laurent_matrix(const Json& j) {
  return decode_matrix<LaurentPoly>(j, [](const Json& e) { return decode_laurent(e); });
}

}  // namespace rt
