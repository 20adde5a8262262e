// JSON encodings of the exact scalars.
//
//   Rational        "a/b" (or "a" for integers)
//   Cyclotomic      a Rational string when rational, else {"order": p, "coeffs": [...]}
//   LaurentPoly     [[exponent, coeff], ...] in increasing exponent order
//   LaurentRational {"num": LaurentPoly, "den": LaurentPoly}
#pragma once

#include "json.hpp"

#include "rtorsion/matrix.hpp"
#include "rtorsion/torsion_value.hpp"

namespace rt {

using Json = nlohmann::json;

Json encode(const Rational& x);
Json encode(const Cyclotomic& x);
Json encode(const LaurentPoly& x);
Json encode(const LaurentRational& x);
/// {"num", "den", "pretty"} of the stored representative.
Json encode(const TorsionValue& x);

Rational decode_rational(const Json& j);
Cyclotomic decode_cyclotomic(const Json& j);
LaurentPoly decode_laurent(const Json& j);
LaurentRational decode_laurent_rational(const Json& j);

template <class S>
Json encode_matrix(const Matrix<S>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(encode(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix<Cyclotomic> decode_cyclotomic_matrix(const Json& j);
Matrix<LaurentPoly> decode_laurent_matrix(const Json& j);

}  // namespace rt
