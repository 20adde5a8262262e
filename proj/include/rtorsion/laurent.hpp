// Laurent polynomials in t over cyclotomic fields, and their fractions.
#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rtorsion/cyclotomic.hpp"
#include "rtorsion/dense_poly.hpp"

namespace rt {

/// sum_k c_k t^k with finitely many nonzero c_k in Q(zeta).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int v) : LaurentPoly(Cyclotomic(v)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& v) : LaurentPoly(Cyclotomic(v)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Cyclotomic& v) {  // NOLINT(google-explicit-constructor)
    if (!v.is_zero()) c_.push_back(v);
  }
  /// c_0 t^low + c_1 t^(low+1) + ...
  LaurentPoly(long low, std::vector<Cyclotomic> coeffs);
  static LaurentPoly monomial(const Cyclotomic& coeff, long exponent);
  static LaurentPoly t() { return monomial(Cyclotomic(1), 1); }

  bool is_zero() const { return c_.empty(); }
  /// Lowest and highest exponents with nonzero coefficient (undefined for zero).
  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
  Cyclotomic coeff(long exponent) const;
  const std::vector<Cyclotomic>& coeffs() const { return c_; }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && low_ == 0); }
  /// Least common multiple of coefficient orders.
  int order() const;

  LaurentPoly shifted(long k) const;
  LaurentPoly scaled(const Cyclotomic& s) const;
  /// Substitutes t = x.
  Cyclotomic evaluate(const Cyclotomic& x) const;
  /// Coefficients from t^low() upward as an ordinary polynomial.
  DensePoly<Cyclotomic> to_dense() const { return DensePoly<Cyclotomic>(c_); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    return a.c_.empty() || (a.low_ == b.low_ && a.c_ == b.c_);
  }

  std::string str(const std::string& var = "t", const std::string& zeta_var = "z") const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& a) { return os << a.str(); }

 private:
  void trim();
  long low_ = 0;
  std::vector<Cyclotomic> c_;
};

/// a / b when b divides a in Q(zeta)[t, 1/t]; throws std::domain_error otherwise.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);
/// Monic gcd over Q(zeta)[t], with powers of t removed (t is a unit).
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Element of the fraction field Q(zeta)(t).
///
/// Stored reduced: gcd(num, den) = 1 and den has lowest exponent 0 and
/// leading coefficient 1, so equal fractions have identical members.
class LaurentRational {
 public:
  LaurentRational() : den_(1) {}
  LaurentRational(int v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  LaurentRational(const Rational& v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  LaurentRational(const Cyclotomic& v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  LaurentRational(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  LaurentRational(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == LaurentPoly(1); }
  bool is_constant() const { return num_.is_constant() && is_polynomial(); }
  /// Value of a constant fraction; throws if t occurs.
  Cyclotomic constant() const;
  int order() const;

  LaurentRational inverse() const;
  /// Substitutes t = x; throws std::domain_error if the denominator vanishes there.
  Cyclotomic evaluate(const Cyclotomic& x) const;

  LaurentRational operator-() const { return LaurentRational(-num_, den_, Reduced{}); }
  LaurentRational& operator+=(const LaurentRational& o) { return *this = *this + o; }
  LaurentRational& operator-=(const LaurentRational& o) { return *this = *this - o; }
  LaurentRational& operator*=(const LaurentRational& o) { return *this = *this * o; }
  LaurentRational& operator/=(const LaurentRational& o) { return *this = *this * o.inverse(); }
  friend LaurentRational operator+(const LaurentRational& a, const LaurentRational& b);
  friend LaurentRational operator-(const LaurentRational& a, const LaurentRational& b) { return a + (-b); }
  friend LaurentRational operator*(const LaurentRational& a, const LaurentRational& b);
  friend LaurentRational operator/(const LaurentRational& a, const LaurentRational& b) { return a * b.inverse(); }
  friend bool operator==(const LaurentRational& a, const LaurentRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str(const std::string& var = "t", const std::string& zeta_var = "z") const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentRational& a) { return os << a.str(); }

 private:
  struct Reduced {};
  LaurentRational(LaurentPoly num, LaurentPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace rt
