// Exact arithmetic in cyclotomic fields Q(zeta_p).
#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include "rtorsion/dense_poly.hpp"
#include "rtorsion/rational.hpp"

namespace rt {

/// Coefficients of the p-th cyclotomic polynomial, lowest degree first.
/// Computed by dividing x^p - 1 by Phi_d for every proper divisor d of p.
std::vector<Integer> cyclotomic_polynomial(int p);

/// Euler's totient.
int euler_phi(int n);

/// Element of Q(zeta_p), stored in the power basis 1, zeta, ..., zeta^(phi(p)-1).
///
/// Elements of different orders mix freely: operands are embedded into
/// Q(zeta_lcm) first.  Rational values are normalized to order 1, so the
/// order of a value is only an upper bound on the field it needs.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(int v) : c_{Rational(v)} { trim_rational(); }  // NOLINT(google-explicit-constructor)
  Cyclotomic(long v) : c_{Rational(v)} { trim_rational(); }  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& v) : c_{v} { trim_rational(); }  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Integer& v) : c_{Rational(v)} { trim_rational(); }  // NOLINT(google-explicit-constructor)

  /// zeta_order^k; k may be negative.
  static Cyclotomic zeta(int order, long k = 1);
  /// Builds sum coeffs[i] * zeta^i, reducing modulo Phi_order (any length accepted).
  static Cyclotomic from_power_coeffs(int order, const std::vector<Rational>& coeffs);

  int order() const { return order_; }
  /// Power-basis coordinates at the stored order; empty for zero.
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Power-basis coordinates after embedding into Q(zeta_order); requires order() | order.
  std::vector<Rational> coords_at(int order) const;

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return order_ == 1 && c_.size() == 1 && c_[0] == Rational(1); }
  bool is_rational() const { return order_ == 1; }
  /// Throws std::domain_error when the value is irrational.
  Rational to_rational() const;

  Cyclotomic promoted(int order) const;
  Cyclotomic inverse() const;
  /// Field automorphism zeta -> zeta^k (gcd(k, order) = 1).
  Cyclotomic galois(long k) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Human-readable polynomial in `var`, highest power first, e.g. "2*z - 1".
  std::string str(const std::string& var = "z") const;
  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) { return os << a.str(); }

 private:
  Cyclotomic(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) { normalize(); }
  void trim_rational() {
    if (!c_.empty() && c_[0].is_zero()) c_.clear();
  }
  void normalize();

  int order_ = 1;
  std::vector<Rational> c_;
};

/// The automorphism zeta -> zeta^-1 (complex conjugation under zeta -> e^{2 pi i/p}).
Cyclotomic conjugate(const Cyclotomic& z);
/// z * conjugate(z); lies in the maximal real subfield.
Cyclotomic abs_square(const Cyclotomic& z);
/// abs_square certified rational; throws std::domain_error otherwise.
Rational abs_square_rational(const Cyclotomic& z);

/// Lexicographic order on coordinates after embedding both values into Q(zeta_order).
std::strong_ordering compare_at(const Cyclotomic& a, const Cyclotomic& b, int order);

long lcm_order(long a, long b);

/// z^k; negative k inverts.
Cyclotomic power(const Cyclotomic& z, long k);

}  // namespace rt
