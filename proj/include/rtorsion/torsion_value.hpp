// Torsion values as classes modulo a unit group.
//
// A Reidemeister torsion is only defined up to units (signs, powers of t and
// determinants of the representation).  TorsionValue keeps a representative
// together with the unit group and reduces it to a normal form so classes can
// be compared and sorted.
#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rtorsion/laurent.hpp"

namespace rt {

struct UnitGroupSpec {
  bool sign = true;      // +-1 allowed
  bool t_shift = false;  // t^k allowed
  /// Finite group of roots of unity, closed under products; always contains 1.
  std::vector<Cyclotomic> roots{Cyclotomic(1)};

  /// Closure of the given roots of unity (each must have finite order).
  static UnitGroupSpec generated(bool sign, bool t_shift, const std::vector<Cyclotomic>& generators);
  /// Lcm of the orders of the roots.
  int order() const;
};

class TorsionValue {
 public:
  TorsionValue() = default;
  TorsionValue(LaurentRational value, UnitGroupSpec units) : value_(std::move(value)), units_(std::move(units)) {}

  const LaurentRational& value() const { return value_; }
  const UnitGroupSpec& units() const { return units_; }
  bool is_canonical() const { return canonical_; }
  bool is_zero() const { return value_.is_zero(); }

  std::string str() const { return value_.str(); }

  friend TorsionValue canonicalize(const TorsionValue& v);

 private:
  LaurentRational value_;
  UnitGroupSpec units_;
  bool canonical_ = false;
};

/// Normal form of the unit orbit of v.
///
/// The fraction is reduced with a monic denominator; when t-shifts are units
/// the numerator is shifted to lowest exponent 0; then the orbit under signs
/// and roots of unity is enumerated and the maximum is kept, comparing
/// numerator coefficients from the lowest exponent upward and each
/// coefficient lexicographically on its power-basis coordinates.  Zero is
/// its own class.  Idempotent.
TorsionValue canonicalize(const TorsionValue& v);

/// Equality of unit classes (canonicalizes both sides).
bool same_class(const TorsionValue& a, const TorsionValue& b);

/// Total order on canonical values, used for deterministic output.
std::strong_ordering compare_canonical(const TorsionValue& a, const TorsionValue& b);

}  // namespace rt
