#include "rtorsion/torsion_value.hpp"

#include <stdexcept>

namespace rt {

namespace {

constexpr std::size_t kMaxRootGroup = 4096;

std::strong_ordering compare_poly(const LaurentPoly& a, const LaurentPoly& b, int order) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() <=> b.is_zero();
  if (auto c = a.low() <=> b.low(); c != 0) return c;
  if (auto c = a.high() <=> b.high(); c != 0) return c;
  for (long e = a.low(); e <= a.high(); ++e)
    if (auto c = compare_at(a.coeff(e), b.coeff(e), order); c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace

UnitGroupSpec UnitGroupSpec::generated(bool sign, bool t_shift, const std::vector<Cyclotomic>& generators) {
  UnitGroupSpec u;
  u.sign = sign;
  u.t_shift = t_shift;
  for (std::size_t i = 0; i < u.roots.size(); ++i) {
    for (const auto& g : generators) {
      if (g.is_zero()) throw std::invalid_argument("zero is not a unit");
      Cyclotomic x = u.roots[i] * g;
      bool known = false;
      for (const auto& r : u.roots)
        if (r == x) {
          known = true;
          break;
        }
      if (!known) {
        if (u.roots.size() >= kMaxRootGroup) throw std::invalid_argument("unit generators do not have finite order");
        u.roots.push_back(x);
      }
    }
  }
  return u;
}

int UnitGroupSpec::order() const {
  long o = 1;
  for (const auto& r : roots) o = lcm_order(o, r.order());
  return static_cast<int>(o);
}

TorsionValue canonicalize(const TorsionValue& v) {
  if (v.canonical_) return v;
  TorsionValue out;
  out.units_ = v.units_;
  out.canonical_ = true;
  if (v.value_.is_zero()) return out;

  // Fraction is already reduced with monic, unshifted denominator.
  LaurentPoly num = v.value_.num();
  const LaurentPoly& den = v.value_.den();
  if (v.units_.t_shift) num = num.shifted(-num.low());

  const int order = static_cast<int>(
      lcm_order(lcm_order(num.order(), den.order()), v.units_.order()));

  LaurentPoly best;
  bool have = false;
  for (int s : {1, -1}) {
    if (s == -1 && !v.units_.sign) break;
    for (const auto& root : v.units_.roots) {
      LaurentPoly cand = num.scaled(s == 1 ? root : -root);
      if (!have || compare_poly(cand, best, order) > 0) {
        best = std::move(cand);
        have = true;
      }
    }
  }
  out.value_ = LaurentRational(best, den);
  return out;
}

bool same_class(const TorsionValue& a, const TorsionValue& b) {
  return canonicalize(a).value() == canonicalize(b).value();
}

std::strong_ordering compare_canonical(const TorsionValue& a, const TorsionValue& b) {
  const auto& x = a.value();
  const auto& y = b.value();
  int order = static_cast<int>(lcm_order(x.order(), y.order()));
  if (auto c = compare_poly(x.den(), y.den(), order); c != 0) return c;
  return compare_poly(x.num(), y.num(), order);
}

}  // namespace rt
