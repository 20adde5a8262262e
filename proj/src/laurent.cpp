#include "rtorsion/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace rt {

LaurentPoly::LaurentPoly(long low, std::vector<Cyclotomic> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }

LaurentPoly LaurentPoly::monomial(const Cyclotomic& coeff, long exponent) {
  LaurentPoly r;
  if (coeff.is_zero()) return r;
  r.low_ = exponent;
  r.c_.push_back(coeff);
  return r;
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  std::size_t lead_zeros = 0;
  while (lead_zeros < c_.size() && c_[lead_zeros].is_zero()) ++lead_zeros;
  if (lead_zeros > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead_zeros));
    low_ += static_cast<long>(lead_zeros);
  }
  if (c_.empty()) low_ = 0;
}

Cyclotomic LaurentPoly::coeff(long exponent) const {
  if (c_.empty() || exponent < low_ || exponent > high()) return Cyclotomic(0);
  return c_[exponent - low_];
}

int LaurentPoly::order() const {
  long o = 1;
  for (const auto& c : c_) o = lcm_order(o, c.order());
  return static_cast<int>(o);
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r = *this;
  if (!r.c_.empty()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Cyclotomic& s) const {
  if (s.is_zero()) return {};
  LaurentPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

Cyclotomic LaurentPoly::evaluate(const Cyclotomic& x) const {
  if (c_.empty()) return Cyclotomic(0);
  Cyclotomic acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  if (low_ == 0) return acc;
  if (x.is_zero()) throw std::domain_error("evaluating a Laurent polynomial with negative powers at 0");
  Cyclotomic base = low_ > 0 ? x : x.inverse();
  Cyclotomic p(1);
  for (long k = 0; k < (low_ > 0 ? low_ : -low_); ++k) p *= base;
  return acc * p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  long lo = std::min(low_, o.low_);
  long hi = std::max(high(), o.high());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Cyclotomic(0));
    low_ = lo;
  }
  c_.resize(static_cast<std::size_t>(hi - lo + 1), Cyclotomic(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[o.low_ - lo + static_cast<long>(i)] += o.c_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Cyclotomic> r(a.c_.size() + b.c_.size() - 1, Cyclotomic(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return LaurentPoly(a.low_ + b.low_, std::move(r));
}

std::string LaurentPoly::str(const std::string& var, const std::string& zeta_var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Cyclotomic& c = c_[i];
    if (c.is_zero()) continue;
    long e = low_ + static_cast<long>(i);
    std::string mono;
    if (e != 0) mono = e == 1 ? var : var + "^" + std::to_string(e);
    if (c.is_rational()) {
      Rational x = c.to_rational();
      Rational mag = abs(x);
      if (first) {
        if (x.sign() < 0) os << "-";
      } else {
        os << (x.sign() < 0 ? " - " : " + ");
      }
      if (mono.empty()) {
        os << mag.str();
      } else if (mag == Rational(1)) {
        os << mono;
      } else {
        os << (mag.is_integer() ? mag.str() : "(" + mag.str() + ")") << "*" << mono;
      }
    } else {
      if (!first) os << " + ";
      os << "(" << c.str(zeta_var) << ")";
      if (!mono.empty()) os << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("Laurent polynomial division by zero");
  if (a.is_zero()) return {};
  if (b.coeffs().size() == 1) {
    Cyclotomic inv = b.coeffs()[0].inverse();
    return a.scaled(inv).shifted(-b.low());
  }
  auto [q, r] = divmod(a.to_dense(), b.to_dense());
  if (!r.is_zero()) throw std::domain_error("Laurent polynomial division is not exact");
  return LaurentPoly(a.low() - b.low(), q.coeffs());
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto g = gcd(a.to_dense(), b.to_dense());
  return LaurentPoly(0, g.coeffs());
}

LaurentRational::LaurentRational(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("fraction with zero denominator");
  if (num.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  LaurentPoly n = num, d = den;
  if (d.coeffs().size() > 1 && n.coeffs().size() > 1) {
    LaurentPoly g = gcd(n, d);
    if (g.coeffs().size() > 1) {
      n = exact_divide(n, g);
      d = exact_divide(d, g);
    }
  }
  Cyclotomic lead_inv = d.coeffs().back().inverse();
  long shift = d.low();
  num_ = n.scaled(lead_inv).shifted(-shift);
  den_ = d.scaled(lead_inv).shifted(-shift);
}

Cyclotomic LaurentRational::constant() const {
  if (!is_constant()) throw std::domain_error("fraction is not a constant: " + str());
  return num_.coeff(0);
}

int LaurentRational::order() const { return static_cast<int>(lcm_order(num_.order(), den_.order())); }

LaurentRational LaurentRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero fraction");
  return LaurentRational(den_, num_);
}

Cyclotomic LaurentRational::evaluate(const Cyclotomic& x) const {
  Cyclotomic d = den_.evaluate(x);
  if (d.is_zero()) throw std::domain_error("denominator vanishes at the evaluation point");
  return num_.evaluate(x) / d;
}

LaurentRational operator+(const LaurentRational& a, const LaurentRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return LaurentRational(a.num_ + b.num_, a.den_);
  return LaurentRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LaurentRational operator*(const LaurentRational& a, const LaurentRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial())
    return LaurentRational(a.num_ * b.num_, LaurentPoly(1), LaurentRational::Reduced{});
  return LaurentRational(a.num_ * b.num_, a.den_ * b.den_);
}

std::string LaurentRational::str(const std::string& var, const std::string& zeta_var) const {
  if (is_polynomial()) return num_.str(var, zeta_var);
  return "(" + num_.str(var, zeta_var) + ")/(" + den_.str(var, zeta_var) + ")";
}

}  // namespace rt
