// Dense univariate polynomials over an exact field.
//
// The coefficient type F must provide F(0), F(1), the four field operations
// and a member is_zero().  Coefficients are stored lowest degree first with
// no trailing zeros, so the zero polynomial is the empty vector.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rt {

template <class F>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  DensePoly(const F& constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) c_.push_back(constant);
  }

  static DensePoly monomial(const F& coeff, std::size_t degree) {
    std::vector<F> c(degree + 1, F(0));
    c[degree] = coeff;
    return DensePoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const F& lead() const { return c_.back(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }

  DensePoly operator-() const {
    DensePoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  DensePoly& operator+=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return DensePoly(std::move(r));
  }
  DensePoly scaled(const F& s) const {
    if (s.is_zero()) return {};
    DensePoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

  /// Horner evaluation at a point of any algebra that F embeds into.
  template <class E>
  E evaluate(const E& x) const {
    E acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + E(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<F> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
template <class F>
std::pair<DensePoly<F>, DensePoly<F>> divmod(const DensePoly<F>& a, const DensePoly<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {DensePoly<F>(), a};
  std::vector<F> rem = a.coeffs();
  std::vector<F> quot(a.degree() - b.degree() + 1, F(0));
  const auto& bc = b.coeffs();
  const F inv_lead = F(1) / b.lead();
  const std::size_t db = bc.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const F& top = rem[k + db];
    if (top.is_zero()) continue;
    F f = top * inv_lead;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * bc[j];
    quot[k] = std::move(f);
  }
  rem.resize(db);
  return {DensePoly<F>(std::move(quot)), DensePoly<F>(std::move(rem))};
}

template <class F>
DensePoly<F> make_monic(const DensePoly<F>& a) {
  if (a.is_zero()) return a;
  return a.scaled(F(1) / a.lead());
}

/// Monic greatest common divisor (zero if both inputs are zero).
template <class F>
DensePoly<F> gcd(DensePoly<F> a, DensePoly<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
template <class F>
struct ExtGcd {
  DensePoly<F> g, s, t;
};

template <class F>
ExtGcd<F> ext_gcd(const DensePoly<F>& a, const DensePoly<F>& b) {
  DensePoly<F> r0 = a, r1 = b;
  DensePoly<F> s0(F(1)), s1, t0, t1(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    auto t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F inv = F(1) / r0.lead();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

}  // namespace rt
