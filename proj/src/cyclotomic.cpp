#include "rtorsion/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rt {

namespace {

struct PhiData {
  std::vector<Integer> integer_coeffs;
  DensePoly<Rational> poly;
};

int mobius(int n) {
  int result = 1;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    n /= q;
    if (n % q == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

DensePoly<Rational> x_power_minus_one(int d) {
  std::vector<Rational> c(d + 1, Rational(0));
  c[0] = Rational(-1);
  c[d] = Rational(1);
  return DensePoly<Rational>(std::move(c));
}

// Phi_p = prod_{d | p} (x^d - 1)^{mu(p/d)}.
const PhiData& phi_data(int p) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<PhiData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(p); it != cache.end()) return *it->second;

  DensePoly<Rational> num(Rational(1)), den(Rational(1));
  for (int d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    int m = mobius(p / d);
    if (m == 1) num = num * x_power_minus_one(d);
    if (m == -1) den = den * x_power_minus_one(d);
  }
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw std::logic_error("cyclotomic polynomial division left a remainder");
  auto data = std::make_unique<PhiData>();
  data->poly = q;
  for (const auto& c : q.coeffs()) {
    if (!c.is_integer()) throw std::logic_error("cyclotomic polynomial with non-integer coefficient");
    data->integer_coeffs.push_back(c.num());
  }
  auto& ref = *data;
  cache.emplace(p, std::move(data));
  return ref;
}

// Reduces an arbitrary coefficient list modulo the monic Phi_p in place.
void reduce_mod_phi(std::vector<Rational>& c, int p) {
  const auto& phi = phi_data(p).integer_coeffs;
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = c.size(); k-- > deg;) {
    if (c[k].is_zero()) continue;
    Rational top = c[k];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j].is_zero()) continue;
      c[k - deg + j] -= top * Rational(phi[j]);
    }
    c[k] = Rational(0);
  }
  if (c.size() > deg) c.resize(deg);
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int p) {
  if (p < 1) throw std::invalid_argument("cyclotomic polynomial needs p >= 1");
  return phi_data(p).integer_coeffs;
}

int euler_phi(int n) {
  int result = n;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

long lcm_order(long a, long b) { return std::lcm(a, b); }

void Cyclotomic::normalize() {
  if (order_ == 2) {
    // Phi_2 = x + 1 has degree 1: already rational.
    order_ = 1;
  }
  if (order_ > 2) reduce_mod_phi(c_, order_);
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.size() <= 1) order_ = 1;
}

Cyclotomic Cyclotomic::zeta(int order, long k) {
  if (order < 1) throw std::invalid_argument("root of unity order must be positive");
  long e = ((k % order) + order) % order;
  std::vector<Rational> c(e + 1, Rational(0));
  c[e] = Rational(1);
  if (order <= 2) return Cyclotomic(Rational(e == 0 ? 1 : -1));
  return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::from_power_coeffs(int order, const std::vector<Rational>& coeffs) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  if (order <= 2) {
    Rational v(0);
    Rational sgn(1);
    for (const auto& x : coeffs) {
      v += sgn * x;
      if (order == 2) sgn = -sgn;
    }
    return Cyclotomic(v);
  }
  return Cyclotomic(order, coeffs);
}

std::vector<Rational> Cyclotomic::coords_at(int order) const {
  Cyclotomic e = (order == order_) ? *this : promoted(order);
  std::vector<Rational> out(order <= 2 ? 1 : euler_phi(order), Rational(0));
  for (std::size_t i = 0; i < e.c_.size(); ++i) out[i] = e.c_[i];
  return out;
}

Rational Cyclotomic::to_rational() const {
  if (order_ != 1) throw std::domain_error("cyclotomic value is not rational: " + str());
  return c_.empty() ? Rational(0) : c_[0];
}

Cyclotomic Cyclotomic::promoted(int order) const {
  if (order_ == order) return *this;
  if (order_ == 1) {
    Cyclotomic r = *this;
    r.order_ = order <= 2 ? 1 : order;
    return r;
  }
  if (order % order_ != 0)
    throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                                std::to_string(order) + ")");
  const std::size_t step = order / order_;
  std::vector<Rational> c((c_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i * step] = c_[i];
  Cyclotomic r;
  r.order_ = order;
  r.c_ = std::move(c);
  reduce_mod_phi(r.c_, order);
  while (!r.c_.empty() && r.c_.back().is_zero()) r.c_.pop_back();
  // Keep the requested order even if the value happens to be rational, so
  // coords_at sees a consistent basis.
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in cyclotomic field");
  if (order_ == 1) return Cyclotomic(c_[0].inverse());
  const auto& phi = phi_data(order_).poly;
  auto eg = ext_gcd(DensePoly<Rational>(c_), phi);
  if (eg.g.degree() != 0) throw std::logic_error("non-invertible cyclotomic element");
  return Cyclotomic(order_, eg.s.coeffs());
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (order_ == 1) return *this;
  if (std::gcd(k, static_cast<long>(order_)) != 1)
    throw std::invalid_argument("galois exponent must be coprime to the order");
  long kk = ((k % order_) + order_) % order_;
  std::vector<Rational> c((c_.size() - 1) * kk + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::size_t e = (i * kk) % order_;
    if (e >= c.size()) c.resize(e + 1, Rational(0));
    c[e] += c_[i];
  }
  return Cyclotomic(order_, std::move(c));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.is_zero()) return *this;
  if (order_ != o.order_) {
    int L = static_cast<int>(lcm_order(order_, o.order_));
    if (order_ != L) *this = promoted(L);
    if (o.order_ != L) return *this += o.promoted(L);
  }
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) {
    c_.clear();
    order_ = 1;
    return *this;
  }
  if (o.order_ == 1) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (order_ == 1) {
    Rational s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    return *this;
  }
  int L = static_cast<int>(lcm_order(order_, o.order_));
  const Cyclotomic a = (order_ == L) ? *this : promoted(L);
  const Cyclotomic b = (o.order_ == L) ? o : o.promoted(L);
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  order_ = L;
  c_ = std::move(r);
  normalize();
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  return (a - b).is_zero();
}

std::string Cyclotomic::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& x = c_[i];
    if (x.is_zero()) continue;
    Rational mag = abs(x);
    if (first) {
      if (x.sign() < 0) os << "-";
    } else {
      os << (x.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    bool frac = !mag.is_integer();
    if (i == 0 || !unit) os << (frac && i > 0 ? "(" + mag.str() + ")" : mag.str());
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Cyclotomic conjugate(const Cyclotomic& z) { return z.galois(-1); }

Cyclotomic abs_square(const Cyclotomic& z) { return z * conjugate(z); }

Rational abs_square_rational(const Cyclotomic& z) {
  Cyclotomic s = abs_square(z);
  if (!s.is_rational()) throw std::domain_error("squared modulus is irrational: " + s.str());
  return s.to_rational();
}

std::strong_ordering compare_at(const Cyclotomic& a, const Cyclotomic& b, int order) {
  auto ca = a.coords_at(order);
  auto cb = b.coords_at(order);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    auto c = ca[i] <=> cb[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Cyclotomic power(const Cyclotomic& z, long k) {
  Cyclotomic base = k < 0 ? z.inverse() : z, r(1);
  for (long e = k < 0 ? -k : k; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    base *= base;
  }
  return r;
}

}  // namespace rt
