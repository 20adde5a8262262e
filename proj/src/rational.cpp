#include "rtorsion/rational.hpp"

#include <stdexcept>

namespace rt {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_mpz(std::string_view s) {
  if (!valid_integer_text(s)) throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Integer::Integer(std::string_view text) : v_(parse_mpz(text)) {}

Integer gcd(const Integer& a, const Integer& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.gmp().get_mpz_t(), b.gmp().get_mpz_t());
  return Integer(g);
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer floor_div(const Integer& a, const Integer& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.gmp().get_mpz_t(), b.gmp().get_mpz_t());
  return Integer(q);
}

Integer mod(const Integer& a, const Integer& b) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.gmp().get_mpz_t(), b.gmp().get_mpz_t());
  return Integer(r);
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num.gmp(), den.gmp());
  v_.canonicalize();
}

Rational::Rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    v_ = mpq_class(parse_mpz(text));
    return;
  }
  mpz_class n = parse_mpz(text.substr(0, slash));
  mpz_class d = parse_mpz(text.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("malformed rational (zero denominator): '" + std::string(text) + "'");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

}  // namespace rt
