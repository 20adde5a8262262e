#include "doctest.h"

#include <random>

#include "rtorsion/chain_complex.hpp"
#include "rtorsion/matrix.hpp"
#include "rtorsion/serialize.hpp"
#include "rtorsion/torsion_value.hpp"

using namespace rt;

namespace {

Cyclotomic z6(long k = 1) { return Cyclotomic::zeta(6, k); }

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Cyclotomic random_cyclotomic(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<Rational> c;
  for (int i = 0; i < euler_phi(order); ++i) c.emplace_back(d(rng));
  return Cyclotomic::from_power_coeffs(order, c);
}

LaurentPoly lp(std::initializer_list<long> coeffs, long low = 0) {
  std::vector<Cyclotomic> c;
  for (long x : coeffs) c.emplace_back(x);
  return LaurentPoly(low, c);
}

}  // namespace

TEST_CASE("rational parsing and normal form") {
  CHECK(Rational("6/-4") == Rational(Integer(-3), Integer(2)));
  CHECK(Rational("6/-4").str() == "-3/2");
  CHECK(Rational("7").str() == "7");
  CHECK_THROWS_AS(Rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
  CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
  CHECK(cyclotomic_polynomial(5) == ints({1, 1, 1, 1, 1}));
  CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
  for (int p = 1; p <= 30; ++p) CHECK(cyclotomic_polynomial(p).size() == static_cast<std::size_t>(euler_phi(p) + 1));
}

TEST_CASE("roots of unity") {
  for (int p : {1, 2, 3, 5, 6, 7, 12}) {
    CHECK(Cyclotomic::zeta(p, p).is_one());
    for (int k = 1; k < p; ++k) CHECK_FALSE(Cyclotomic::zeta(p, k).is_one());
  }
  CHECK(Cyclotomic::zeta(2) == Cyclotomic(-1));
  CHECK(z6() - Cyclotomic(1) == z6(2));
}

TEST_CASE("conjugate") {
  CHECK(conjugate(z6()) == z6(5));
  CHECK(conjugate(z6()) == Cyclotomic(1) - z6());
  CHECK(conjugate(Cyclotomic(3)) == Cyclotomic(3));
  CHECK(conjugate(z6(2) + Cyclotomic(1)) == Cyclotomic(1) - z6());
}

TEST_CASE("abs_square") {
  CHECK(abs_square(z6() - Cyclotomic(1)) == Cyclotomic(1));
  CHECK(abs_square_rational(z6(3) - Cyclotomic(1)) == Rational(4));
  CHECK(abs_square(Cyclotomic(0)).is_zero());
  CHECK_THROWS_AS(abs_square_rational(Cyclotomic::zeta(5) - Cyclotomic(1)), std::domain_error);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(11);
  for (int order : {3, 5, 6, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      Cyclotomic a = random_cyclotomic(rng, order), b = random_cyclotomic(rng, order), c = random_cyclotomic(rng, order);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK(conjugate(conjugate(a)) == a);
      CHECK(abs_square(a * b) == abs_square(a) * abs_square(b));
    }
  }
}

TEST_CASE("mixed orders promote to the lcm") {
  Cyclotomic w = Cyclotomic::zeta(3) * Cyclotomic::zeta(2);
  CHECK(w == z6(5));
  CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(4) == Cyclotomic(-1));
}

TEST_CASE("laurent arithmetic and gcd") {
  LaurentPoly t = LaurentPoly::t();
  LaurentPoly a = (t - 1) * (t * t + 1);
  LaurentPoly b = (t - 1) * (t + 2);
  CHECK(gcd(a, b) == t - 1);
  CHECK(exact_divide(a, t - 1) == t * t + 1);
  CHECK_THROWS(exact_divide(a, t + 5));
  LaurentRational f(a.shifted(3), b.shifted(-2));
  CHECK(f.den() == t + 2);
  CHECK(f == LaurentRational((t * t + 1).shifted(5), t + 2));
  CHECK(f * f.inverse() == LaurentRational(1));
}

TEST_CASE("laurent evaluation") {
  LaurentPoly t = LaurentPoly::t();
  LaurentRational f(t * t - t + 1, t - 1);
  CHECK(f.evaluate(z6()).is_zero());
  CHECK_THROWS_AS(LaurentRational(1, t - 1).evaluate(Cyclotomic(1)), std::domain_error);
}

TEST_CASE("determinants") {
  Matrix<Cyclotomic> id = Matrix<Cyclotomic>::Identity(4, 4);
  CHECK(determinant(id).is_one());
  LaurentPoly t = LaurentPoly::t();
  Matrix<LaurentPoly> d = Matrix<LaurentPoly>::Zero(2, 2);
  d(0, 0) = t - 1;
  d(1, 1) = t - 1;
  CHECK(determinant(d) == (t - 1) * (t - 1));
  Matrix<Cyclotomic> m = Matrix<Cyclotomic>::Identity(4, 4) * z6() - Matrix<Cyclotomic>::Identity(4, 4);
  CHECK(determinant(m) == z6(2));
  CHECK_THROWS_AS(determinant(Matrix<Rational>(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 4;
    Matrix<Cyclotomic> a(n, n), b(n, n);
    Matrix<LaurentPoly> la(n, n), lb(n, n);
    Matrix<Integer> ia(n, n), ib(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        a(i, j) = random_cyclotomic(rng, 6);
        b(i, j) = random_cyclotomic(rng, 6);
        la(i, j) = lp({coeff(rng), coeff(rng)}, coeff(rng));
        lb(i, j) = lp({coeff(rng), coeff(rng), coeff(rng)});
        ia(i, j) = coeff(rng);
        ib(i, j) = coeff(rng);
      }
    CHECK(determinant(multiply(a, b)) == determinant(a) * determinant(b));
    CHECK(determinant(multiply(la, lb)) == determinant(la) * determinant(lb));
    CHECK(determinant(multiply(ia, ib)) == determinant(ia) * determinant(ib));
    CHECK(determinant(convert<Rational>(ia)) == Rational(determinant(ia)));
  }
}

TEST_CASE("smith normal form") {
  CHECK(smith_normal_form(Matrix<Integer>::Zero(2, 2)).invariants() == ints({0, 0}));
  Matrix<Integer> d = Matrix<Integer>::Zero(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 3;
  CHECK(smith_normal_form(d).invariants() == ints({1, 6}));

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coeff(-9, 9), dim(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = dim(rng), c = dim(rng);
    Matrix<Integer> m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = coeff(rng);
    SmithForm s = smith_normal_form(m);
    CHECK(multiply(multiply(s.left, m), s.right) == s.diagonal);
    CHECK(abs(determinant(s.left)) == Integer(1));
    CHECK(abs(determinant(s.right)) == Integer(1));
    auto inv = s.invariants();
    for (std::size_t k = 0; k + 1 < inv.size(); ++k) {
      CHECK(inv[k].sign() >= 0);
      if (!inv[k].is_zero()) CHECK((inv[k + 1] % inv[k]).is_zero());
      else CHECK(inv[k + 1].is_zero());
    }
  }
}

TEST_CASE("canonical unit classes") {
  UnitGroupSpec knot_units;
  knot_units.t_shift = true;
  LaurentPoly t = LaurentPoly::t();
  TorsionValue v(LaurentRational(LaurentPoly::monomial(Cyclotomic(-29), 3)), knot_units);
  CHECK(canonicalize(v).value() == LaurentRational(29));

  UnitGroupSpec roots = UnitGroupSpec::generated(true, false, {z6()});
  CHECK(roots.roots.size() == 6);
  TorsionValue w(LaurentRational(z6(4) * Cyclotomic(5)), roots);
  CHECK(canonicalize(w).value() == LaurentRational(5));

  TorsionValue zero(LaurentRational(0), roots);
  CHECK(canonicalize(zero).is_zero());
  CHECK(canonicalize(canonicalize(w)).value() == canonicalize(w).value());
}

TEST_CASE("canonicalize is constant on unit orbits") {
  std::mt19937 rng(23);
  UnitGroupSpec units = UnitGroupSpec::generated(true, true, {z6()});
  LaurentPoly t = LaurentPoly::t();
  for (int trial = 0; trial < 15; ++trial) {
    LaurentPoly num = LaurentPoly(random_cyclotomic(rng, 6)) + t * random_cyclotomic(rng, 6) + t * t;
    LaurentPoly den = t - random_cyclotomic(rng, 3);
    TorsionValue x(LaurentRational(num, den), units);
    const auto base = canonicalize(x).value();
    for (const auto& r : units.roots)
      for (int s : {1, -1})
        for (long k : {-2L, 0L, 3L}) {
          LaurentPoly u = LaurentPoly::monomial(s == 1 ? r : -r, k);
          CHECK(canonicalize(TorsionValue(x.value() * LaurentRational(u), units)).value() == base);
        }
  }
}

TEST_CASE("scalar json round trip") {
  Cyclotomic a = z6() * Rational("3/7") + Cyclotomic(2);
  CHECK(decode_cyclotomic(encode(a)) == a);
  CHECK(encode(Rational("-5/3")) == "-5/3");
  LaurentPoly p = lp({1, -9, 0, 4}, -2);
  CHECK(decode_laurent(encode(p)) == p);
  LaurentRational f(p, lp({1, 1}));
  CHECK(decode_laurent_rational(encode(f)) == f);
}

TEST_CASE("complex torsion from the definition") {
  SUBCASE("identity complex") {
    Matrix<Cyclotomic> id = Matrix<Cyclotomic>::Identity(3, 3);
    CHECK(complex_torsion(BasedComplex<Cyclotomic>({id})).is_one());
  }
  SUBCASE("solid torus") {
    // One 0-cell, one 1-cell around the core.
    Matrix<Cyclotomic> d1(1, 1);
    d1(0, 0) = z6() - Cyclotomic(1);
    CHECK(complex_torsion(BasedComplex<Cyclotomic>({d1})) == (z6() - Cyclotomic(1)).inverse());
  }
  SUBCASE("boundary torus") {
    // Cells v; a (core direction), b; F with boundary (1 - rho(b)) a + (rho(a) - 1) b.
    const Cyclotomic x = z6();
    Matrix<Cyclotomic> d1(1, 2), d2(2, 1);
    d1 << x - Cyclotomic(1), Cyclotomic(0);
    d2 << Cyclotomic(0), x - Cyclotomic(1);
    const Cyclotomic tau = complex_torsion(BasedComplex<Cyclotomic>({d1, d2}));
    CHECK((tau == Cyclotomic(1) || tau == Cyclotomic(-1)));
  }
  SUBCASE("non acyclic") {
    Matrix<Cyclotomic> d1 = Matrix<Cyclotomic>::Zero(1, 1);
    CHECK_THROWS_WITH_AS(complex_torsion(BasedComplex<Cyclotomic>({d1})), "not acyclic", std::domain_error);
  }
  SUBCASE("boundaries must compose to zero") {
    Matrix<Rational> a = Matrix<Rational>::Identity(1, 1);
    CHECK_THROWS_AS(BasedComplex<Rational>({a, a}), std::invalid_argument);
  }
}

TEST_CASE("multiplicativity on a split sequence") {
  // C' = (C_1 -> C_0), C'' = (C_2 -> C_1); the direct sum has dimensions (1, 2, 1).
  const Rational a(3), b(5);
  const Matrix<Rational> one = Matrix<Rational>::Identity(1, 1);
  const BasedComplex<Rational> sub({one * a});
  const BasedComplex<Rational> quot({Matrix<Rational>::Zero(0, 1), one * b});
  Matrix<Rational> d1(1, 2), d2(2, 1);
  d1 << a, Rational(0);
  d2 << Rational(0), b;
  const BasedComplex<Rational> total({d1, d2});
  ShortExactData<Rational> maps;
  maps.inclusion = {one, Matrix<Rational>::Identity(2, 1), Matrix<Rational>::Zero(1, 0)};
  Matrix<Rational> proj1(1, 2), lift1(2, 1);
  proj1 << Rational(0), Rational(1);
  lift1 << Rational(0), Rational(1);
  maps.projection = {Matrix<Rational>::Zero(0, 1), proj1, one};
  maps.lift = {Matrix<Rational>::Zero(1, 0), lift1, one};
  const auto r = multiplicativity_report(sub, total, quot, maps);
  CHECK(r.sign == -1);
  CHECK(r.unit_compatibility);
  CHECK(r.holds);
  CHECK(r.total == -(r.sub * r.quot));

  maps.lift[1] << Rational(7), Rational(1);
  const auto skew = multiplicativity_report(sub, total, quot, maps);
  CHECK(skew.holds);
  maps.lift[1] << Rational(1), Rational(0);
  CHECK_THROWS_AS(multiplicativity_report(sub, total, quot, maps), std::invalid_argument);
}
