#include "doctest.h"

#include "rtorsion/surgery.hpp"

using namespace rt;

namespace {

const std::string data = RTORSION_DATA_DIR;

MarkedPresentation knot(const std::string& name) { return load_knot(data + "/" + name + ".json"); }

TorsionValue constant_value(const Cyclotomic& c, const UnitGroupSpec& u) {
  return TorsionValue(LaurentRational(LaurentPoly::monomial(c, 0)), u);
}

UnitGroupSpec scalar_units(int order) { return UnitGroupSpec::generated(true, false, {Cyclotomic::zeta(order, 1)}); }

LaurentPoly lp(std::initializer_list<long> coeffs, long low = 0) {
  std::vector<Cyclotomic> c;
  for (long x : coeffs) c.emplace_back(x);
  return LaurentPoly(low, c);
}

}  // namespace

TEST_CASE("slopes and companions") {
  const auto a = slope(6, 1);
  CHECK(a.r == 5);
  CHECK(a.s == 1);
  const auto b = slope(0, 1);
  CHECK(b.r == -1);
  CHECK(b.s == 0);
  const auto c = slope(3, 2);
  CHECK(c.r == 1);
  CHECK(c.s == 1);
  for (long p = -7; p <= 7; ++p)
    for (long q = -7; q <= 7; ++q) {
      if (std::gcd(p, q) != 1) {
        CHECK_THROWS_AS(slope(p, q), std::invalid_argument);
        continue;
      }
      const auto s = slope(p, q);
      CHECK(s.p >= 0);
      CHECK(s.p * s.s - s.q * s.r == 1);
      if (s.p > 0) CHECK((0 <= s.r && s.r < s.p));
    }
  CHECK(parse_slope("-3").p == 3);
  CHECK(parse_slope("-3").q == -1);
  CHECK(parse_slope("6/5").r == 1);
  CHECK_THROWS_AS(parse_slope("6/x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_slope("4/2"), std::invalid_argument);
  const auto d = shifted_companion(a, -2);
  CHECK(d.p * d.s - d.q * d.r == 1);
}

TEST_CASE("characters onto cyclic groups") {
  CHECK(enumerate_characters(FinitePresentation::parse({"a"}, {"a^6"}), 6).size() == 2);
  CHECK(enumerate_characters(FinitePresentation::parse({"a"}, {"a^5"}), 5).size() == 4);
  CHECK_THROWS_AS(enumerate_characters(FinitePresentation::parse({"a", "b"}, {"a^2", "b^2"}), 4), std::domain_error);
  // Z/2 x Z/2 has 3 surjections onto Z/2.
  CHECK(surjections_to_cyclic(FinitePresentation::parse({"a", "b"}, {"a^2", "b^2"}), 2).size() == 3);
  for (const auto& e : surjections_to_cyclic(FinitePresentation::parse({"x", "y"}, {"x^2 y^-3"}), 6)) {
    CHECK(mod(2 * e[0] - 3 * e[1], 6) == 0);
    CHECK(std::gcd(std::gcd(e[0], e[1]), 6L) == 1);
  }
}

TEST_CASE("gluing and evaluation") {
  const auto u5 = scalar_units(5);
  const Cyclotomic z = Cyclotomic::zeta(5, 1);
  const auto slope51 = slope(5, 1);
  const auto tau_e = constant_value((z - Cyclotomic(1)).inverse(), u5);
  const auto lens = glue_torsion(tau_e, power(z, slope51.r) - Cyclotomic(1), u5);
  CHECK(same_class(lens, constant_value(((z - Cyclotomic(1)) * (power(z, slope51.r) - Cyclotomic(1))).inverse(), u5)));
  CHECK_THROWS_AS(glue_torsion(tau_e, Cyclotomic(0), u5), std::domain_error);
  CHECK(same_class(glue_torsion(constant_value(Cyclotomic(1), u5), z, u5), constant_value(Cyclotomic(1), u5)));

  const auto u6 = scalar_units(6);
  const TorsionValue trefoil(LaurentRational(lp({1, -1, 1})) / LaurentRational(lp({-1, 1})), u6);
  CHECK(evaluate_at_root(trefoil, Cyclotomic::zeta(6, 1), u6).is_zero());
  CHECK(same_class(evaluate_at_root(constant_value(Cyclotomic(1), u6), Cyclotomic::zeta(6, 1), u6),
                   constant_value(Cyclotomic(1), u6)));
  const TorsionValue pole(LaurentRational(1) / LaurentRational(lp({-1, 1})), u6);
  CHECK_THROWS_AS(evaluate_at_root(pole, Cyclotomic(1), u6), std::domain_error);
}

TEST_CASE("surgered presentations") {
  CHECK(surgered_presentation(unknot(), slope(5, 1)).abelian_invariants() == std::vector<Integer>{Integer(5)});
  CHECK(surgered_presentation(knot("trefoil"), slope(0, 1)).abelian_invariants() == std::vector<Integer>{Integer(0)});
  for (long q : {1, 5})
    CHECK(surgered_presentation(knot("kt"), slope(6, q)).abelian_invariants() == std::vector<Integer>{Integer(6)});
}

TEST_CASE("lens spaces from the unknot") {
  const auto g = trivial_group();
  const auto phi = trivial_representation(g, 1);
  for (auto [p, q] : {std::pair{5L, 1L}, {7L, 2L}, {7L, 3L}}) {
    const auto s = slope(p, q);
    const auto set = surgery_invariant_set(unknot(), s, g, phi);
    REQUIRE(set.values.size() == 1);
    const Cyclotomic z = Cyclotomic::zeta(static_cast<int>(p), 1);
    const auto expected = constant_value(((z - Cyclotomic(1)) * (power(z, s.r) - Cyclotomic(1))).inverse(), manifold_units(phi, p));
    CHECK(same_class(set.values[0].tau, expected));
  }
}

TEST_CASE("surgery on the trefoil") {
  const auto k = knot("trefoil");
  const auto g = trivial_group();
  const auto set = surgery_invariant_set(k, slope(6, 1), g, trivial_representation(g, 1));
  REQUIRE(set.values.size() == 1);
  CHECK(set.values[0].tau.is_zero());
  CHECK(set.warnings.size() == 1);
  CHECK_THROWS_AS(surgery_invariant_set(k, slope(1, 1), g, trivial_representation(g, 1)), std::invalid_argument);
  CHECK_THROWS_AS(surgery_invariant_set(k, slope(6, 1), g, trivial_representation(g, 1), 2), std::invalid_argument);

  // S3 quotients survive 2/1 and 3/1 surgery only when h^p = 1.
  const auto s3 = symmetric_group(3);
  CHECK(surgery_surjections(k, slope(2, 1), s3).size() == 1);
  CHECK(surgery_surjections(k, slope(3, 1), s3).empty());
  CHECK(enumerate_surjections(surgered_presentation(k, slope(2, 1)), s3).size() == 1);
}

TEST_CASE("hypothesis violations are reported per class") {
  // A transposition has eigenvalue -1 in the permutation representation, so -phi(h) - I is singular.
  const auto k = knot("trefoil");
  const auto s3 = symmetric_group(3);
  const auto phi = permutation_representation(s3);
  const auto set = surgery_invariant_set(k, slope(2, 1), s3, phi);
  CHECK_FALSE(set.complete());
  CHECK(set.values.empty());
  CHECK(set.violations[0].condition == "det(zeta phi(h) - I) = 0");
}

TEST_CASE("companion shifts leave the surgery set unchanged") {
  const auto k = knot("figure8");
  const auto g = dihedral_group(5);
  const auto phi = standard_representation(g);
  for (long q : {1, 2, 3}) {
    const auto s = slope(5, q);
    const auto ref = surgery_invariant_set(k, s, g, phi);
    for (long shift = -2; shift <= 2; ++shift) {
      const auto other = surgery_invariant_set(k, shifted_companion(s, shift), g, phi);
      REQUIRE(other.values.size() == ref.values.size());
      for (std::size_t i = 0; i < ref.values.size(); ++i) CHECK(same_class(other.values[i].tau, ref.values[i].tau));
    }
  }
}
