#include "doctest.h"

#include "rtorsion/seifert.hpp"

using namespace rt;

namespace {

TorsionValue constant_value(const Cyclotomic& c, const UnitGroupSpec& u) {
  return TorsionValue(LaurentRational(LaurentPoly::monomial(c, 0)), u);
}

GeneratorImages<Cyclotomic> scalar_images(const std::vector<Cyclotomic>& values) {
  GeneratorImages<Cyclotomic> rho;
  for (const auto& v : values) {
    rho.mat.push_back(Matrix<Cyclotomic>::Constant(1, 1, v));
    rho.inv.push_back(Matrix<Cyclotomic>::Constant(1, 1, v.inverse()));
  }
  return rho;
}

bool is_cyclic(const SeifertParams& p) {
  const auto inv = seifert_presentation(p).abelian_invariants();
  return inv.size() == 1 && !inv[0].is_zero();
}

}  // namespace

TEST_CASE("parameters") {
  const auto p = parse_seifert_params("3/2,-3,-5");
  REQUIRE(p.m() == 3);
  CHECK(p.fibers[0].p == 3);
  CHECK(p.fibers[0].q == 2);
  CHECK(p.fibers[1].p == 3);
  CHECK(p.fibers[1].q == -1);
  CHECK(p.fibers[2].p == 5);
  CHECK(p.fibers[2].q == -1);
  for (const auto& f : p.fibers) CHECK(f.p * f.s - f.q * f.r == 1);
  CHECK(seifert_homology_order(p) == Integer(6));
  CHECK(seifert_presentation(p).abelian_invariants() == std::vector<Integer>{Integer(6)});
  CHECK(seifert_params_from_json(nlohmann::json::parse(R"({"params": ["3/2", "-3", "-5"]})")).str() == p.str());
  CHECK_THROWS_AS(parse_seifert_params("1/2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_seifert_params("4/2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_seifert_params("3/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_seifert_params("3/2,,5"), std::invalid_argument);

  const auto two = parse_seifert_params("2/1,2/1");
  CHECK(seifert_homology_order(two) == Integer(4));
  Integer product(1);
  for (const auto& d : seifert_presentation(two).abelian_invariants()) product = product * d;
  CHECK(product == Integer(4));
  CHECK(seifert_homology_order(parse_seifert_params("2,3,5")) == Integer(31));
  CHECK(seifert_presentation(parse_seifert_params("2/-1,3,5")).abelian_invariants().empty());
}

TEST_CASE("homology order formula matches Smith form") {
  for (const auto& text : {"2,3,7", "2/1,3/-2,5/3", "4/1,6/1,9/5", "3/1,3/1,3/-2", "2/1,2/1,2/-1"}) {
    const auto p = parse_seifert_params(text);
    Integer product(1);
    for (const auto& d : seifert_presentation(p).abelian_invariants()) product = product * d;
    CHECK(product == seifert_homology_order(p));
  }
}

TEST_CASE("S_G enumeration") {
  const auto a5 = alternating_group(5);
  CHECK(enumerate_SG(parse_seifert_params("2/1,2/1,2/1"), a5).empty());

  const std::vector<std::string> cases{"3/2,-3,-5", "2,3,5", "2/1,3/1,5/-2", "3/1,3/-1,2/1", "2/1,2/1,3/1"};
  for (const auto& text : cases) {
    const auto params = parse_seifert_params(text);
    const auto pres = seifert_presentation(params);
    for (const auto& g : {symmetric_group(3), alternating_group(4), alternating_group(5), dihedral_group(5)}) {
      const auto tuples = enumerate_SG(params, g);
      CHECK(tuples.size() == enumerate_surjections(pres, g).size());
      for (const auto& t : tuples) {
        CHECK(is_homomorphism(pres, g, t));
        CHECK(orbit_representative(t, g) == t);
        for (std::size_t i = 1; i < t.size(); ++i) CHECK(g.mul(t[0], t[i]) == g.mul(t[i], t[0]));
      }
    }
  }
  const auto kt_twin = parse_seifert_params("3/2,-3,-5");
  CHECK(enumerate_SG(kt_twin, a5).size() == 2);
  CHECK(enumerate_SG(kt_twin, alternating_group(4)).empty());
}

TEST_CASE("characters") {
  const auto p = parse_seifert_params("3/2,-3,-5");
  const auto chars = seifert_characters(p, 6);
  REQUIRE(chars.size() == 2);
  const auto pres = seifert_presentation(p);
  for (const auto& chi : chars) {
    CHECK(chi.a == 3);
    std::vector<long> e{chi.a};
    e.insert(e.end(), chi.b.begin(), chi.b.end());
    const auto sums = [&](const GroupWord& w) {
      long v = 0;
      const auto s = w.exponent_sums(pres.num_generators());
      for (std::size_t i = 0; i < s.size(); ++i) v += s[i] * e[i];
      return mod(v, 6);
    };
    for (const auto& r : pres.relators()) CHECK(sums(r) == 0);
  }
  CHECK_THROWS_AS(seifert_characters(p, 5), std::domain_error);
}

TEST_CASE("closed form") {
  const auto p = parse_seifert_params("3/2,-3,-5");
  const auto units = UnitGroupSpec::generated(true, false, {Cyclotomic::zeta(6, 1)});
  const Cyclotomic z = Cyclotomic::zeta(6, 1);
  // x -> 1 makes det(X - I) vanish.
  CHECK_THROWS_AS(seifert_torsion(p, scalar_images({Cyclotomic(1), z, z, power(z, 4)}), units), std::domain_error);

  const auto chi = seifert_characters(p, 6)[0];
  std::vector<Cyclotomic> v{power(z, chi.a)};
  for (long b : chi.b) v.push_back(power(z, b));
  const auto rho = scalar_images(v);
  const auto tau = seifert_torsion(p, rho, units);
  CHECK(same_class(tau, constant_value(Cyclotomic(1), units)));
  CHECK(same_class(tau, seifert_torsion_by_gluing(p, rho, units)));
}

TEST_CASE("two fibers") {
  // m = 2 gives lens spaces; the det(X - I) factor drops out.
  for (const auto& text : {"2/1,3/1", "3/1,4/-1", "5/2,2/1"}) {
    const auto p = parse_seifert_params(text);
    if (!is_cyclic(p)) continue;
    const long n = seifert_homology_order(p).to_long();
    const auto units = UnitGroupSpec::generated(true, false, {Cyclotomic::zeta(static_cast<int>(n), 1)});
    for (const auto& chi : seifert_characters(p, n)) {
      std::vector<Cyclotomic> v{Cyclotomic::zeta(static_cast<int>(n), chi.a)};
      for (long b : chi.b) v.push_back(Cyclotomic::zeta(static_cast<int>(n), b));
      const auto rho = scalar_images(v);
      Cyclotomic expected(1);
      for (int i = 0; i < 2; ++i) {
        const auto& f = p.fibers[i];
        expected = expected * (power(v[0], f.s) * power(v[i + 1], f.r) - Cyclotomic(1));
      }
      CHECK(same_class(seifert_torsion(p, rho, units), constant_value(expected.inverse(), units)));
      CHECK(same_class(seifert_torsion_by_gluing(p, rho, units), constant_value(expected.inverse(), units)));
    }
  }
}

TEST_CASE("invariant sets") {
  const auto p = parse_seifert_params("3/2,-3,-5");
  const auto a5 = alternating_group(5);
  const auto phi = standard_representation(a5);
  for (const auto& chi : seifert_characters(p, 6)) {
    const auto set = seifert_invariant_set(p, a5, phi, chi);
    CHECK(set.complete());
    REQUIRE(set.values.size() == 1);
    CHECK(modulus_profile(set.values[0].tau) == Rational(16));
    CHECK(set.values[0].sources.size() == 2);
  }
  const auto g = trivial_group();
  for (const auto& chi : seifert_characters(p, 6)) {
    const auto set = seifert_invariant_set(p, g, trivial_representation(g, 1), chi);
    REQUIRE(set.values.size() == 1);
    CHECK(modulus_profile(set.values[0].tau) == Rational(1));
  }
}

TEST_CASE("modulus profile") {
  const auto units = UnitGroupSpec::generated(true, false, {Cyclotomic::zeta(6, 1)});
  CHECK(modulus_profile(constant_value(Cyclotomic(29), units)) == Rational(841));
  CHECK(modulus_profile(constant_value(power(Cyclotomic::zeta(6, 3) - Cyclotomic(1), 4), units)) == Rational(256));
  CHECK(modulus_profile(constant_value(Cyclotomic(1), units)) == Rational(1));
  CHECK(modulus_profile(constant_value(Cyclotomic::zeta(6, 1) - Cyclotomic(1), units)) == Rational(1));
  CHECK(modulus_profile(constant_value(Cyclotomic::zeta(3, 1) - Cyclotomic(1), units)) == Rational(3));
}
