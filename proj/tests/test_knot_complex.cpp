#include "doctest.h"

#include "rtorsion/knot_invariant.hpp"

using namespace rt;

namespace {

const std::string data = RTORSION_DATA_DIR;

MarkedPresentation knot(const std::string& name) { return load_knot(data + "/" + name + ".json"); }

LaurentRational alexander_torsion(const MarkedPresentation& k) {
  const auto g = trivial_group();
  const std::vector<int> images(k.presentation.num_generators(), PermGroup::identity());
  return knot_torsion(k, g, trivial_representation(g, 1), images).value();
}

LaurentPoly lp(std::initializer_list<long> coeffs, long low = 0) {
  std::vector<Cyclotomic> c;
  for (long x : coeffs) c.emplace_back(x);
  return LaurentPoly(low, c);
}

bool same(const LaurentRational& a, const LaurentRational& b, const UnitGroupSpec& u) {
  return same_class(TorsionValue(a, u), TorsionValue(b, u));
}

}  // namespace

TEST_CASE("pd parsing") {
  CHECK(parse_pd("X(3,1,4,6) X(1,5,2,4) X(5,3,6,2)").size() == 3);
  CHECK(parse_pd("PD[X[3,1,4,6], X[1,5,2,4], X[5,3,6,2]]").size() == 3);
  CHECK(parse_pd("[[3,1,4,6],[1,5,2,4],[5,3,6,2]]").size() == 3);
  CHECK_THROWS(parse_pd(""));
  CHECK_THROWS(parse_pd("X(1,2,3)"));
  CHECK_THROWS(parse_pd("X(3,1,4,6) X(1,5,2,4) X(5,3,6,7)"));
  CHECK_THROWS(parse_pd("X(3,1,4,6) Y(1,5,2,4)"));
  CHECK(writhe(parse_pd("X(3,1,4,6) X(1,5,2,4) X(5,3,6,2)")) == 3);
  const auto left = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  CHECK(left.size() == 3);
  CHECK(writhe(left) == -3);
  CHECK(crossing_signs(left) == std::vector<int>{-1, -1, -1});
}

TEST_CASE("wirtinger presentations") {
  for (const auto& name : {"trefoil", "figure8", "kt"}) {
    const auto k = knot(name);
    CHECK(k.presentation.num_generators() == k.presentation.num_relators());
    CHECK(k.presentation.abelian_invariants() == std::vector<Integer>{Integer(0)});
    const auto alpha = k.presentation.abelianization_to_Z(k.meridian);
    for (long a : alpha) CHECK(a == 1);
    long degree = 0;
    const auto sums = k.longitude.exponent_sums(k.presentation.num_generators());
    for (std::size_t i = 0; i < sums.size(); ++i) degree += sums[i] * alpha[i];
    CHECK(degree == 0);
  }
  CHECK(knot("kt").presentation.num_generators() == 11);
  const auto left = wirtinger(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"));
  CHECK(left.presentation.abelian_invariants() == std::vector<Integer>{Integer(0)});
  CHECK(unknot().longitude.empty());
  CHECK(wirtinger(parse_pd("X(3,1,4,6) X(1,5,2,4) X(5,3,6,2)"), true).orientation == -1);
}

TEST_CASE("longitude commutes with meridian in every surjection") {
  for (const auto& name : {"trefoil", "figure8", "kt"}) {
    const auto k = knot(name);
    for (const auto& g : {symmetric_group(3), alternating_group(4), alternating_group(5)})
      for (const auto& h : knot_surjections(k, g)) {
        const int l = h.peripheral[0], m = h.peripheral[1];
        CHECK(g.mul(l, m) == g.mul(m, l));
      }
  }
}

TEST_CASE("standard representation of A5") {
  const auto a5 = alternating_group(5);
  const auto phi = standard_representation(a5);
  CHECK(phi.dimension() == 4);
  const auto m = standard_rep_A5(parse_permutation("(3 4 5)", 5));
  Integer trace(0);
  for (int i = 0; i < 4; ++i) trace += m(i, i);
  CHECK(trace == Integer(1));
  const auto s = standard_matrix(parse_permutation("(1 2)", 5));
  CHECK(s(1, 0) == Integer(1));
  CHECK(s(0, 1) == Integer(1));
  CHECK(s(0, 0) == Integer(0));
  CHECK(phi.determinants().size() == 1);
  CHECK_THROWS(standard_rep_A5(parse_permutation("(1 2)", 4)));
}

TEST_CASE("fox matrix of a commutator") {
  const auto p = FinitePresentation::parse({"x", "y"}, {"x y x^-1 y^-1"});
  GeneratorImages<Cyclotomic> rho;
  Matrix<Cyclotomic> a(1, 1), b(1, 1);
  a(0, 0) = Cyclotomic::zeta(6, 1);
  b(0, 0) = Cyclotomic::zeta(6, 2);
  rho.mat = {a, b};
  rho.inv = {inverse(a), inverse(b)};
  const auto f = fox_matrix(p, rho);
  CHECK(f(0, 0) == Cyclotomic(1) - b(0, 0));
  CHECK(f(0, 1) == a(0, 0) - Cyclotomic(1));
}

TEST_CASE("abelian torsion of knots") {
  const UnitGroupSpec u = UnitGroupSpec::generated(true, true, {});
  const LaurentRational tm1(lp({-1, 1}));
  CHECK(same(alexander_torsion(unknot()), LaurentRational(1) / tm1, u));
  CHECK(same(alexander_torsion(knot("trefoil")), LaurentRational(lp({1, -1, 1})) / tm1, u));
  CHECK(same(alexander_torsion(knot("figure8")), LaurentRational(lp({1, -3, 1})) / tm1, u));
  CHECK(same(alexander_torsion(knot("kt")), LaurentRational(1) / tm1, u));
}

TEST_CASE("torsion is independent of dropped relator and deleted generator") {
  const auto k = knot("trefoil");
  const auto g = symmetric_group(3);
  const auto phi = standard_representation(g);
  const auto h = knot_surjections(k, g).at(0);
  const auto ref = knot_torsion(k, g, phi, h.images);
  for (int del = 0; del < 3; ++del)
    for (int drop = 0; drop < 3; ++drop) CHECK(same_class(knot_torsion(k, g, phi, h.images, {del, drop}), ref));
}

TEST_CASE("twisted torsion of KT over A5") {
  const auto k = knot("kt");
  const auto a5 = alternating_group(5);
  const auto phi = standard_representation(a5);
  const auto table = knot_invariant_table(knot_torsion_records(k, a5, phi));
  REQUIRE(table.size() == 1);
  CHECK(table[0].peripheral == orbit_representative({PermGroup::identity(), a5.parse("(3 4 5)")}, a5));
  REQUIRE(table[0].values.size() == 1);
  const LaurentPoly expected = lp({1, 1, 1}) * lp({5, 5, -5, -9, -5, 5, 5}) * lp({1, -1}) * lp({1, -1}) * lp({1, -1}) *
                               lp({1, -1});
  CHECK(same_class(table[0].values[0], TorsionValue(LaurentRational(expected), knot_units(phi))));
  CHECK(knot_surjections(k, alternating_group(4)).empty());
}
