#include "doctest.h"

#include <algorithm>
#include <set>

#include "rtorsion/homs.hpp"
#include "rtorsion/perm_group.hpp"
#include "rtorsion/presentation.hpp"

using namespace rt;

namespace {

std::multiset<std::size_t> class_sizes(const PermGroup& g) {
  std::multiset<std::size_t> s;
  for (const auto& c : g.conjugacy_classes()) s.insert(c.size());
  return s;
}

FinitePresentation trefoil_group() { return FinitePresentation::parse({"a", "b"}, {"a b a b^-1 a^-1 b^-1"}); }

}  // namespace

TEST_CASE("permutation parsing and composition") {
  CHECK(cycle_string(parse_permutation("(1 2 3)(4 5)", 5)) == "(1 2 3)(4 5)");
  CHECK(cycle_string(parse_permutation("()", 4)) == "()");
  CHECK(cycle_string(parse_permutation("(3,4,5)", 5)) == "(3 4 5)");
  const Perm a = parse_permutation("(1 2)", 3), b = parse_permutation("(2 3)", 3);
  CHECK(cycle_string(compose(a, b)) == "(1 2 3)");
  CHECK(cycle_string(compose(a, invert(a))) == "()");
  CHECK_THROWS(parse_permutation("(1 6)", 5));
  CHECK_THROWS(parse_permutation("(1 2 1)", 5));
}

TEST_CASE("alternating groups") {
  const auto a4 = alternating_group(4), a5 = alternating_group(5);
  CHECK(a4.order() == 12);
  CHECK(a5.order() == 60);
  CHECK(class_sizes(a4) == std::multiset<std::size_t>{1, 3, 4, 4});
  CHECK(class_sizes(a5) == std::multiset<std::size_t>{1, 12, 12, 15, 20});
  CHECK(a4.center().size() == 1);
  CHECK(a5.center().size() == 1);
  CHECK(a5.element(PermGroup::identity()) == parse_permutation("()", 5));
  CHECK(a5.class_of(a5.parse("(3 4 5)")) == a5.class_of(a5.parse("(1 2 3)")));
  CHECK(a5.class_of(a5.parse("(1 2 3 4 5)")) != a5.class_of(a5.parse("(1 3 5 2 4)")));
  CHECK(a5.element_order(a5.parse("(1 2)(3 4)")) == 2);
  CHECK(a5.generates({a5.parse("(1 2 3 4 5)"), a5.parse("(1 2 3)")}));
  CHECK_FALSE(a5.generates({a5.parse("(1 2 3)"), a5.parse("(1 3 2)")}));
  CHECK_THROWS(a5.parse("(1 2)"));
}

TEST_CASE("small groups and centers") {
  CHECK(symmetric_group(3).order() == 6);
  CHECK(cyclic_group(6).center().size() == 6);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(dihedral_group(4).center().size() == 2);
  CHECK(trivial_group().order() == 1);
  CHECK(named_group("A5").order() == 60);
  CHECK(named_group("D5").order() == 10);
  CHECK_THROWS(named_group("Q8"));
}

TEST_CASE("group arithmetic") {
  const auto g = symmetric_group(4);
  for (int a = 0; a < g.order(); ++a) {
    CHECK(g.mul(a, g.inv(a)) == PermGroup::identity());
    CHECK(g.pow(a, g.element_order(a)) == PermGroup::identity());
    CHECK(g.pow(a, -1) == g.inv(a));
    for (int b = 0; b < g.order(); b += 5) CHECK(g.element(g.mul(a, b)) == compose(g.element(a), g.element(b)));
  }
}

TEST_CASE("words and presentations") {
  const auto p = FinitePresentation::parse({"x", "y"}, {"x^3 y^-2", "x y x^-1 y^-1"});
  CHECK(p.num_relators() == 2);
  CHECK(p.relators()[0].size() == 5);
  CHECK(p.relators()[0].str(p.generators()) == "x^3 y^-2");
  CHECK(p.parse_word("x y y^-1 x^-1").reduced().empty());
  CHECK(p.parse_word("x^2 y").inverse().str(p.generators()) == "y^-1 x^-2");
  CHECK(p.parse_word("x^2 y^-3").exponent_sums(2) == std::vector<long>{2, -3});
  CHECK(p.abelian_invariants() == std::vector<Integer>{Integer(0)});
  CHECK(FinitePresentation::parse({"x", "y"}, {"x^2", "y^3", "x y x^-1 y^-1"}).abelian_invariants() ==
        std::vector<Integer>{Integer(6)});
  CHECK_THROWS(p.parse_word("z"));

  const auto t = trefoil_group();
  CHECK(t.abelian_invariants() == std::vector<Integer>{Integer(0)});
  CHECK(t.abelianization_to_Z() == std::vector<long>{1, 1});
  CHECK(FinitePresentation::parse({"a"}, {"a^6"}).abelian_invariants() == std::vector<Integer>{Integer(6)});
  CHECK_THROWS(FinitePresentation::parse({"a"}, {"a^6"}).abelianization_to_Z());
  CHECK(t.without_relator(0).num_relators() == 0);
}

TEST_CASE("orbit representatives are conjugation invariant") {
  const auto g = alternating_group(5);
  const std::vector<int> tuple{g.parse("(1 2 3 4 5)"), g.parse("(1 4)(2 3)")};
  const auto rep = orbit_representative(tuple, g);
  for (int h = 0; h < g.order(); ++h) {
    const std::vector<int> c{g.conj(h, tuple[0]), g.conj(h, tuple[1])};
    CHECK(orbit_representative(c, g) == rep);
  }
  // [1, (3 4 5)] and [1, (1 2 3)] are one orbit.
  CHECK(orbit_representative({0, g.parse("(3 4 5)")}, g) == orbit_representative({0, g.parse("(1 2 3)")}, g));
}

TEST_CASE("surjection enumeration") {
  const auto t = trefoil_group();
  const auto s3 = symmetric_group(3);
  const auto homs = enumerate_surjections(t, s3);
  CHECK(homs.size() == 1);
  CHECK(is_homomorphism(t, s3, homs[0].images));
  CHECK(enumerate_surjections(t, alternating_group(4)).size() == enumerate_surjections_naive(t, alternating_group(4)).size());
  CHECK(enumerate_surjections(t, cyclic_group(3)).size() == 2);
  CHECK(enumerate_surjections(t, cyclic_group(3)).size() == enumerate_surjections_naive(t, cyclic_group(3)).size());
  CHECK(enumerate_surjections(t, trivial_group()).size() == 1);

  const auto free2 = FinitePresentation::parse({"a", "b"}, {});
  for (const auto& g : {symmetric_group(3), alternating_group(4), dihedral_group(4)}) {
    const auto fast = enumerate_surjections(free2, g), slow = enumerate_surjections_naive(free2, g);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].images == slow[i].images);
  }
  // Free group on two generators onto S3: 18 surjective pairs / 6 = 3 classes.
  CHECK(enumerate_surjections(free2, symmetric_group(3)).size() == 3);
}

TEST_CASE("group json") {
  const auto g = group_from_json(nlohmann::json::parse(R"j({"name":"A4","degree":4,"generators":["(1 2 3)","(1 2)(3 4)"]})j"));
  CHECK(g.order() == 12);
  CHECK(g.name() == "A4");
}
