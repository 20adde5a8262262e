#include "doctest.h"

#include "rtorsion/cli.hpp"

using namespace rt;

namespace {

const std::string data = RTORSION_DATA_DIR;

JobSpec job(std::string verb) {
  JobSpec s;
  s.verb = std::move(verb);
  s.knot = data + "/kt.json";
  return s;
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("torsion") {
  auto s = job("torsion");
  s.groups = {"A5"};
  const auto r = run(s);
  CHECK(r.status == kOk);
  REQUIRE(r.output["classes"].size() == 1);
  CHECK(r.output["classes"][0]["peripheral"] == nlohmann::json{"()", "(3 4 5)"});
  CHECK(r.output["classes"][0]["values"].size() == 1);
}

TEST_CASE("homs") {
  auto s = job("homs");
  s.groups = {"A5"};
  s.slope = "6/1";
  auto r = run(s);
  CHECK(r.status == kOk);
  CHECK(r.output["count"] == 2);
  CHECK(r.output["filling_count"] == 2);
  s.groups = {"A4"};
  CHECK(run(s).output["count"] == 0);

  JobSpec p;
  p.verb = "homs";
  p.params = "3/2,-3,-5";
  p.groups = {"A5"};
  r = run(p);
  CHECK(r.status == kOk);
  CHECK(r.output["count"] == 2);
  p.params = data + "/seifert_3_2.json";
  CHECK(run(p).output["count"] == 2);
}

TEST_CASE("surgery") {
  for (const auto& slope : {"6/1", "6/5"}) {
    auto s = job("surgery");
    s.groups = {"A5"};
    s.slope = slope;
    const auto r = run(s);
    CHECK(r.status == kOk);
    CHECK(r.output["homology"] == nlohmann::json{"6"});
    CHECK(contains(r.text, "{29}"));
  }
  auto s = job("surgery");
  s.groups = {"A5"};
  s.slope = "6/1";
  s.mirror = true;
  CHECK(contains(run(s).text, "{29}"));
}

TEST_CASE("seifert") {
  JobSpec s;
  s.verb = "seifert";
  s.params = "3/2,-3,-5";
  s.groups = {"A5"};
  auto r = run(s);
  CHECK(r.status == kOk);
  CHECK(r.output["characters"].size() == 2);
  CHECK(r.output["classes"] == 2);
  s.character = {3, 2, 1, 3};
  CHECK(run(s).output["characters"].size() == 1);
  s.character = {1, 1, 1, 1};
  CHECK(run(s).status == kParseError);
}

TEST_CASE("obstruct") {
  auto s = job("obstruct");
  s.slope = "6/1";
  s.bounds = "7";
  s.workers = 1;
  const auto a = run(s);
  CHECK(a.status == kOk);
  CHECK(a.output["all_incompatible"] == true);
  CHECK(a.output["groups"][0]["rep"].is_null());
  CHECK(a.output["groups"][1]["rep"] == "standard");
  s.workers = 4;
  const auto b = run(s);
  CHECK(a.output.dump() == b.output.dump());
  CHECK(a.text == b.text);
}

TEST_CASE("exit codes") {
  auto s = job("surgery");
  s.groups = {"A5"};
  s.slope = "6/x";
  CHECK(run(s).status == kParseError);
  s.slope = "4/2";
  CHECK(run(s).status == kParseError);
  s.slope = "6/1";
  s.knot = data + "/missing.json";
  CHECK(run(s).status == kParseError);
  CHECK(run(job("frobnicate")).status == kParseError);
  s = job("surgery");
  s.slope = "6/1";
  s.groups = {"Q7"};
  CHECK(run(s).status == kParseError);

  // The permutation representation of S3 violates det(zeta phi(h) - I) != 0 at 2/1.
  s = job("surgery");
  s.knot = data + "/trefoil.json";
  s.groups = {"S3"};
  s.rep = "permutation";
  s.slope = "2/1";
  const auto r = run(s);
  CHECK(r.status == kHypothesisViolation);
  CHECK(r.output["set"]["complete"] == false);
  CHECK(r.output["set"]["violations"].size() == 1);

  JobSpec m;
  m.verb = "seifert";
  m.params = "2/1,2/-1";
  CHECK(run(m).status == kHypothesisViolation);
}

TEST_CASE("reruns are byte identical") {
  for (const auto& verb : {"torsion", "surgery", "homs"}) {
    auto s = job(verb);
    s.groups = {"A5"};
    s.slope = "6/5";
    s.verbose = true;
    const auto a = run(s), b = run(s);
    CHECK(a.output.dump() == b.output.dump());
    CHECK(a.text == b.text);
  }
}
