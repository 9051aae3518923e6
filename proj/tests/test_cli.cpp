#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "catv/io.hpp"
#include "catv/suites.hpp"

using namespace catv;

namespace {

json load(const std::string& name) {
  std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
  REQUIRE(in.good());
  json j;
  in >> j;
  return j;
}

const char* kCategoryFixtures[] = {
    "terminal.json",      "walking_arrow.json", "composable_pair.json",
    "walking_iso.json",   "discrete_two.json",  "parallel_pair.json",
    "commuting_square.json", "b2.json",         "s2.json",
    "z2.json"};

}  // namespace

TEST_CASE("category fixtures round-trip byte-identically") {
  for (const char* name : kCategoryFixtures) {
    json j = load(name);
    auto c = cat_from_json(j);
    CHECK(cat_to_json(c) == j);
    auto again = cat_from_json(cat_to_json(c));
    CHECK(again->n_obj() == c->n_obj());
    CHECK(again->n_mor() == c->n_mor());
  }
}

TEST_CASE("double fixtures round-trip and carry their verdicts") {
  for (const char* name : {"nerve_walking_arrow.json", "kernel_pair.json", "broken_c2.json"}) {
    json j = load(name);
    CHECK(is_double_fixture(j));
    auto raw = double_from_json(j);
    CHECK(double_to_json(raw) == j);
  }
  CHECK_NOTHROW(validate_double(double_from_json(load("nerve_walking_arrow.json"))));
  CHECK_NOTHROW(validate_double(double_from_json(load("kernel_pair.json"))));
  CHECK_THROWS_WITH_AS(validate_double(double_from_json(load("broken_c2.json"))),
                       doctest::Contains("NotPullback"), ValidationError);
}

TEST_CASE("parser rejects malformed category data") {
  CHECK_THROWS_WITH_AS(cat_from_json(load("bad_composition.json")),
                       doctest::Contains("MissingComposite"), ValidationError);
  json j = load("walking_arrow.json");
  json missing = j;
  missing.erase("compose");
  CHECK_THROWS_WITH_AS(cat_from_json(missing), doctest::Contains("FixtureInvalid"),
                       ValidationError);
  json dup = j;
  dup["objects"].push_back(dup["objects"][0]);
  CHECK_THROWS_WITH_AS(cat_from_json(dup), doctest::Contains("duplicate object"),
                       ValidationError);
  json badend = j;
  badend["morphisms"][0]["cod"] = "nowhere";
  CHECK_THROWS_WITH_AS(cat_from_json(badend), doctest::Contains("unknown endpoint"),
                       ValidationError);

  json dbl = load("kernel_pair.json");
  dbl["p0"]["obj"][0] = 99;
  CHECK_THROWS_WITH_AS(double_from_json(dbl), doctest::Contains("out of range"),
                       ValidationError);
}

TEST_CASE("dot output shows all three levels with dashed structure maps") {
  auto raw = double_from_json(load("nerve_walking_arrow.json"));
  std::string dot = double_to_dot(raw);
  for (const char* token : {"cluster_c0", "cluster_c1", "cluster_c2", "style=dashed",
                            "label=\"p01\"", "label=\"e\""})
    CHECK(dot.find(token) != std::string::npos);
  std::string cdot = cat_to_dot(corpus_lookup("walking_arrow"));
  CHECK(cdot.find("digraph") != std::string::npos);
  CHECK(cdot.find("o0 -> o1") != std::string::npos);
}

TEST_CASE("check_fixture reports law violations without throwing") {
  auto ok = check_fixture(std::string(FIXTURES_DIR) + "/kernel_pair.json");
  CHECK(ok.holds);
  CHECK(ok.witness["kind"] == "double");
  auto bad = check_fixture(std::string(FIXTURES_DIR) + "/broken_c2.json");
  CHECK(!bad.holds);
  CHECK(bad.counterexample["error"] == "NotPullback");
  CHECK_THROWS_WITH_AS(check_fixture("no/such/file.json"), doctest::Contains("FixtureInvalid"),
                       ValidationError);
}

TEST_CASE("run_suite produces deterministic reports and nonzero-failure summaries") {
  CHECK(suite_names().size() == 7);
  SuiteSpec bogus;
  bogus.name = "nonesuch";
  CHECK_THROWS_WITH_AS(run_suite(bogus), doctest::Contains("UnknownSuite"), ValidationError);

  SuiteSpec spec;
  spec.name = "appB-power-exp";
  spec.fixtures = {std::string(FIXTURES_DIR) + "/kernel_pair.json",
                   std::string(FIXTURES_DIR) + "/broken_c2.json"};
  spec.jobs = 2;
  Report a = run_suite(spec);
  REQUIRE(a.checks.size() == 3);
  CHECK(a.checks[0].id == "limit-and-power-operators");
  CHECK(a.checks[0].verdict.holds);
  CHECK(a.checks[1].id == "fixture:kernel_pair.json");
  CHECK(a.checks[1].verdict.holds);
  CHECK(a.checks[2].id == "fixture:broken_c2.json");
  CHECK(!a.checks[2].verdict.holds);
  CHECK(a.checks[2].verdict.counterexample["error"] == "NotPullback");
  CHECK(!a.all_pass());
  json ja = a.to_json();
  CHECK(ja["summary"]["failed"] == 1);
  CHECK(ja["summary"]["total"] == 3);

  Report b = run_suite(spec);
  REQUIRE(b.checks.size() == a.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(b.checks[i].id == a.checks[i].id);
    CHECK(b.checks[i].verdict.holds == a.checks[i].verdict.holds);
    CHECK(b.checks[i].verdict.witness == a.checks[i].verdict.witness);
  }
}

TEST_CASE("seed is recorded and changes only the randomized input labels") {
  auto v1 = check_gbo_route_agreement(7);
  auto v2 = check_gbo_route_agreement(7);
  auto v3 = check_gbo_route_agreement(8);
  CHECK(v1.holds);
  CHECK(v3.holds);
  CHECK(v1.witness == v2.witness);
  CHECK(v1.witness["seed"] == 7);
  CHECK(v3.witness["seed"] == 8);
}
