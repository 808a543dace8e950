#include <doctest.h>

#include <stdexcept>

#include "kdirac/report.hpp"

using namespace kdirac;

TEST_CASE("config validation") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  c.n = 2;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.k = 1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.level = 3;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.level = 2;
  c.n = 7;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  for (const char* bad : {"best", "random:", "random:x1", "random:-3"}) {
    c.ordering = bad;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  }
  for (const char* good : {"paper", "greedy", "random", "random:17"}) {
    c.ordering = good;
    CHECK_NOTHROW(c.validate());
  }
}

TEST_CASE("single run report") {
  RunConfig c;
  c.n = 3;
  c.k = 2;
  c.level = 1;
  c.degree = 2;
  const Report r = run(c);
  CHECK(r.all_pass());
  const auto j = r.to_json();
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["config"]["operator"] == "euclidean");
  CHECK(j["cartan"][0]["rhs_cartan_test"] == 32);
  CHECK(j["cartan"][0]["involutive"] == true);
  CHECK(j["dims"]["solutions_degree_2"] == 18);
  CHECK_FALSE(j.contains("timing_ms"));
  CHECK(r.to_json_text() == run(c).to_json_text());
  CHECK(r.to_text().find("checks passed") != std::string::npos);
}

TEST_CASE("parabolic run report") {
  RunConfig c;
  c.op = RunConfig::Operator::parabolic;
  c.n = 3;
  c.level = 1;
  const Report r = run(c);
  CHECK(r.all_pass());
  CHECK(r.to_json()["component_dims"]["prolongation_1_by_y_degree"] == nlohmann::json{18, 8, 2});
}

TEST_CASE("timing is opt-in") {
  RunConfig c;
  c.include_timing = true;
  const auto j = run(c).to_json();
  REQUIRE(j.contains("timing_ms"));
  CHECK(j["timing_ms"].contains("cartan"));
}

TEST_CASE("failed checks are reported") {
  Report r;
  r.check("ok", 1, 1);
  r.check("bad", 1, 2);
  CHECK_FALSE(r.all_pass());
  CHECK(r.to_text().find("FAIL bad") != std::string::npos);
}
