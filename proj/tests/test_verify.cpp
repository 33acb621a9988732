#include <doctest.h>
#include <json.hpp>

#include "gsk/error.hpp"
#include "gsk/verify.hpp"

using namespace gsk;

TEST_CASE("suite enumeration") {
  CHECK(suite_names() == std::vector<std::string>{"groups", "cocycles", "orbits", "reps", "transforms"});
  try {
    run_verify({"bogus", 1, 10});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Domain);
  }
  try {
    run_verify({"groups", 1, 0});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidSampleCount);
  }
}

TEST_CASE("JSON report schema") {
  auto r = run_verify({"orbits", 7, 50});
  auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["suite"] == "orbits");
  CHECK(j["seed"] == 7);
  CHECK(j["pass"].is_boolean());
  REQUIRE(j["checks"].is_array());
  CHECK(j["checks"].size() == r.checks.size());
  for (const auto& c : j["checks"]) {
    CHECK(c["name"].is_string());
    CHECK((c["defect"].is_number() || c["defect"].is_null()));
    CHECK(c["tol"].is_number());
    CHECK(c["pass"].is_boolean());
  }
  CHECK(r.pass());
}

TEST_CASE("same seed, same report") {
  auto a = report_json(run_verify({"cocycles", 3, 40}));
  auto b = report_json(run_verify({"cocycles", 3, 40}));
  CHECK(a == b);
  auto all = run_verify({"all", 3, 20});
  CHECK(all.suite == "all");
  CHECK(all.checks.size() > 100);
  CHECK(all.checks.front().name.rfind("groups: ", 0) == 0);
}

TEST_CASE("NaN defects fail and serialize as null") {
  Report r{"x", 1, {make_check("nan", std::nan(""), 1.0), make_check("ok", 0.5, 1.0)}};
  CHECK(!r.pass());
  auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["checks"][0]["defect"].is_null());
  CHECK(j["checks"][0]["pass"] == false);
  CHECK(j["pass"] == false);
  CHECK(report_table(r).find("FAIL") != std::string::npos);
}
