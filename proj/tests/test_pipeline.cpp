#include "doctest.h"

#include "demos.hpp"
#include "pipeline.hpp"
#include "report.hpp"

#include <json.hpp>

using namespace towerkit;

TEST_CASE("scenario parsing is fail-closed") {
  CHECK_THROWS_AS(Scenario::from_json_text("not json"), ValidationError);
  CHECK_THROWS_AS(Scenario::from_json_text("{}"), ValidationError);  // missing schema
  CHECK_THROWS_AS(
      Scenario::from_json_text(R"({"schema":"towerkit.scenario/1","x":"|10","bogus":1})"),
      ValidationError);
  CHECK_THROWS_AS(
      Scenario::from_json_text(
          R"({"schema":"towerkit.scenario/1","x":"|10","schedule":[{"op":"warp"}]})"),
      ValidationError);
  // X must be infinite-coinfinite
  CHECK_THROWS_AS(Scenario::from_json_text(R"({"schema":"towerkit.scenario/1","x":"101|0"})"),
                  ValidationError);
  // task argument ranges
  CHECK_THROWS_AS(
      Scenario::from_json_text(
          R"({"schema":"towerkit.scenario/1","x":"|10","schedule":[{"op":"add_domain","level":5}]})"),
      ValidationError);
}

TEST_CASE("scenario round trip") {
  std::string text = demo_scenario_text("tower16");
  Scenario sc = Scenario::from_json_text(text);
  CHECK(sc.name == "tower16");
  CHECK(sc.tower_size() == 16);
  CHECK(sc.schedule.size() == 24);
  Scenario again = Scenario::from_json_text(sc.to_json_text());
  CHECK(again.to_json_text() == sc.to_json_text());
}

TEST_CASE("empty schedule gives a passing empty report") {
  Scenario sc = Scenario::from_json_text(demo_scenario_text("empty"));
  RunOutcome out = run_scenario(sc);
  CHECK(out.pass);
  CHECK_FALSE(out.poset.present);
  CHECK_FALSE(out.homeo.present);
  CHECK(out.transcript.empty());
  auto verdict = check_report(build_report(out, 0));
  CHECK(verdict.ok);
}

TEST_CASE("minimal demo runs and re-verifies") {
  Scenario sc = Scenario::from_json_text(demo_scenario_text("minimal"));
  RunOutcome out = run_scenario(sc);
  CHECK(out.pass);
  REQUIRE(out.poset.certs.size() == 1);
  CHECK(out.poset.witnessed.size() == 1);
  std::string report = build_report(out, 7);
  auto verdict = check_report(report);
  CHECK(verdict.ok);

  // determinism: the same scenario reproduces the report byte for byte
  RunOutcome again = run_scenario(sc);
  CHECK(build_report(again, 7) == report);
}

TEST_CASE("explicit tower levels are validated") {
  Scenario sc;
  sc.name = "explicit";
  sc.x_text = "|10";
  sc.tower_levels = {"|10", "|1000"};  // multiples of 4: strictly below the evens
  sc.schedule.push_back(Task{TaskKind::AddDomain, 1});
  sc.schedule.push_back(Task{TaskKind::MeetContainment, 0});
  RunOutcome out = run_scenario(sc);
  CHECK(out.pass);

  Scenario bad = sc;
  bad.tower_levels = {"|10", "|01"};  // odds are not almost inside the evens
  CHECK_THROWS_AS(run_scenario(bad), ValidationError);

  Scenario loose = sc;
  loose.tower_levels = {"|10", "11|10"};  // equal mod finite: no strict decrease
  CHECK_THROWS_AS(run_scenario(loose), ValidationError);
}

TEST_CASE("add_range meets pre-registered points") {
  Scenario sc;
  sc.name = "range";
  sc.x_text = "|10";
  sc.tower_prefixes = {"1"};
  sc.b_points = {BPointSpec{"01", 0}, BPointSpec{"1", 0}};
  sc.schedule.push_back(Task{TaskKind::AddRange, 0});
  sc.schedule.push_back(Task{TaskKind::AddRange, 1});
  sc.schedule.push_back(Task{TaskKind::AddDomain, 1});
  RunOutcome out = run_scenario(sc);
  CHECK(out.pass);
  CHECK(out.poset.cond.range_contains(0));
  CHECK(out.poset.cond.range_contains(1));
  CHECK(out.poset.cond.size() == 3);
}

TEST_CASE("cap exhaustion is a validation error") {
  Scenario sc;
  sc.name = "cap";
  sc.x_text = "|10";
  sc.tower_prefixes = {"1"};
  sc.schedule.push_back(Task{TaskKind::MeetContainment, 63});
  sc.caps.search_cap = 63;
  CHECK_THROWS_AS(run_scenario(sc), ValidationError);
}

TEST_CASE("tampered reports are rejected") {
  Scenario sc = Scenario::from_json_text(demo_scenario_text("minimal"));
  RunOutcome out = run_scenario(sc);
  std::string report = build_report(out, 0);
  REQUIRE(check_report(report).ok);

  using nlohmann::ordered_json;
  SUBCASE("flipped rational") {
    ordered_json j = ordered_json::parse(report);
    std::string v = j["a_points"][0]["value"].get<std::string>();
    v[0] = (v[0] == '1') ? '2' : '1';
    j["a_points"][0]["value"] = v;
    auto verdict = check_report(j.dump());
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.reason.find("value") != std::string::npos);
  }
  SUBCASE("swapped certificate ids") {
    ordered_json j = ordered_json::parse(report);
    j["poset"]["certificates"][0]["entries"][0]["b0"] = 999;
    CHECK_FALSE(check_report(j.dump()).ok);
  }
  SUBCASE("dropped witnessed level") {
    ordered_json j = ordered_json::parse(report);
    j["poset"]["witnessed"] = ordered_json::array();
    CHECK_FALSE(check_report(j.dump()).ok);
  }
  SUBCASE("forged overall verdict") {
    ordered_json j = ordered_json::parse(report);
    j["checks"][0]["pass"] = false;
    CHECK_FALSE(check_report(j.dump()).ok);
  }
  SUBCASE("malformed json") {
    CHECK_FALSE(check_report("{").ok);
    CHECK_FALSE(check_report(R"({"schema":"towerkit.report/9"})").ok);
  }
  SUBCASE("absurd certificate level") {
    ordered_json j = ordered_json::parse(report);
    j["poset"]["certificates"][0]["l"] = 1000000000ull;  // allocation bomb bait
    CHECK_FALSE(check_report(j.dump()).ok);
  }
}

TEST_CASE("homeo demo runs and re-verifies") {
  Scenario sc = Scenario::from_json_text(demo_scenario_text("homeo8"));
  RunOutcome out = run_scenario(sc);
  CHECK(out.pass);
  CHECK(out.homeo.present);
  CHECK(out.homeo.certs.size() == 4);
  std::string report = build_report(out, 0);
  CHECK(check_report(report).ok);

  // tamper with the permutation table
  using nlohmann::ordered_json;
  ordered_json j = ordered_json::parse(report);
  auto pi = j["homeo"]["condition"]["pi"];
  std::swap(pi[0], pi[1]);
  j["homeo"]["condition"]["pi"] = pi;
  CHECK_FALSE(check_report(j.dump()).ok);

  // absurd permutation level
  ordered_json j2 = ordered_json::parse(report);
  j2["homeo"]["condition"]["level"] = 64;
  CHECK_FALSE(check_report(j2.dump()).ok);
}

TEST_CASE("unknown demo names list the options") {
  try {
    demo_scenario_text("nope");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("tower16") != std::string::npos);
  }
}
