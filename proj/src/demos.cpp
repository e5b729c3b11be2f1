#include "demos.hpp"

#include "scenario.hpp"

namespace towerkit {

namespace {

// 16-level tower over {0..11} plus the evens beyond; the levels' complement
// prefixes put their single marker at positions the base set misses, so all
// twelve floors 0..11 stay available as witnessed levels.
Scenario make_tower16() {
  Scenario sc;
  sc.name = "tower16";
  sc.x_text = "111111111111|10";
  for (int alpha = 1; alpha <= 15; ++alpha) {
    std::string w(12 + 2 * alpha, '0');
    w.back() = '1';  // complement marker at the odd position 11 + 2*alpha
    sc.tower_prefixes.push_back(std::move(w));
  }
  for (uint64_t lvl = 1; lvl <= 12; ++lvl)
    sc.schedule.push_back(Task{TaskKind::AddDomain, lvl});
  for (uint64_t k = 0; k <= 11; ++k)
    sc.schedule.push_back(Task{TaskKind::MeetContainment, k});
  sc.caps.search_cap = 64;
  sc.caps.level_cap = 128;  // target levels deepen by ~7 per extension
  sc.caps.horizon = 256;
  sc.caps.tower.window_horizon = 160;
  sc.caps.tower.depth_cap = 150;
  sc.caps.tower.mint_modulus = 512;
  sc.seed = 1;
  return sc;
}

Scenario make_homeo8() {
  Scenario sc;
  sc.name = "homeo8";
  sc.x_text = "|10";
  for (int alpha = 1; alpha <= 7; ++alpha) {
    std::string w(2 * alpha, '0');
    w.back() = '1';  // marker at the odd position 2*alpha - 1
    sc.tower_prefixes.push_back(std::move(w));
  }
  sc.colors = 2;
  for (uint64_t lvl = 1; lvl <= 4; ++lvl) sc.schedule.push_back(Task{TaskKind::HomeoAdd, lvl});
  for (uint64_t k : {0ull, 1ull, 2ull, 3ull})
    sc.schedule.push_back(Task{TaskKind::HomeoFixBit, k});
  sc.seed = 1;
  return sc;
}

Scenario make_minimal() {
  Scenario sc;
  sc.name = "minimal";
  sc.x_text = "|10";
  sc.tower_prefixes.push_back("1");
  sc.schedule.push_back(Task{TaskKind::AddDomain, 1});
  sc.schedule.push_back(Task{TaskKind::MeetContainment, 0});
  sc.seed = 1;
  return sc;
}

Scenario make_empty() {
  Scenario sc;
  sc.name = "empty";
  sc.x_text = "|10";
  sc.seed = 1;
  return sc;
}

}  // namespace

std::vector<std::string> demo_names() {
  return {"tower16", "homeo8", "minimal", "empty"};
}

std::string demo_scenario_text(const std::string& name) {
  if (name == "tower16") return make_tower16().to_json_text();
  if (name == "homeo8") return make_homeo8().to_json_text();
  if (name == "minimal") return make_minimal().to_json_text();
  if (name == "empty") return make_empty().to_json_text();
  std::string msg = "unknown demo '" + name + "'; available:";
  for (const auto& n : demo_names()) msg += " " + n;
  throw ValidationError(msg);
}

}  // namespace towerkit
