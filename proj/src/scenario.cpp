#include "scenario.hpp"

#include "upset.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace towerkit {

using nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "towerkit.scenario/1";

void reject_unknown(const ordered_json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key()))
      throw ValidationError("scenario: unknown field '" + it.key() + "' in " + where);
  }
}

uint64_t get_u64(const ordered_json& obj, const char* key, uint64_t fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number_unsigned())
    throw ValidationError(std::string("scenario: field '") + key +
                          "' must be a nonnegative integer");
  return obj[key].get<uint64_t>();
}

}  // namespace

const char* task_kind_name(TaskKind k) {
  switch (k) {
    case TaskKind::AddDomain: return "add_domain";
    case TaskKind::AddRange: return "add_range";
    case TaskKind::MeetContainment: return "meet_containment";
    case TaskKind::HomeoAdd: return "homeo_add";
    case TaskKind::HomeoFixBit: return "homeo_fix_bit";
  }
  return "?";
}

bool Scenario::has_poset_tasks() const {
  return std::any_of(schedule.begin(), schedule.end(), [](const Task& t) {
    return t.kind == TaskKind::AddDomain || t.kind == TaskKind::AddRange ||
           t.kind == TaskKind::MeetContainment;
  });
}

bool Scenario::has_homeo_tasks() const {
  return std::any_of(schedule.begin(), schedule.end(), [](const Task& t) {
    return t.kind == TaskKind::HomeoAdd || t.kind == TaskKind::HomeoFixBit;
  });
}

Scenario Scenario::from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("scenario: not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("scenario: top level must be an object");
  reject_unknown(j,
                 {"schema", "name", "x", "tower_prefixes", "tower_levels", "b_points", "colors",
                  "schedule", "caps", "seed"},
                 "the top level");
  if (!j.contains("schema") || j["schema"] != kSchema)
    throw ValidationError(std::string("scenario: expected schema '") + kSchema + "'");

  Scenario sc;
  sc.name = j.value("name", std::string("unnamed"));
  if (!j.contains("x") || !j["x"].is_string())
    throw ValidationError("scenario: field 'x' (base set text) is required");
  sc.x_text = j["x"].get<std::string>();

  for (const char* key : {"tower_prefixes", "tower_levels"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_array()) throw ValidationError(std::string("scenario: '") + key + "' must be an array");
    for (const auto& e : j[key]) {
      if (!e.is_string()) throw ValidationError(std::string("scenario: '") + key + "' entries must be strings");
      (key == std::string("tower_prefixes") ? sc.tower_prefixes : sc.tower_levels)
          .push_back(e.get<std::string>());
    }
  }

  if (j.contains("b_points")) {
    if (!j["b_points"].is_array()) throw ValidationError("scenario: 'b_points' must be an array");
    for (const auto& e : j["b_points"]) {
      if (!e.is_object()) throw ValidationError("scenario: 'b_points' entries must be objects");
      reject_unknown(e, {"prefix", "color"}, "a b_points entry");
      BPointSpec spec;
      spec.prefix = e.value("prefix", std::string());
      spec.color = e.value("color", 0);
      sc.b_points.push_back(std::move(spec));
    }
  }

  if (j.contains("colors")) {
    if (!j["colors"].is_number_integer() || j["colors"].get<int>() < 1)
      throw ValidationError("scenario: 'colors' must be a positive integer");
    sc.colors = j["colors"].get<int>();
  }

  if (j.contains("schedule")) {
    if (!j["schedule"].is_array()) throw ValidationError("scenario: 'schedule' must be an array");
    for (const auto& e : j["schedule"]) {
      if (!e.is_object() || !e.contains("op") || !e["op"].is_string())
        throw ValidationError("scenario: schedule entries need a string 'op'");
      std::string op = e["op"].get<std::string>();
      Task t{};
      if (op == "add_domain") {
        reject_unknown(e, {"op", "level"}, "an add_domain task");
        t = Task{TaskKind::AddDomain, get_u64(e, "level", 0)};
      } else if (op == "add_range") {
        reject_unknown(e, {"op", "b"}, "an add_range task");
        t = Task{TaskKind::AddRange, get_u64(e, "b", 0)};
      } else if (op == "meet_containment") {
        reject_unknown(e, {"op", "k"}, "a meet_containment task");
        t = Task{TaskKind::MeetContainment, get_u64(e, "k", 0)};
      } else if (op == "homeo_add") {
        reject_unknown(e, {"op", "level"}, "a homeo_add task");
        t = Task{TaskKind::HomeoAdd, get_u64(e, "level", 0)};
      } else if (op == "homeo_fix_bit") {
        reject_unknown(e, {"op", "k"}, "a homeo_fix_bit task");
        t = Task{TaskKind::HomeoFixBit, get_u64(e, "k", 0)};
      } else {
        throw ValidationError("scenario: unknown op '" + op + "'");
      }
      sc.schedule.push_back(t);
    }
  }

  if (j.contains("caps")) {
    const auto& c = j["caps"];
    if (!c.is_object()) throw ValidationError("scenario: 'caps' must be an object");
    reject_unknown(c,
                   {"search_cap", "level_cap", "horizon", "window_horizon", "counter_bits",
                    "mint_modulus", "depth_cap"},
                   "caps");
    sc.caps.search_cap = get_u64(c, "search_cap", sc.caps.search_cap);
    sc.caps.level_cap = get_u64(c, "level_cap", sc.caps.level_cap);
    sc.caps.horizon = get_u64(c, "horizon", sc.caps.horizon);
    sc.caps.tower.window_horizon = get_u64(c, "window_horizon", sc.caps.tower.window_horizon);
    sc.caps.tower.counter_bits = get_u64(c, "counter_bits", sc.caps.tower.counter_bits);
    sc.caps.tower.mint_modulus = get_u64(c, "mint_modulus", sc.caps.tower.mint_modulus);
    sc.caps.tower.depth_cap = get_u64(c, "depth_cap", sc.caps.tower.depth_cap);
  }

  sc.seed = get_u64(j, "seed", 0);
  sc.validate();
  return sc;
}

void Scenario::validate() const {
  UPSet x;
  try {
    x = UPSet::parse(x_text);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("scenario: bad base set: ") + e.what());
  }
  if (x.cardinality_class() != CardClass::InfiniteCoinfinite)
    throw ValidationError("scenario: X must be infinite-coinfinite");

  if (!tower_levels.empty() && !tower_prefixes.empty())
    throw ValidationError("scenario: give either tower_prefixes or tower_levels, not both");

  auto check_bits = [](const std::string& s, const std::string& what) {
    for (char c : s)
      if (c != '0' && c != '1') throw ValidationError("scenario: " + what + " must be over {0,1}");
  };
  for (const auto& w : tower_prefixes) check_bits(w, "tower prefixes");
  for (const auto& b : b_points) check_bits(b.prefix, "b-point prefixes");
  for (const auto& lvl : tower_levels) {
    try {
      UPSet::parse(lvl);
    } catch (const std::exception& e) {
      throw ValidationError(std::string("scenario: bad tower level: ") + e.what());
    }
  }
  for (const auto& b : b_points)
    if (b.color < 0 || b.color >= colors)
      throw ValidationError("scenario: b-point color out of range");

  size_t levels = tower_size();
  size_t n_b = b_points.size();
  for (const auto& t : schedule) {
    switch (t.kind) {
      case TaskKind::AddDomain:
      case TaskKind::HomeoAdd:
        if (t.arg >= levels)
          throw ValidationError(std::string("scenario: ") + task_kind_name(t.kind) +
                                " level out of range");
        break;
      case TaskKind::AddRange:
        if (t.arg >= n_b) throw ValidationError("scenario: add_range b-point out of range");
        break;
      default: break;
    }
  }
  if (caps.search_cap == 0 || caps.level_cap == 0 || caps.horizon == 0)
    throw ValidationError("scenario: caps must be positive");
  if (caps.search_cap > 4096 || caps.level_cap > 4096 || caps.horizon > (1u << 20))
    throw ValidationError("scenario: search/level/horizon caps exceed the supported range");
  if (caps.tower.window_horizon > 4096 || caps.tower.depth_cap > 4096)
    throw ValidationError("scenario: window/depth caps exceed the supported range");
  if (caps.tower.mint_modulus < 2 || caps.tower.mint_modulus > (1u << 16))
    throw ValidationError("scenario: mint_modulus outside [2, 65536]");
  if (caps.tower.counter_bits < 4 || caps.tower.counter_bits > 32)
    throw ValidationError("scenario: counter_bits outside [4, 32]");
}

std::string Scenario::to_json_text() const {
  ordered_json j;
  j["schema"] = kSchema;
  j["name"] = name;
  j["x"] = x_text;
  if (!tower_prefixes.empty()) j["tower_prefixes"] = tower_prefixes;
  if (!tower_levels.empty()) j["tower_levels"] = tower_levels;
  if (!b_points.empty()) {
    ordered_json arr = ordered_json::array();
    for (const auto& b : b_points) arr.push_back({{"prefix", b.prefix}, {"color", b.color}});
    j["b_points"] = arr;
  }
  j["colors"] = colors;
  ordered_json sched = ordered_json::array();
  for (const auto& t : schedule) {
    ordered_json e;
    e["op"] = task_kind_name(t.kind);
    switch (t.kind) {
      case TaskKind::AddDomain:
      case TaskKind::HomeoAdd: e["level"] = t.arg; break;
      case TaskKind::AddRange: e["b"] = t.arg; break;
      case TaskKind::MeetContainment:
      case TaskKind::HomeoFixBit: e["k"] = t.arg; break;
    }
    sched.push_back(e);
  }
  j["schedule"] = sched;
  j["caps"] = {{"search_cap", caps.search_cap},
               {"level_cap", caps.level_cap},
               {"horizon", caps.horizon},
               {"window_horizon", caps.tower.window_horizon},
               {"counter_bits", caps.tower.counter_bits},
               {"mint_modulus", caps.tower.mint_modulus},
               {"depth_cap", caps.tower.depth_cap}};
  j["seed"] = seed;
  return j.dump();
}

}  // namespace towerkit
