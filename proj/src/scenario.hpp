#pragma once

#include "tower.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace towerkit {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class TaskKind { AddDomain, AddRange, MeetContainment, HomeoAdd, HomeoFixBit };

struct Task {
  TaskKind kind;
  uint64_t arg = 0;  // tower level, b-point index, or floor k
};

struct ScenarioCaps {
  uint64_t search_cap = 64;
  uint64_t level_cap = 60;
  uint64_t horizon = 256;  // pseudointersection scan horizon
  TowerParams tower;
};

struct BPointSpec {
  std::string prefix;  // characteristic bits the point must start with
  int color = 0;
};

// One run request: base set, tower description, pre-registered b-points,
// a task schedule, caps, and the seed echoed into the report. Parsing is
// fail-closed: unknown fields are rejected.
struct Scenario {
  std::string name;
  std::string x_text;
  std::vector<std::string> tower_prefixes;  // generation request, one per level
  std::vector<std::string> tower_levels;    // explicit alternative (excludes x/prefixes)
  std::vector<BPointSpec> b_points;
  int colors = 1;
  std::vector<Task> schedule;
  ScenarioCaps caps;
  uint64_t seed = 0;

  static Scenario from_json_text(const std::string& text);
  std::string to_json_text() const;  // normalized form

  size_t tower_size() const {
    return tower_levels.empty() ? tower_prefixes.size() + 1 : tower_levels.size();
  }
  bool has_poset_tasks() const;
  bool has_homeo_tasks() const;

  void validate() const;  // structural checks before any run
};

const char* task_kind_name(TaskKind k);

}  // namespace towerkit
