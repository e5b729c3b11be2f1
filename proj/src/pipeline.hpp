#pragma once

#include "containment.hpp"
#include "homeo.hpp"
#include "scenario.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace towerkit {

struct TranscriptEntry {
  Task task;
  std::string summary;
  std::vector<std::pair<size_t, size_t>> added_pairs;  // (a,b) ids added by this task
  std::optional<size_t> cert_index;
};

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct PosetSection {
  bool present = false;
  poset::Condition cond;
  std::vector<containment::Certificate> certs;
  std::vector<uint64_t> witnessed;  // in task order
  std::vector<uint64_t> xinf;
  containment::InvariantReport invariant;
};

struct HomeoSection {
  bool present = false;
  homeo::HomeoCondition cond = homeo::HomeoCondition::minimal();
  std::vector<homeo::FixCertificate> certs;
  std::vector<uint64_t> witnessed;
  containment::InvariantReport invariant;
};

struct RunOutcome {
  Scenario scenario;
  std::unique_ptr<poset::Registry> registry;
  PosetSection poset;
  HomeoSection homeo;
  std::vector<TranscriptEntry> transcript;
  std::vector<CheckItem> checks;
  bool pass = false;
};

// Execute the scenario deterministically. Structural problems (bad tower,
// cap exhaustion, minting failure) raise ValidationError; check failures
// land in the outcome's check list instead.
RunOutcome run_scenario(const Scenario& sc);

}  // namespace towerkit
