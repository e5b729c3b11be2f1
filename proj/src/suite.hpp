#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace towerkit {

struct SuiteResult {
  std::string selector;
  uint64_t trials = 0;
  bool pass = false;
  std::string detail;          // one line: what ran, what failed
  std::string counterexample;  // replay data for the failing trial, if any
  uint64_t total_ms = 0;
  uint64_t max_trial_ms = 0;
};

std::vector<std::string> suite_selectors();

// Run one named property battery. trials = 0 picks the battery's default.
// Unknown selectors throw ValidationError listing the available ones.
SuiteResult run_suite(const std::string& selector, uint64_t trials, uint64_t seed);

}  // namespace towerkit
