#pragma once

#include <string>
#include <vector>

namespace towerkit {

std::vector<std::string> demo_names();

// Scenario text for a bundled demo; throws ValidationError for unknown
// names, listing the available ones.
std::string demo_scenario_text(const std::string& name);

}  // namespace towerkit
