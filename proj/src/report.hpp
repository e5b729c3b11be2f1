#pragma once

#include "pipeline.hpp"

#include <string>

namespace towerkit {

// Serialize a finished run. Every rational goes out as an exact "num/den"
// string and every set as "prefix|period" text, so the report re-verifies
// on its own.
std::string build_report(const RunOutcome& out, uint64_t timing_ms);

struct ReportVerdict {
  bool ok = true;
  std::string reason;
};

// Re-verify a serialized report from its own data alone: point values are
// recomputed from the sets, certificates are re-checked against the
// serialized condition, and the derived tables and verdicts must match.
ReportVerdict check_report(const std::string& report_text);

}  // namespace towerkit
