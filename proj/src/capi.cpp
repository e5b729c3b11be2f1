#include "towerkit/towerkit.h"

#include "demos.hpp"
#include "pipeline.hpp"
#include "report.hpp"
#include "scenario.hpp"
#include "suite.hpp"

#include <json.hpp>

#include <cstring>
#include <new>
#include <string>

using namespace towerkit;

extern "C" {

struct twk_run {
  RunOutcome outcome;
  std::string report;
};

namespace {

void put_error(char* errbuf, size_t errcap, const std::string& msg) {
  if (!errbuf || errcap == 0) return;
  size_t n = std::min(errcap - 1, msg.size());
  std::memcpy(errbuf, msg.data(), n);
  errbuf[n] = '\0';
}

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (!out) return nullptr;
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

}  // namespace

const char* twk_status_name(twk_status s) {
  switch (s) {
    case TWK_OK: return "ok";
    case TWK_CHECK_FAILED: return "check-failed";
    case TWK_INVALID: return "invalid";
    case TWK_ERROR: return "error";
  }
  return "?";
}

const char* twk_version(void) {
  return "0.1.0";
}

twk_status twk_run_scenario(const char* scenario_json, twk_run** out, char* errbuf,
                            size_t errcap) {
  if (!scenario_json || !out) {
    put_error(errbuf, errcap, "null argument");
    return TWK_INVALID;
  }
  *out = nullptr;
  try {
    Scenario sc = Scenario::from_json_text(scenario_json);
    auto run = std::make_unique<twk_run>();
    run->outcome = run_scenario(sc);
    *out = run.release();
    return TWK_OK;
  } catch (const ValidationError& e) {
    put_error(errbuf, errcap, e.what());
    return TWK_INVALID;
  } catch (const std::exception& e) {
    put_error(errbuf, errcap, e.what());
    return TWK_ERROR;
  }
}

int twk_run_passed(const twk_run* run) {
  return run && run->outcome.pass ? 1 : 0;
}

const char* twk_run_report(twk_run* run, uint64_t timing_ms) {
  if (!run) return nullptr;
  try {
    run->report = build_report(run->outcome, timing_ms);
    return run->report.c_str();
  } catch (const std::exception&) {
    return nullptr;
  }
}

void twk_run_free(twk_run* run) {
  delete run;
}

twk_status twk_check_report(const char* report_json, char* errbuf, size_t errcap) {
  if (!report_json) {
    put_error(errbuf, errcap, "null argument");
    return TWK_INVALID;
  }
  try {
    ReportVerdict v = check_report(report_json);
    if (v.ok) return TWK_OK;
    if (v.reason.rfind("report: not valid JSON", 0) == 0 ||
        v.reason.rfind("report: missing field", 0) == 0 ||
        v.reason.rfind("report: expected schema", 0) == 0) {
      put_error(errbuf, errcap, v.reason);
      return TWK_INVALID;
    }
    put_error(errbuf, errcap, v.reason);
    return TWK_CHECK_FAILED;
  } catch (const std::exception& e) {
    put_error(errbuf, errcap, e.what());
    return TWK_ERROR;
  }
}

twk_status twk_demo_scenario(const char* name, char** json_out, char* errbuf, size_t errcap) {
  if (!name || !json_out) {
    put_error(errbuf, errcap, "null argument");
    return TWK_INVALID;
  }
  try {
    *json_out = dup_string(demo_scenario_text(name));
    return *json_out ? TWK_OK : TWK_ERROR;
  } catch (const ValidationError& e) {
    put_error(errbuf, errcap, e.what());
    return TWK_INVALID;
  } catch (const std::exception& e) {
    put_error(errbuf, errcap, e.what());
    return TWK_ERROR;
  }
}

twk_status twk_demo_names(char** names_out) {
  if (!names_out) return TWK_INVALID;
  std::string joined;
  for (const auto& n : demo_names()) {
    if (!joined.empty()) joined += '\n';
    joined += n;
  }
  *names_out = dup_string(joined);
  return *names_out ? TWK_OK : TWK_ERROR;
}

twk_status twk_suite(const char* selector, uint64_t trials, uint64_t seed, char** summary_out,
                     char* errbuf, size_t errcap) {
  if (!selector || !summary_out) {
    put_error(errbuf, errcap, "null argument");
    return TWK_INVALID;
  }
  try {
    SuiteResult res = run_suite(selector, trials, seed);
    nlohmann::ordered_json j;
    j["selector"] = res.selector;
    j["trials"] = res.trials;
    j["pass"] = res.pass;
    j["detail"] = res.detail;
    j["counterexample"] = res.counterexample;
    j["total_ms"] = res.total_ms;
    j["max_trial_ms"] = res.max_trial_ms;
    *summary_out = dup_string(j.dump());
    if (!*summary_out) return TWK_ERROR;
    if (!res.pass) {
      put_error(errbuf, errcap, res.detail);
      return TWK_CHECK_FAILED;
    }
    return TWK_OK;
  } catch (const ValidationError& e) {
    put_error(errbuf, errcap, e.what());
    return TWK_INVALID;
  } catch (const std::exception& e) {
    put_error(errbuf, errcap, e.what());
    return TWK_ERROR;
  }
}

twk_status twk_suite_selectors(char** names_out) {
  if (!names_out) return TWK_INVALID;
  std::string joined;
  for (const auto& n : suite_selectors()) {
    if (!joined.empty()) joined += '\n';
    joined += n;
  }
  *names_out = dup_string(joined);
  return *names_out ? TWK_OK : TWK_ERROR;
}

void twk_string_free(char* s) {
  delete[] s;
}

}  // extern "C"
