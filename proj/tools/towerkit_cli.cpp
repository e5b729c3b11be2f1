// Command line front end; talks to the library through the C API only.

#include "towerkit/towerkit.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int status_to_exit(twk_status s) {
  switch (s) {
    case TWK_OK: return kExitPass;
    case TWK_CHECK_FAILED: return kExitCheckFailed;
    default: return kExitInvalid;
  }
}

// --caps key=value[,key=value...] patches the scenario's caps object;
// --seed overrides the seed.
std::string patch_scenario(const std::string& text, const std::vector<std::string>& caps,
                           const std::optional<uint64_t>& seed) {
  if (caps.empty() && !seed) return text;
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  for (const auto& item : caps) {
    std::stringstream ss(item);
    std::string kv;
    while (std::getline(ss, kv, ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::runtime_error("--caps expects key=value, got " + kv);
      j["caps"][kv.substr(0, eq)] = std::stoull(kv.substr(eq + 1));
    }
  }
  if (seed) j["seed"] = *seed;
  return j.dump();
}

int run_text(const std::string& scenario, const std::string& out_path) {
  char err[1024] = {0};
  twk_run* run = nullptr;
  auto t0 = std::chrono::steady_clock::now();
  twk_status st = twk_run_scenario(scenario.c_str(), &run, err, sizeof err);
  if (st != TWK_OK) {
    std::cerr << "error (" << twk_status_name(st) << "): " << err << "\n";
    return status_to_exit(st);
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  const char* report = twk_run_report(run, static_cast<uint64_t>(ms));
  if (!report) {
    twk_run_free(run);
    std::cerr << "error: report serialization failed\n";
    return kExitInvalid;
  }
  bool passed = twk_run_passed(run) != 0;
  if (out_path.empty()) {
    std::cout << report << "\n";
  } else {
    write_file(out_path, report);
    std::cout << (passed ? "pass" : "FAIL") << " (" << ms << " ms), report written to "
              << out_path << "\n";
  }
  twk_run_free(run);
  return passed ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tower forcing workbench"};
  app.require_subcommand(1);

  std::string scenario_path, report_path, demo_name, selector, out_path, emit_path;
  std::vector<std::string> caps;
  std::optional<uint64_t> seed_override;
  uint64_t trials = 0, seed = 0;

  auto* run_cmd = app.add_subcommand("run", "execute a scenario file and emit its report");
  run_cmd->add_option("scenario", scenario_path, "scenario JSON file")->required();
  run_cmd->add_option("--out", out_path, "report output path (default: stdout)");
  run_cmd->add_option("--caps", caps, "override caps, key=value[,key=value...]");
  run_cmd->add_option("--seed", seed_override, "override the scenario seed");

  auto* check_cmd = app.add_subcommand("check", "re-verify a serialized report");
  check_cmd->add_option("report", report_path, "report JSON file")->required();

  auto* demo_cmd = app.add_subcommand("demo", "run a bundled scenario by name");
  demo_cmd->add_option("name", demo_name, "demo name (see --list)");
  demo_cmd->add_flag_callback("--list", [] {
    char* names = nullptr;
    if (twk_demo_names(&names) == TWK_OK) {
      std::cout << names << "\n";
      twk_string_free(names);
    }
    std::exit(kExitPass);
  });
  demo_cmd->add_option("--out", out_path, "report output path (default: stdout)");
  demo_cmd->add_option("--emit-scenario", emit_path, "also write the scenario text here");

  auto* suite_cmd = app.add_subcommand("suite", "run a property battery");
  suite_cmd->add_option("selector", selector, "battery name (see --list)");
  suite_cmd->add_flag_callback("--list", [] {
    char* names = nullptr;
    if (twk_suite_selectors(&names) == TWK_OK) {
      std::cout << names << "\n";
      twk_string_free(names);
    }
    std::exit(kExitPass);
  });
  suite_cmd->add_option("--trials", trials, "trial count (0 = battery default)");
  suite_cmd->add_option("--seed", seed, "generator seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      return run_text(patch_scenario(read_file(scenario_path), caps, seed_override), out_path);
    }

    if (check_cmd->parsed()) {
      char err[1024] = {0};
      std::string text = read_file(report_path);
      twk_status st = twk_check_report(text.c_str(), err, sizeof err);
      if (st == TWK_OK) {
        std::cout << "pass: report re-verified\n";
      } else {
        std::cerr << "FAIL (" << twk_status_name(st) << "): " << err << "\n";
      }
      return status_to_exit(st);
    }

    if (demo_cmd->parsed()) {
      if (demo_name.empty()) {
        std::cerr << "error: demo name required (or --list)\n";
        return kExitInvalid;
      }
      char err[1024] = {0};
      char* scenario = nullptr;
      twk_status st = twk_demo_scenario(demo_name.c_str(), &scenario, err, sizeof err);
      if (st != TWK_OK) {
        std::cerr << "error (" << twk_status_name(st) << "): " << err << "\n";
        return status_to_exit(st);
      }
      std::string text(scenario);
      twk_string_free(scenario);
      if (!emit_path.empty()) write_file(emit_path, text);
      return run_text(text, out_path);
    }

    if (suite_cmd->parsed()) {
      if (selector.empty()) {
        std::cerr << "error: suite selector required (or --list)\n";
        return kExitInvalid;
      }
      char err[1024] = {0};
      char* summary = nullptr;
      twk_status st = twk_suite(selector.c_str(), trials, seed, &summary, err, sizeof err);
      if (summary) {
        std::cout << summary << "\n";
        twk_string_free(summary);
      }
      if (st != TWK_OK && !summary) std::cerr << "error: " << err << "\n";
      return status_to_exit(st);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
