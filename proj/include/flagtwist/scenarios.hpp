#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagtwist/io.hpp"

namespace flagtwist {

struct ScenarioParams {
  std::optional<int> d;
  std::optional<int> n;
  std::optional<int> trials;
};

struct CheckRecord {
  std::string key;
  std::string relation;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct TrialRecord {
  int index = 0;
  std::uint64_t seed = 0;
  std::string status;  // pass | fail | hypothesis-not-met
  int retries = 0;
  std::vector<CheckRecord> checks;
  std::vector<std::string> notes;
};

struct Report {
  std::string scenario;
  std::string claim;
  int d = 0;
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> trial_records;
  int pass = 0, fail = 0, hypothesis_not_met = 0;
  std::string overall;  // pass | fail
  double wall_ms = 0.0;
};

struct ScenarioInfo {
  std::string name;
  std::string claim;
  bool uses_d = false;
  bool uses_n = false;
  int default_d = 0;
  int default_n = 0;
  int default_trials = 20;
};

const std::vector<ScenarioInfo>& scenario_registry();

// Runs the named scenario deterministically: per-trial seeds are derived
// from (seed, trial index) and a bounded reseeded retry absorbs draws whose
// hypotheses fail. Throws UnknownScenario / BadParams.
Report run_scenario(const std::string& name, const ScenarioParams& params,
                    std::uint64_t seed);

Json report_to_json(const Report& report);
std::string report_to_text(const Report& report);
std::string report_to_csv(const Report& report);

}  // namespace flagtwist
