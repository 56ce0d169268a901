#pragma once

#include "weylprice/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace weylprice {

/// One named entry of a suite configuration.
struct SuiteEntry {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
};

struct SuiteConfig {
  std::uint64_t seed = 20240917;
  std::vector<SuiteEntry> checks;
};

/// {"seed": int, "checks": [{"name": ..., "params": {...}} | "name", ...]}.
/// An empty check list is an InputError.
SuiteConfig suite_config_from_json(const nlohmann::json& j);

/// Every built-in acceptance criterion, in canonical order.
const std::vector<std::string>& criterion_names();
/// Config running every criterion with default parameters.
SuiteConfig default_suite_config(std::uint64_t seed = 20240917);

struct CriterionOutcome {
  std::string name;
  std::vector<Check> checks;
  double seconds = 0.0;
  double time_limit = 0.0;  // 0: no limit
  bool within_time() const { return time_limit <= 0.0 || seconds < time_limit; }
  bool pass() const;
};

/// Runs one criterion. Exceptions are recorded as a failing check; unknown
/// names raise InputError.
CriterionOutcome run_criterion(const SuiteEntry& entry, std::uint64_t seed);

/// Runs the entries in config order. Runtime checks enter the report only
/// with `timing`, which keeps untimed reports byte-identical across runs.
Report run_suite(const SuiteConfig& config, bool timing = false,
                 std::vector<CriterionOutcome>* outcomes = nullptr);

}  // namespace weylprice
