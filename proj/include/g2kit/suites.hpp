#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2kit/serialize.hpp"

namespace g2kit {

enum class CheckStatus { pass, fail, precision };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  int samples = 0;
  std::optional<std::string> counterexample;
  double wall_ms = 0;
};

struct SuiteReport {
  std::string suite;
  FieldConfig config;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  double wall_ms = 0;

  bool ok() const;
  /// 0 pass, 1 violation, 3 precision exhaustion.
  int exit_code() const;
  /// Keys sorted; wall times appear only in the top-level "wall_time_ms" field.
  Json to_json(bool with_time = true) const;
  std::string text() const;
};

/// octonion, triality, norms, filtration, strata.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
/// Check names of a suite, in run order; "all" concatenates the suites in suite_names() order.
std::vector<std::string> suite_checks(const std::string& suite);

/// Runs one named check with an RNG derived from (seed, name).
CheckResult run_check(const std::string& name, const FieldConfig& cfg, std::uint64_t seed);
/// ConfigError on an unknown suite name.
SuiteReport run_suite(const std::string& suite, const FieldConfig& cfg, std::uint64_t seed);

}  // namespace g2kit
