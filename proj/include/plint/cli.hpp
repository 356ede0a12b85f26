// SPDX-License-Identifier: Apache-2.0

#ifndef PLINT_CLI_HPP
#define PLINT_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "plint/quality.hpp"
#include "plint/rules.hpp"

namespace plint {

enum ExitCode : int {
  kExitOk = 0,
  kExitGateFailed = 1,
  kExitInputError = 2,
  kExitConfigError = 3,
};

struct AnalysisConfig {
  std::vector<std::string> inputs;   // source files or directories
  std::optional<std::string> facts;  // facts file instead of sources
  RuleConfig rules = RuleConfig::all_rules();
  ScoreConfig scores = ScoreConfig::defaults();
  std::string format = "json";       // json | sonar | text | csv
  std::optional<std::string> output;
  std::optional<double> fail_grade;
  std::optional<std::string> project;
};

/// Applies a config document on top of `config`. Keys: enable, params,
/// weights {principles, severities}, density_limits, format, output,
/// fail_grade, project. Throws ConfigError.
void apply_config_document(const nlohmann::json& doc, AnalysisConfig& config);

/// "R-KISS-1.max_cyclomatic=20"; a value that is not a number becomes a
/// comma-separated string list. Throws ConfigError.
void apply_param_assignment(const std::string& assignment, AnalysisConfig& config);

/// Checks rules, scores, format and fail_grade. Throws ConfigError or
/// NonPositiveLimit.
void validate_analysis_config(const AnalysisConfig& config);

/// FNV-1a 64 digest of the effective rule and score configuration.
std::string config_digest(const AnalysisConfig& config);

/// Entry point behind the principle-lint executable.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plint

#endif  // PLINT_CLI_HPP
