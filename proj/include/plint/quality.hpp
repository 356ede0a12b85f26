// SPDX-License-Identifier: Apache-2.0

#ifndef PLINT_QUALITY_HPP
#define PLINT_QUALITY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plint/code_model.hpp"
#include "plint/rules.hpp"

namespace plint {

struct ScoreConfig {
  /// rule id -> dmax; rules not listed use the severity default.
  std::map<std::string, double> rule_density_limits;
  std::map<Severity, double> severity_weights;
  std::map<Principle, double> principle_weights;

  /// major 2 / minor 1 / info 0.5; SRP, SOC, DRY, IH, OCP at 2 and the rest at 1.
  static ScoreConfig defaults();

  double density_limit(const RuleDescriptor& rule) const;
  double severity_weight(Severity s) const;
  double principle_weight(Principle p) const;

  /// Throws NonPositiveLimit for any limit or weight <= 0.
  void validate() const;
};

/// dmax when a rule has no explicit limit: major 0.10, minor 0.25, info 0.50.
double default_density_limit(Severity s);

/// findings / scope; 0 when the scope is empty.
double violation_density(std::size_t findings, std::size_t scope_size);

/// max(0, 1 - density / dmax). Throws NonPositiveLimit.
double utility(double density, double dmax);

struct RuleUtility {
  double utility = 1.0;
  Severity severity = Severity::Minor;
};

/// Severity-weighted mean. Throws NoEnabledRules for an empty list.
double principle_score(std::span<const RuleUtility> rules, const ScoreConfig& config);

struct OverallScore {
  double overall = 1.0;
  double grade = 1.0;  // 1 + 5 (1 - overall)
};

/// Principle-weighted mean of the scored principles. Throws NothingScored.
OverallScore overall_and_grade(const std::map<Principle, double>& scores, const ScoreConfig& config);

struct RuleScore {
  Principle principle = Principle::SRP;
  Severity severity = Severity::Minor;
  std::size_t finding_count = 0;
  std::size_t scope_size = 0;
  double density = 0.0;
  double density_limit = 0.0;
  double utility = 1.0;
};

struct QualityReport {
  std::map<std::string, RuleScore> per_rule;
  std::map<Principle, double> per_principle;  // principles with enabled rules only
  std::optional<OverallScore> overall;        // empty when nothing was scored
};

/// Scores the enabled rules against the findings they produced.
QualityReport assess(const CodeModel& model, std::span<const Finding> findings,
                     std::span<const std::string> enabled_rule_ids, const ScoreConfig& config);

}  // namespace plint

#endif  // PLINT_QUALITY_HPP
