// SPDX-License-Identifier: Apache-2.0

#include "plint/quality.hpp"

#include <algorithm>

#include "plint/error.hpp"

namespace plint {

ScoreConfig ScoreConfig::defaults() {
  ScoreConfig c;
  c.severity_weights = {{Severity::Major, 2.0}, {Severity::Minor, 1.0}, {Severity::Info, 0.5}};
  for (Principle p : kAllPrinciples) c.principle_weights[p] = 1.0;
  for (Principle p : {Principle::SRP, Principle::SOC, Principle::DRY, Principle::IH, Principle::OCP}) {
    c.principle_weights[p] = 2.0;
  }
  return c;
}

double default_density_limit(Severity s) {
  switch (s) {
    case Severity::Major: return 0.10;
    case Severity::Minor: return 0.25;
    case Severity::Info: return 0.50;
  }
  return 0.25;
}

double ScoreConfig::density_limit(const RuleDescriptor& rule) const {
  auto it = rule_density_limits.find(rule.rule_id);
  return it == rule_density_limits.end() ? default_density_limit(rule.severity) : it->second;
}

double ScoreConfig::severity_weight(Severity s) const {
  auto it = severity_weights.find(s);
  return it == severity_weights.end() ? defaults().severity_weights.at(s) : it->second;
}

double ScoreConfig::principle_weight(Principle p) const {
  auto it = principle_weights.find(p);
  return it == principle_weights.end() ? defaults().principle_weights.at(p) : it->second;
}

void ScoreConfig::validate() const {
  for (const auto& [id, v] : rule_density_limits) {
    if (!(v > 0)) throw NonPositiveLimit("density limit for " + id + " must be positive");
  }
  for (const auto& [s, v] : severity_weights) {
    if (!(v > 0)) throw NonPositiveLimit("weight for severity " + std::string(to_string(s)) + " must be positive");
  }
  for (const auto& [p, v] : principle_weights) {
    if (!(v > 0)) throw NonPositiveLimit("weight for principle " + std::string(to_string(p)) + " must be positive");
  }
}

double violation_density(std::size_t findings, std::size_t scope_size) {
  if (scope_size == 0) return 0.0;
  return static_cast<double>(findings) / static_cast<double>(scope_size);
}

double utility(double density, double dmax) {
  if (!(dmax > 0)) throw NonPositiveLimit("density limit must be positive");
  return std::max(0.0, 1.0 - density / dmax);
}

double principle_score(std::span<const RuleUtility> rules, const ScoreConfig& config) {
  if (rules.empty()) throw NoEnabledRules("no enabled rules for principle");
  double num = 0.0, den = 0.0;
  for (const RuleUtility& r : rules) {
    const double w = config.severity_weight(r.severity);
    num += w * r.utility;
    den += w;
  }
  return std::clamp(num / den, 0.0, 1.0);
}

OverallScore overall_and_grade(const std::map<Principle, double>& scores, const ScoreConfig& config) {
  if (scores.empty()) throw NothingScored("no principle was scored");
  double num = 0.0, den = 0.0;
  for (const auto& [p, s] : scores) {
    const double w = config.principle_weight(p);
    num += w * s;
    den += w;
  }
  OverallScore out;
  out.overall = std::clamp(num / den, 0.0, 1.0);
  out.grade = 1.0 + 5.0 * (1.0 - out.overall);
  return out;
}

QualityReport assess(const CodeModel& model, std::span<const Finding> findings,
                     std::span<const std::string> enabled_rule_ids, const ScoreConfig& config) {
  config.validate();
  QualityReport report;
  std::map<std::string, std::size_t> counts;
  for (const Finding& f : findings) ++counts[f.rule_id];

  std::map<Principle, std::vector<RuleUtility>> by_principle;
  for (const std::string& id : enabled_rule_ids) {
    const RuleDescriptor& rule = rule_descriptor(id);
    RuleScore rs;
    rs.principle = rule.principle;
    rs.severity = rule.severity;
    rs.finding_count = counts[id];
    rs.scope_size = scope_size(rule.scope_kind, model);
    rs.density = violation_density(rs.finding_count, rs.scope_size);
    rs.density_limit = config.density_limit(rule);
    rs.utility = utility(rs.density, rs.density_limit);
    by_principle[rule.principle].push_back(RuleUtility{rs.utility, rs.severity});
    report.per_rule[id] = rs;
  }
  for (const auto& [p, rules] : by_principle) report.per_principle[p] = principle_score(rules, config);
  if (!report.per_principle.empty()) report.overall = overall_and_grade(report.per_principle, config);
  return report;
}

}  // namespace plint
