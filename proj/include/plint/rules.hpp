// SPDX-License-Identifier: Apache-2.0

#ifndef PLINT_RULES_HPP
#define PLINT_RULES_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "plint/code_model.hpp"
#include "plint/diagnostics.hpp"

namespace plint {

enum class Principle { SRP, SOC, DRY, IH, OCP, DIP, LSP, KISS, YAGNI };

inline constexpr Principle kAllPrinciples[] = {
    Principle::SRP, Principle::SOC, Principle::DRY,  Principle::IH,    Principle::OCP,
    Principle::DIP, Principle::LSP, Principle::KISS, Principle::YAGNI,
};

std::string_view to_string(Principle p);
/// Case-insensitive.
std::optional<Principle> principle_from_string(std::string_view text);

enum class Severity { Major, Minor, Info };

std::string_view to_string(Severity s);
std::optional<Severity> severity_from_string(std::string_view text);

enum class ScopeKind { Class, Method, Package, Project };

std::string_view to_string(ScopeKind s);

using ParamValue = std::variant<double, std::vector<std::string>>;

struct ParamSpec {
  enum class Type { Integer, Real, StringList };

  std::string name;
  Type type = Type::Real;
  ParamValue default_value;
  double min = 0.0;  // numeric bounds, inclusive
  double max = 0.0;
  std::string description;
};

struct RuleDescriptor {
  std::string rule_id;
  std::string name;
  Principle principle = Principle::SRP;
  Severity severity = Severity::Minor;
  ScopeKind scope_kind = ScopeKind::Class;
  std::vector<ParamSpec> params;
  std::string description;
};

struct Finding {
  std::string rule_id;
  Principle principle = Principle::SRP;
  Severity severity = Severity::Minor;
  EntityId subject;
  SourceLocation location;
  std::string message;
  std::vector<SourceLocation> secondary;

  bool operator==(const Finding&) const = default;
};

/// Evaluation order of findings: (file, start line, rule id, subject).
bool finding_less(const Finding& a, const Finding& b);

/// Resolved parameters of one rule.
class RuleParams {
 public:
  RuleParams() = default;
  explicit RuleParams(std::map<std::string, ParamValue> values) : values_(std::move(values)) {}

  double number(const std::string& name) const;
  const std::vector<std::string>& strings(const std::string& name) const;

 private:
  std::map<std::string, ParamValue> values_;
};

struct RuleConfig {
  /// Rule ids ("R-KISS-1") or principle names ("kiss"); empty enables nothing.
  std::set<std::string> enabled;
  /// rule id -> parameter name -> value.
  std::map<std::string, std::map<std::string, ParamValue>> overrides;

  /// Every rule with default parameters.
  static RuleConfig all_rules();
};

/// The full catalog, sorted by rule id.
const std::vector<RuleDescriptor>& list_rules();
/// Throws UnknownRuleId.
const RuleDescriptor& rule_descriptor(std::string_view rule_id);

/// Rule ids selected by config.enabled, sorted. Throws UnknownRuleId for an
/// entry that is neither a rule id nor a principle.
std::vector<std::string> enabled_rule_ids(const RuleConfig& config);

/// Defaults merged with overrides. Throws UnknownRuleId or InvalidParam.
RuleParams resolve_params(const RuleDescriptor& rule, const RuleConfig& config);

/// Checks every entry of the config without running anything.
void validate_config(const RuleConfig& config);

struct Evaluation {
  std::vector<Finding> findings;  // sorted with finding_less
  Warnings warnings;
};

/// Runs the enabled rules. Throws UnknownRuleId / InvalidParam for a bad
/// config.
Evaluation evaluate_all(const CodeModel& model, const RuleConfig& config);

/// Runs the rules of one principle with default parameters plus any
/// overrides in `config`.
Evaluation check_principle(Principle p, const CodeModel& model,
                           const RuleConfig& config = RuleConfig::all_rules());

inline Evaluation check_srp(const CodeModel& m, const RuleConfig& c = RuleConfig::all_rules()) {
  return check_principle(Principle::SRP, m, c);
}
inline Evaluation check_soc(const CodeModel& m, const RuleConfig& c = RuleConfig::all_rules()) {
  return check_principle(Principle::SOC, m, c);
}
inline Evaluation check_dry(const CodeModel& m, const RuleConfig& c = RuleConfig::all_rules()) {
  return check_principle(Principle::DRY, m, c);
}
inline Evaluation check_ih(const CodeModel& m, const RuleConfig& c = RuleConfig::all_rules()) {
  return check_principle(Principle::IH, m, c);
}
inline Evaluation check_ocp(const CodeModel& m, const RuleConfig& c = RuleConfig::all_rules()) {
  return check_principle(Principle::OCP, m, c);
}
inline Evaluation check_dip(const CodeModel& m, const RuleConfig& c = RuleConfig::all_rules()) {
  return check_principle(Principle::DIP, m, c);
}
inline Evaluation check_lsp(const CodeModel& m, const RuleConfig& c = RuleConfig::all_rules()) {
  return check_principle(Principle::LSP, m, c);
}
inline Evaluation check_kiss(const CodeModel& m, const RuleConfig& c = RuleConfig::all_rules()) {
  return check_principle(Principle::KISS, m, c);
}
inline Evaluation check_yagni(const CodeModel& m, const RuleConfig& c = RuleConfig::all_rules()) {
  return check_principle(Principle::YAGNI, m, c);
}

/// Entities a rule of this scope inspects: project types, methods and
/// constructors, packages, or 1 for the project.
std::size_t scope_size(ScopeKind scope, const CodeModel& model);

}  // namespace plint

#endif  // PLINT_RULES_HPP
