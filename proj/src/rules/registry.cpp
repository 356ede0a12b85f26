// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <tuple>

#include "plint/error.hpp"
#include "rule_impl.hpp"

namespace plint {

namespace {

using rules_detail::CheckFn;
using Type = ParamSpec::Type;

struct RegisteredRule {
  RuleDescriptor descriptor;
  CheckFn check;
};

ParamSpec integer(std::string name, double def, double min, double max, std::string text) {
  return ParamSpec{std::move(name), Type::Integer, def, min, max, std::move(text)};
}

ParamSpec real(std::string name, double def, double min, double max, std::string text) {
  return ParamSpec{std::move(name), Type::Real, def, min, max, std::move(text)};
}

std::vector<RegisteredRule> build_registry() {
  using P = Principle;
  using S = Severity;
  using K = ScopeKind;
  namespace d = rules_detail;
  std::vector<RegisteredRule> r = {
      {{"R-SRP-1", "GodClass", P::SRP, S::Major, K::Class,
        {integer("max_atfd", 5, 0, 1e6, "flag when ATFD exceeds this; raise to relax"),
         integer("min_wmc", 47, 0, 1e6, "flag when WMC reaches this; raise to relax"),
         real("max_tcc", 1.0 / 3.0, 0, 1, "flag when TCC is below this; lower to relax")},
        "Class that uses much foreign data, is complex, and has low cohesion."},
       d::check_god_class},
      {{"R-SRP-2", "ResponsibilityClusters", P::SRP, S::Minor, K::Class,
        {integer("min_methods", 4, 1, 1e6, "only classes with this many counted methods; raise to relax"),
         integer("min_clusters", 3, 2, 1e6, "flag when LCOM4 reaches this; raise to relax")},
        "Class whose methods split into several disconnected field/call clusters."},
       d::check_responsibility_clusters},
      {{"R-SOC-1", "PackageCycle", P::SOC, S::Major, K::Package, {},
        "Package that is part of a dependency cycle between packages."},
       d::check_package_cycle},
      {{"R-SOC-2", "ScatteredDependencies", P::SOC, S::Minor, K::Class,
        {integer("max_packages", 7, 0, 1e6, "flag above this many other packages; raise to relax")},
        "Type that depends on many other project packages."},
       d::check_scattered_dependencies},
      {{"R-DRY-1", "DuplicatedCode", P::DRY, S::Major, K::Method,
        {integer("min_tokens", 50, 1, 1e6, "shortest reported clone; raise to relax")},
        "Maximal type-2 clone of method body tokens."},
       d::check_duplicated_code},
      {{"R-IH-1", "PublicMutableField", P::IH, S::Major, K::Class, {},
        "Public field that is not a static final constant."},
       d::check_public_mutable_field},
      {{"R-IH-2", "ExcessiveExposure", P::IH, S::Minor, K::Class,
        {integer("min_members", 10, 1, 1e6, "only classes with this many members; raise to relax"),
         real("max_public_fraction", 0.8, 0, 1, "flag above this public share; raise to relax")},
        "Class that makes nearly all of its members public."},
       d::check_excessive_exposure},
      {{"R-OCP-1", "TypeCheckChain", P::OCP, S::Major, K::Method,
        {integer("min_instanceof", 3, 1, 1e6, "flag at this many instanceof tests; raise to relax")},
        "Method that dispatches on runtime type with instanceof chains."},
       d::check_type_check_chain},
      {{"R-OCP-2", "RepeatedSwitch", P::OCP, S::Minor, K::Method,
        {integer("min_labels", 3, 1, 1e6, "smallest compared label set; raise to relax"),
         integer("min_methods", 2, 2, 1e6, "methods sharing the set; raise to relax")},
        "Same switch label set repeated across methods."},
       d::check_repeated_switch},
      {{"R-DIP-1", "ConcreteCrossPackageField", P::DIP, S::Minor, K::Class, {},
        "Field typed by a concrete class from another package that has a project interface."},
       d::check_concrete_field},
      {{"R-DIP-2", "CrossPackageInstantiation", P::DIP, S::Minor, K::Method,
        {ParamSpec{"exempt_suffixes", Type::StringList,
                   std::vector<std::string>{"Factory", "Builder", "Module"}, 0, 0,
                   "instantiating types with these name suffixes are exempt"}},
        "Instantiation of a concrete class from another package that has a project interface."},
       d::check_cross_package_instantiation},
      {{"R-LSP-1", "DegenerateOverride", P::LSP, S::Major, K::Method, {},
        "Override whose body is empty or only throws."},
       d::check_degenerate_override},
      {{"R-LSP-2", "BroadenedThrows", P::LSP, S::Major, K::Method, {},
        "Override declaring an exception the overridden method does not cover."},
       d::check_broadened_throws},
      {{"R-KISS-1", "LongComplexMethod", P::KISS, S::Major, K::Method,
        {integer("max_cyclomatic", 15, 1, 1e6, "flag above this complexity; raise to relax"),
         integer("max_statements", 75, 1, 1e6, "flag above this statement count; raise to relax")},
        "Method with high cyclomatic complexity or many statements."},
       d::check_long_complex_method},
      {{"R-KISS-2", "DeepNesting", P::KISS, S::Minor, K::Method,
        {integer("max_nesting", 5, 1, 1e6, "flag above this depth; raise to relax")},
        "Method with deeply nested control flow."},
       d::check_deep_nesting},
      {{"R-YAGNI-1", "UnusedPublicOperation", P::YAGNI, S::Info, K::Method, {},
        "Public method of a concrete class that nothing in the project calls."},
       d::check_unused_public_operation},
      {{"R-YAGNI-2", "UnusedPrivateField", P::YAGNI, S::Minor, K::Class, {},
        "Private field that no code reads or writes."},
       d::check_unused_private_field},
  };
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) {
    return a.descriptor.rule_id < b.descriptor.rule_id;
  });
  return r;
}

const std::vector<RegisteredRule>& registry() {
  static const std::vector<RegisteredRule> kRules = build_registry();
  return kRules;
}

const RegisteredRule& registered(std::string_view rule_id) {
  for (const RegisteredRule& r : registry()) {
    if (r.descriptor.rule_id == rule_id) return r;
  }
  throw UnknownRuleId("unknown rule id '" + std::string(rule_id) + "'");
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void check_value(const RuleDescriptor& rule, const ParamSpec& spec, const ParamValue& value) {
  const std::string where = rule.rule_id + "." + spec.name;
  if (spec.type == Type::StringList) {
    if (!std::holds_alternative<std::vector<std::string>>(value)) {
      throw InvalidParam(where + ": expected a list of strings");
    }
    return;
  }
  if (!std::holds_alternative<double>(value)) throw InvalidParam(where + ": expected a number");
  const double v = std::get<double>(value);
  if (!std::isfinite(v) || v < spec.min || v > spec.max) {
    char buf[128];
    std::snprintf(buf, sizeof buf, ": %g outside [%g, %g]", v, spec.min, spec.max);
    throw InvalidParam(where + buf);
  }
  if (spec.type == Type::Integer && v != std::floor(v)) {
    throw InvalidParam(where + ": expected an integer");
  }
}

}  // namespace

namespace rules_detail {

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace rules_detail

std::string_view to_string(Principle p) {
  switch (p) {
    case Principle::SRP: return "SRP";
    case Principle::SOC: return "SOC";
    case Principle::DRY: return "DRY";
    case Principle::IH: return "IH";
    case Principle::OCP: return "OCP";
    case Principle::DIP: return "DIP";
    case Principle::LSP: return "LSP";
    case Principle::KISS: return "KISS";
    case Principle::YAGNI: return "YAGNI";
  }
  return "?";
}

std::optional<Principle> principle_from_string(std::string_view text) {
  const std::string l = lower(text);
  for (Principle p : kAllPrinciples) {
    if (lower(to_string(p)) == l) return p;
  }
  return std::nullopt;
}

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::Major: return "major";
    case Severity::Minor: return "minor";
    case Severity::Info: return "info";
  }
  return "?";
}

std::optional<Severity> severity_from_string(std::string_view text) {
  for (Severity s : {Severity::Major, Severity::Minor, Severity::Info}) {
    if (to_string(s) == lower(text)) return s;
  }
  return std::nullopt;
}

std::string_view to_string(ScopeKind s) {
  switch (s) {
    case ScopeKind::Class: return "class";
    case ScopeKind::Method: return "method";
    case ScopeKind::Package: return "package";
    case ScopeKind::Project: return "project";
  }
  return "?";
}

bool finding_less(const Finding& a, const Finding& b) {
  return std::tie(a.location.file, a.location.start_line, a.rule_id, a.subject, a.location.end_line,
                  a.message) < std::tie(b.location.file, b.location.start_line, b.rule_id,
                                        b.subject, b.location.end_line, b.message);
}

double RuleParams::number(const std::string& name) const {
  return std::get<double>(values_.at(name));
}

const std::vector<std::string>& RuleParams::strings(const std::string& name) const {
  return std::get<std::vector<std::string>>(values_.at(name));
}

RuleConfig RuleConfig::all_rules() {
  RuleConfig c;
  for (const RegisteredRule& r : registry()) c.enabled.insert(r.descriptor.rule_id);
  return c;
}

const std::vector<RuleDescriptor>& list_rules() {
  static const std::vector<RuleDescriptor> kList = [] {
    std::vector<RuleDescriptor> out;
    for (const RegisteredRule& r : registry()) out.push_back(r.descriptor);
    return out;
  }();
  return kList;
}

const RuleDescriptor& rule_descriptor(std::string_view rule_id) {
  return registered(rule_id).descriptor;
}

std::vector<std::string> enabled_rule_ids(const RuleConfig& config) {
  std::set<std::string> ids;
  for (const std::string& entry : config.enabled) {
    if (auto p = principle_from_string(entry)) {
      for (const RegisteredRule& r : registry()) {
        if (r.descriptor.principle == *p) ids.insert(r.descriptor.rule_id);
      }
      continue;
    }
    ids.insert(registered(entry).descriptor.rule_id);
  }
  return {ids.begin(), ids.end()};
}

RuleParams resolve_params(const RuleDescriptor& rule, const RuleConfig& config) {
  std::map<std::string, ParamValue> values;
  for (const ParamSpec& spec : rule.params) values[spec.name] = spec.default_value;
  auto it = config.overrides.find(rule.rule_id);
  if (it != config.overrides.end()) {
    for (const auto& [name, value] : it->second) {
      auto spec = std::find_if(rule.params.begin(), rule.params.end(),
                               [&](const ParamSpec& s) { return s.name == name; });
      if (spec == rule.params.end()) {
        throw InvalidParam(rule.rule_id + ": unknown parameter '" + name + "'");
      }
      check_value(rule, *spec, value);
      values[name] = value;
    }
  }
  return RuleParams(std::move(values));
}

void validate_config(const RuleConfig& config) {
  enabled_rule_ids(config);
  for (const auto& [rule_id, _] : config.overrides) {
    resolve_params(registered(rule_id).descriptor, config);
  }
}

std::size_t scope_size(ScopeKind scope, const CodeModel& model) {
  std::size_t n = 0;
  for (const Entity& e : model.entities()) {
    switch (scope) {
      case ScopeKind::Class: n += is_project_type_kind(e.kind); break;
      case ScopeKind::Method: n += is_callable_kind(e.kind); break;
      case ScopeKind::Package: n += e.kind == EntityKind::Package; break;
      case ScopeKind::Project: return 1;
    }
  }
  return n;
}

Evaluation evaluate_all(const CodeModel& model, const RuleConfig& config) {
  validate_config(config);
  Evaluation out;
  for (const std::string& id : enabled_rule_ids(config)) {
    const RegisteredRule& rule = registered(id);
    const RuleParams params = resolve_params(rule.descriptor, config);
    rules_detail::Context ctx{model, rule.descriptor, params, out.warnings};
    rule.check(ctx, out.findings);
  }
  std::sort(out.findings.begin(), out.findings.end(), finding_less);
  std::sort(out.warnings.begin(), out.warnings.end());
  out.warnings.erase(std::unique(out.warnings.begin(), out.warnings.end()), out.warnings.end());
  return out;
}

Evaluation check_principle(Principle p, const CodeModel& model, const RuleConfig& config) {
  RuleConfig only;
  only.enabled.insert(std::string(to_string(p)));
  only.overrides = config.overrides;
  return evaluate_all(model, only);
}

}  // namespace plint
