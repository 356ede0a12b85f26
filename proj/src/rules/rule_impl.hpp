// SPDX-License-Identifier: Apache-2.0

#ifndef PLINT_RULES_RULE_IMPL_HPP
#define PLINT_RULES_RULE_IMPL_HPP

#include <string>
#include <vector>

#include "plint/rules.hpp"

namespace plint::rules_detail {

struct Context {
  const CodeModel& model;
  const RuleDescriptor& rule;
  const RuleParams& params;
  Warnings& warnings;
};

using CheckFn = void (*)(const Context&, std::vector<Finding>&);

inline SourceLocation location_of(const Entity& e) {
  return e.location.value_or(SourceLocation{});
}

inline Finding make_finding(const Context& ctx, const EntityId& subject, SourceLocation loc,
                            std::string message) {
  Finding f;
  f.rule_id = ctx.rule.rule_id;
  f.principle = ctx.rule.principle;
  f.severity = ctx.rule.severity;
  f.subject = subject;
  f.location = std::move(loc);
  f.message = std::move(message);
  return f;
}

inline bool has_body(const Entity& e) { return e.method && e.method->body.has_value(); }

/// printf-style "%.2f".
std::string fixed2(double v);

// srp.cpp
void check_god_class(const Context&, std::vector<Finding>&);
void check_responsibility_clusters(const Context&, std::vector<Finding>&);
// soc.cpp
void check_package_cycle(const Context&, std::vector<Finding>&);
void check_scattered_dependencies(const Context&, std::vector<Finding>&);
// dry.cpp
void check_duplicated_code(const Context&, std::vector<Finding>&);
// ih.cpp
void check_public_mutable_field(const Context&, std::vector<Finding>&);
void check_excessive_exposure(const Context&, std::vector<Finding>&);
// ocp.cpp
void check_type_check_chain(const Context&, std::vector<Finding>&);
void check_repeated_switch(const Context&, std::vector<Finding>&);
// dip.cpp
void check_concrete_field(const Context&, std::vector<Finding>&);
void check_cross_package_instantiation(const Context&, std::vector<Finding>&);
// lsp.cpp
void check_degenerate_override(const Context&, std::vector<Finding>&);
void check_broadened_throws(const Context&, std::vector<Finding>&);
// kiss.cpp
void check_long_complex_method(const Context&, std::vector<Finding>&);
void check_deep_nesting(const Context&, std::vector<Finding>&);
// yagni.cpp
void check_unused_public_operation(const Context&, std::vector<Finding>&);
void check_unused_private_field(const Context&, std::vector<Finding>&);

}  // namespace plint::rules_detail

#endif  // PLINT_RULES_RULE_IMPL_HPP
