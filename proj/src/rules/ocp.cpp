// SPDX-License-Identifier: Apache-2.0

#include <map>

#include "rule_impl.hpp"

namespace plint::rules_detail {

void check_type_check_chain(const Context& ctx, std::vector<Finding>& out) {
  const double min_tests = ctx.params.number("min_instanceof");
  for (const Entity& e : ctx.model.entities()) {
    if (!has_body(e)) continue;
    const auto& tests = e.method->body->instanceof_tests;
    if (static_cast<double>(tests.size()) < min_tests) continue;
    SourceLocation loc = location_of(e);
    loc.start_line = tests.front().line;
    out.push_back(make_finding(ctx, e.id, loc,
                               e.name + " branches on " + std::to_string(tests.size()) +
                                   " instanceof tests"));
  }
}

void check_repeated_switch(const Context& ctx, std::vector<Finding>& out) {
  const double min_labels = ctx.params.number("min_labels");
  const double min_methods = ctx.params.number("min_methods");
  // label set -> method -> first switch line
  std::map<std::vector<std::string>, std::map<EntityId, int>> groups;
  for (const Entity& e : ctx.model.entities()) {
    if (!has_body(e)) continue;
    for (const SwitchCaseSet& s : e.method->body->switch_case_sets) {
      if (static_cast<double>(s.labels.size()) < min_labels) continue;
      groups[s.labels].try_emplace(e.id, s.line);
    }
  }
  for (const auto& [labels, methods] : groups) {
    if (static_cast<double>(methods.size()) < min_methods) continue;
    std::string joined;
    for (const std::string& l : labels) joined += (joined.empty() ? "" : ", ") + l;
    std::vector<SourceLocation> locs;
    for (const auto& [id, line] : methods) {
      SourceLocation loc = location_of(ctx.model.get(id));
      loc.start_line = line;
      locs.push_back(loc);
    }
    Finding f = make_finding(ctx, methods.begin()->first, locs.front(),
                             "Switch over {" + joined + "} repeated in " +
                                 std::to_string(methods.size()) + " methods");
    f.secondary.assign(locs.begin() + 1, locs.end());
    out.push_back(std::move(f));
  }
}

}  // namespace plint::rules_detail
