// SPDX-License-Identifier: Apache-2.0

#include "rule_impl.hpp"

namespace plint::rules_detail {

void check_long_complex_method(const Context& ctx, std::vector<Finding>& out) {
  const double max_cc = ctx.params.number("max_cyclomatic");
  const double max_stmts = ctx.params.number("max_statements");
  for (const Entity& e : ctx.model.entities()) {
    if (!has_body(e)) continue;
    const BodySummary& b = *e.method->body;
    if (b.cyclomatic <= max_cc && b.statement_count <= max_stmts) continue;
    out.push_back(make_finding(ctx, e.id, location_of(e),
                               e.name + " has cyclomatic complexity " + std::to_string(b.cyclomatic) +
                                   " and " + std::to_string(b.statement_count) + " statements"));
  }
}

void check_deep_nesting(const Context& ctx, std::vector<Finding>& out) {
  const double max_nesting = ctx.params.number("max_nesting");
  for (const Entity& e : ctx.model.entities()) {
    if (!has_body(e)) continue;
    const int depth = e.method->body->max_nesting;
    if (depth <= max_nesting) continue;
    out.push_back(make_finding(ctx, e.id, location_of(e),
                               e.name + " nests control flow " + std::to_string(depth) + " levels deep"));
  }
}

}  // namespace plint::rules_detail
