// SPDX-License-Identifier: Apache-2.0

#include <deque>

#include "rule_impl.hpp"

namespace plint::rules_detail {

namespace {

/// `sub` equals `super` or reaches it through project Extends links.
bool is_same_or_subtype(const EntityId& sub, const EntityId& super, const CodeModel& model) {
  std::deque<EntityId> queue{sub};
  std::set<EntityId> seen{sub};
  while (!queue.empty()) {
    const EntityId cur = queue.front();
    queue.pop_front();
    if (cur == super) return true;
    if (!model.is_project_type(cur)) continue;
    for (const Relation* r : model.outgoing(cur)) {
      if (r->kind == RelationKind::Extends && seen.insert(r->to).second) queue.push_back(r->to);
    }
  }
  return false;
}

}  // namespace

void check_degenerate_override(const Context& ctx, std::vector<Finding>& out) {
  for (const Entity& e : ctx.model.entities()) {
    if (!has_body(e) || !e.method->overrides) continue;
    const BodySummary& body = *e.method->body;
    const bool empty = body.statement_count == 0;
    if (!empty && !body.sole_statement_is_throw) continue;
    out.push_back(make_finding(ctx, e.id, location_of(e),
                               e.name + " overrides " + ctx.model.get(*e.method->overrides).qualified_name +
                                   (empty ? " with an empty body" : " only to throw")));
  }
}

void check_broadened_throws(const Context& ctx, std::vector<Finding>& out) {
  for (const Entity& e : ctx.model.entities()) {
    if (!e.method || !e.method->overrides) continue;
    const Entity& parent = ctx.model.get(*e.method->overrides);
    const auto& allowed = parent.method->throws;
    std::string extra;
    for (const EntityId& t : e.method->throws) {
      bool covered = false;
      for (const EntityId& p : allowed) covered = covered || is_same_or_subtype(t, p, ctx.model);
      if (!covered) extra += (extra.empty() ? "" : ", ") + ctx.model.get(t).qualified_name;
    }
    if (extra.empty()) continue;
    out.push_back(make_finding(ctx, e.id, location_of(e),
                               e.name + " throws " + extra + " not declared by " + parent.qualified_name));
  }
}

}  // namespace plint::rules_detail
