// SPDX-License-Identifier: Apache-2.0

#include "rule_impl.hpp"

namespace plint::rules_detail {

namespace {

bool has_incoming(const CodeModel& model, const EntityId& id, RelationKind kind) {
  for (const Relation* r : model.incoming(id)) {
    if (r->kind == kind) return true;
  }
  return false;
}

}  // namespace

void check_unused_public_operation(const Context& ctx, std::vector<Finding>& out) {
  std::set<EntityId> overridden;
  for (const Entity& e : ctx.model.entities()) {
    if (e.method && e.method->overrides) overridden.insert(*e.method->overrides);
  }
  for (const Entity& e : ctx.model.entities()) {
    if (e.kind != EntityKind::Method || !e.modifiers.has(Modifier::Public) || !e.owner) continue;
    const Entity* owner = ctx.model.find(*e.owner);
    if (owner == nullptr || owner->kind != EntityKind::Class || owner->modifiers.has(Modifier::Abstract)) {
      continue;
    }
    if (e.name == "main" || e.method->overrides || overridden.contains(e.id)) continue;
    if (has_incoming(ctx.model, e.id, RelationKind::Calls)) continue;
    out.push_back(make_finding(ctx, e.id, location_of(e),
                               "Public method " + e.name + " is never called in the project"));
  }
}

void check_unused_private_field(const Context& ctx, std::vector<Finding>& out) {
  for (const Entity& e : ctx.model.entities()) {
    if (e.kind != EntityKind::Field || !e.modifiers.has(Modifier::Private)) continue;
    if (e.name == "serialVersionUID") continue;
    if (has_incoming(ctx.model, e.id, RelationKind::Accesses)) continue;
    out.push_back(make_finding(ctx, e.id, location_of(e),
                               "Private field " + e.name + " is never used"));
  }
}

}  // namespace plint::rules_detail
