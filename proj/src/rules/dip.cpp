// SPDX-License-Identifier: Apache-2.0

#include <deque>

#include "rule_impl.hpp"

namespace plint::rules_detail {

namespace {

/// Concrete project class with at least one project interface somewhere
/// above it.
bool is_abstractable_concrete(const EntityId& id, const CodeModel& model) {
  const Entity* e = model.find(id);
  if (e == nullptr || e->kind != EntityKind::Class || e->modifiers.has(Modifier::Abstract)) {
    return false;
  }
  std::deque<EntityId> queue{id};
  std::set<EntityId> seen{id};
  while (!queue.empty()) {
    const EntityId cur = queue.front();
    queue.pop_front();
    for (const EntityId& s : model.direct_supertypes(cur)) {
      const Entity* st = model.find(s);
      if (st == nullptr || !model.is_project_type(s)) continue;
      if (st->kind == EntityKind::Interface) return true;
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  return false;
}

bool same_package(const EntityId& a, const EntityId& b, const CodeModel& model) {
  const Entity* pa = model.package_of(a);
  const Entity* pb = model.package_of(b);
  return pa != nullptr && pb != nullptr && pa->id == pb->id;
}

}  // namespace

void check_concrete_field(const Context& ctx, std::vector<Finding>& out) {
  for (const Entity& e : ctx.model.entities()) {
    if (e.kind != EntityKind::Field || !e.declared_type || !e.owner) continue;
    const EntityId& type = *e.declared_type;
    if (!is_abstractable_concrete(type, ctx.model) || same_package(*e.owner, type, ctx.model)) continue;
    out.push_back(make_finding(ctx, e.id, location_of(e),
                               "Field " + e.qualified_name + " depends on concrete " +
                                   ctx.model.get(type).qualified_name + " instead of its interface"));
  }
}

void check_cross_package_instantiation(const Context& ctx, std::vector<Finding>& out) {
  const auto& suffixes = ctx.params.strings("exempt_suffixes");
  for (const Entity& e : ctx.model.entities()) {
    if (!has_body(e)) continue;
    const Entity* owner = ctx.model.owning_type(e.id);
    if (owner == nullptr) continue;
    bool exempt = false;
    for (const std::string& s : suffixes) exempt = exempt || (!s.empty() && owner->name.ends_with(s));
    if (exempt) continue;
    for (const TypeUse& use : e.method->body->instantiations) {
      if (!is_abstractable_concrete(use.type, ctx.model) || same_package(owner->id, use.type, ctx.model)) {
        continue;
      }
      SourceLocation loc = location_of(e);
      loc.start_line = use.line;
      out.push_back(make_finding(ctx, e.id, loc,
                                 e.name + " instantiates concrete " +
                                     ctx.model.get(use.type).qualified_name + " from another package"));
    }
  }
}

}  // namespace plint::rules_detail
