// SPDX-License-Identifier: Apache-2.0

#include "rule_impl.hpp"

namespace plint::rules_detail {

void check_public_mutable_field(const Context& ctx, std::vector<Finding>& out) {
  for (const Entity& e : ctx.model.entities()) {
    if (e.kind != EntityKind::Field || !e.modifiers.has(Modifier::Public)) continue;
    if (e.modifiers.has(Modifier::Static) && e.modifiers.has(Modifier::Final)) continue;
    out.push_back(make_finding(ctx, e.id, location_of(e),
                               "Public field " + e.qualified_name + " is not a constant"));
  }
}

void check_excessive_exposure(const Context& ctx, std::vector<Finding>& out) {
  const double min_members = ctx.params.number("min_members");
  const double max_fraction = ctx.params.number("max_public_fraction");
  for (const Entity& e : ctx.model.entities()) {
    if (e.kind != EntityKind::Class) continue;
    std::size_t members = 0, exposed = 0;
    for (const Entity* m : ctx.model.members(e.id)) {
      if (m->kind != EntityKind::Field && m->kind != EntityKind::Method) continue;
      ++members;
      exposed += m->modifiers.has(Modifier::Public);
    }
    if (members == 0 || static_cast<double>(members) < min_members) continue;
    const double fraction = static_cast<double>(exposed) / static_cast<double>(members);
    if (fraction > max_fraction) {
      out.push_back(make_finding(ctx, e.id, location_of(e),
                                 e.name + " exposes " + std::to_string(exposed) + " of " +
                                     std::to_string(members) + " members publicly"));
    }
  }
}

}  // namespace plint::rules_detail
