// SPDX-License-Identifier: Apache-2.0

#include "plint/metrics.hpp"
#include "rule_impl.hpp"

namespace plint::rules_detail {

void check_god_class(const Context& ctx, std::vector<Finding>& out) {
  const double max_atfd = ctx.params.number("max_atfd");
  const double min_wmc = ctx.params.number("min_wmc");
  const double max_tcc = ctx.params.number("max_tcc");
  for (const Entity& e : ctx.model.entities()) {
    if (e.kind != EntityKind::Class) continue;
    const auto atfd = metrics::atfd(e.id, ctx.model);
    const int wmc = metrics::wmc(e.id, ctx.model);
    const double tcc = metrics::tcc(e.id, ctx.model);
    if (static_cast<double>(atfd) > max_atfd && wmc >= min_wmc && tcc < max_tcc) {
      out.push_back(make_finding(ctx, e.id, location_of(e),
                                 "God class " + e.name + ": ATFD " + std::to_string(atfd) +
                                     ", WMC " + std::to_string(wmc) + ", TCC " + fixed2(tcc)));
    }
  }
}

void check_responsibility_clusters(const Context& ctx, std::vector<Finding>& out) {
  const double min_methods = ctx.params.number("min_methods");
  const double min_clusters = ctx.params.number("min_clusters");
  for (const Entity& e : ctx.model.entities()) {
    if (e.kind != EntityKind::Class) continue;
    std::size_t counted = 0;
    for (const Entity* m : ctx.model.members(e.id)) {
      counted += m->kind == EntityKind::Method && !m->modifiers.has(Modifier::Static) && has_body(*m);
    }
    if (static_cast<double>(counted) < min_methods) continue;
    const auto clusters = metrics::lcom4(e.id, ctx.model);
    if (static_cast<double>(clusters) >= min_clusters) {
      out.push_back(make_finding(ctx, e.id, location_of(e),
                                 e.name + " splits into " + std::to_string(clusters) +
                                     " unrelated method clusters (LCOM4)"));
    }
  }
}

}  // namespace plint::rules_detail
