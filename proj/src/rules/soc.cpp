// SPDX-License-Identifier: Apache-2.0

#include <map>

#include "plint/metrics.hpp"
#include "rule_impl.hpp"

namespace plint::rules_detail {

namespace {

/// Smallest (file, line) source position of a dependency from package p to
/// package q, for every such pair.
std::map<std::pair<EntityId, EntityId>, SourceLocation> dependency_sites(const CodeModel& model) {
  std::map<std::pair<EntityId, EntityId>, SourceLocation> sites;
  for (const Relation& r : model.relations()) {
    const Entity* src_type = model.owning_type(r.from);
    const Entity* dst_type = model.owning_type(r.to);
    if (src_type == nullptr || dst_type == nullptr) continue;
    if (!model.is_project_type(src_type->id) || !model.is_project_type(dst_type->id)) continue;
    const Entity* p = model.package_of(src_type->id);
    const Entity* q = model.package_of(dst_type->id);
    if (p == nullptr || q == nullptr || p->id == q->id) continue;
    const Entity& from = model.get(r.from);
    SourceLocation loc = location_of(from.location ? from : *src_type);
    const int line = r.line.value_or(loc.start_line);
    loc.start_line = loc.end_line = line;
    auto key = std::make_pair(p->id, q->id);
    auto it = sites.find(key);
    if (it == sites.end() || std::tie(loc.file, loc.start_line) < std::tie(it->second.file, it->second.start_line)) {
      sites[key] = loc;
    }
  }
  return sites;
}

}  // namespace

void check_package_cycle(const Context& ctx, std::vector<Finding>& out) {
  const DirectedGraph graph = package_dependency_graph(ctx.model);
  const auto sites = dependency_sites(ctx.model);
  for (const auto& scc : metrics::strongly_connected_components(graph)) {
    if (scc.size() < 2) continue;
    const std::set<EntityId> members(scc.begin(), scc.end());
    std::string names;
    for (const EntityId& id : scc) {
      if (!names.empty()) names += ", ";
      names += ctx.model.get(id).qualified_name;
    }
    for (const EntityId& p : scc) {
      // Primary: this package's first dependency into the cycle.
      std::optional<SourceLocation> primary;
      std::vector<SourceLocation> secondary;
      for (const auto& [edge, loc] : sites) {
        if (!members.contains(edge.first) || !members.contains(edge.second)) continue;
        if (edge.first == p &&
            (!primary || std::tie(loc.file, loc.start_line) < std::tie(primary->file, primary->start_line))) {
          primary = loc;
        }
        secondary.push_back(loc);
      }
      Finding f = make_finding(ctx, p, primary.value_or(SourceLocation{}),
                               "Package " + ctx.model.get(p).qualified_name +
                                   " is in a dependency cycle: {" + names + "}");
      f.secondary = std::move(secondary);
      out.push_back(std::move(f));
    }
  }
}

void check_scattered_dependencies(const Context& ctx, std::vector<Finding>& out) {
  const double max_packages = ctx.params.number("max_packages");
  for (const Entity& e : ctx.model.entities()) {
    if (!is_project_type_kind(e.kind)) continue;
    const auto pkgs = metrics::efferent_packages(e.id, ctx.model);
    if (static_cast<double>(pkgs.size()) > max_packages) {
      out.push_back(make_finding(ctx, e.id, location_of(e),
                                 e.name + " depends on " + std::to_string(pkgs.size()) +
                                     " other packages"));
    }
  }
}

}  // namespace plint::rules_detail
