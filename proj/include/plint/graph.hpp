// SPDX-License-Identifier: Apache-2.0

#ifndef PLINT_GRAPH_HPP
#define PLINT_GRAPH_HPP

#include <cstddef>
#include <map>
#include <set>

#include "plint/entity_id.hpp"

namespace plint {

/// Small directed graph keyed by entity id. Node and successor iteration is
/// sorted.
class DirectedGraph {
 public:
  void add_node(const EntityId& node) { adjacency_.try_emplace(node); }
  void add_edge(const EntityId& from, const EntityId& to) {
    add_node(to);
    adjacency_[from].insert(to);
  }

  bool has_node(const EntityId& node) const { return adjacency_.contains(node); }
  bool has_edge(const EntityId& from, const EntityId& to) const {
    auto it = adjacency_.find(from);
    return it != adjacency_.end() && it->second.contains(to);
  }

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& [_, succ] : adjacency_) n += succ.size();
    return n;
  }

  const std::map<EntityId, std::set<EntityId>>& adjacency() const { return adjacency_; }
  const std::set<EntityId>& successors(const EntityId& node) const {
    static const std::set<EntityId> kNone;
    auto it = adjacency_.find(node);
    return it == adjacency_.end() ? kNone : it->second;
  }

  bool operator==(const DirectedGraph&) const = default;

 private:
  std::map<EntityId, std::set<EntityId>> adjacency_;
};

}  // namespace plint

#endif  // PLINT_GRAPH_HPP
