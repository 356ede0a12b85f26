// SPDX-License-Identifier: Apache-2.0

#include "plint/code_model.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <unordered_set>

#include "plint/error.hpp"

namespace plint {

namespace {

constexpr std::array<std::pair<EntityKind, std::string_view>, 9> kEntityKindNames{{
    {EntityKind::Package, "package"},
    {EntityKind::Class, "class"},
    {EntityKind::Interface, "interface"},
    {EntityKind::Enum, "enum"},
    {EntityKind::Method, "method"},
    {EntityKind::Constructor, "constructor"},
    {EntityKind::Field, "field"},
    {EntityKind::Parameter, "parameter"},
    {EntityKind::ExternalType, "external"},
}};

constexpr std::array<std::pair<RelationKind, std::string_view>, 6> kRelationKindNames{{
    {RelationKind::Extends, "extends"},
    {RelationKind::Implements, "implements"},
    {RelationKind::Calls, "calls"},
    {RelationKind::Accesses, "accesses"},
    {RelationKind::Instantiates, "instantiates"},
    {RelationKind::UsesType, "uses_type"},
}};

constexpr std::array<std::pair<Modifier, std::string_view>, 6> kModifierNames{{
    {Modifier::Public, "public"},
    {Modifier::Protected, "protected"},
    {Modifier::Private, "private"},
    {Modifier::Static, "static"},
    {Modifier::Final, "final"},
    {Modifier::Abstract, "abstract"},
}};

bool relation_less(const Relation& a, const Relation& b) {
  return std::tie(a.from, a.kind, a.to, a.line) < std::tie(b.from, b.kind, b.to, b.line);
}

void require_entity(const std::unordered_map<EntityId, std::size_t, EntityIdHash>& index,
                    const EntityId& id, const EntityId& referrer, std::string_view what) {
  if (!index.contains(id)) {
    throw DanglingReference(referrer.str() + ": " + std::string(what) + " '" + id.str() +
                            "' is not in the model");
  }
}

std::string last_segment(std::string_view dotted) {
  auto pos = dotted.rfind('.');
  return std::string(pos == std::string_view::npos ? dotted : dotted.substr(pos + 1));
}

}  // namespace

std::string_view to_string(EntityKind kind) {
  for (const auto& [k, name] : kEntityKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<EntityKind> entity_kind_from_string(std::string_view text) {
  for (const auto& [k, name] : kEntityKindNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

std::string_view to_string(RelationKind kind) {
  for (const auto& [k, name] : kRelationKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<RelationKind> relation_kind_from_string(std::string_view text) {
  for (const auto& [k, name] : kRelationKindNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

EntityId make_entity_id(EntityKind kind, std::string_view qualified_name,
                        std::string_view signature) {
  std::string id(to_string(kind));
  id += ':';
  id += qualified_name;
  id += signature;
  return EntityId(std::move(id));
}

EntityId external_type_id(std::string_view name) {
  return make_entity_id(EntityKind::ExternalType, name);
}

std::vector<std::string> Modifiers::names() const {
  std::vector<std::string> out;
  for (const auto& [m, name] : kModifierNames) {
    if (has(m)) out.emplace_back(name);
  }
  return out;
}

std::optional<Modifier> Modifiers::parse(std::string_view name) {
  for (const auto& [m, n] : kModifierNames) {
    if (n == name) return m;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// CodeModel queries

const Entity* CodeModel::find(const EntityId& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &entities_[it->second];
}

const Entity& CodeModel::get(const EntityId& id) const {
  if (const Entity* e = find(id)) return *e;
  throw UnknownEntity("unknown entity '" + id.str() + "'");
}

std::vector<const Entity*> CodeModel::members(const EntityId& id) const {
  std::vector<const Entity*> out;
  if (auto it = members_.find(id); it != members_.end()) {
    out.reserve(it->second.size());
    for (std::size_t i : it->second) out.push_back(&entities_[i]);
  }
  return out;
}

std::vector<const Relation*> CodeModel::outgoing(const EntityId& id) const {
  std::vector<const Relation*> out;
  if (auto it = outgoing_.find(id); it != outgoing_.end()) {
    for (std::size_t i : it->second) out.push_back(&relations_[i]);
  }
  return out;
}

std::vector<const Relation*> CodeModel::incoming(const EntityId& id) const {
  std::vector<const Relation*> out;
  if (auto it = incoming_.find(id); it != incoming_.end()) {
    for (std::size_t i : it->second) out.push_back(&relations_[i]);
  }
  return out;
}

const Entity* CodeModel::type_by_qualified_name(std::string_view qualified_name) const {
  auto it = types_by_name_.find(std::string(qualified_name));
  return it == types_by_name_.end() ? nullptr : &entities_[it->second];
}

const Entity* CodeModel::package_of(const EntityId& id) const {
  const Entity* e = find(id);
  if (e == nullptr || e->kind == EntityKind::Package) return nullptr;
  while (e != nullptr && e->kind != EntityKind::Package) {
    e = e->owner ? find(*e->owner) : nullptr;
  }
  return e;
}

const Entity* CodeModel::owning_type(const EntityId& id) const {
  const Entity* e = find(id);
  while (e != nullptr && !is_project_type_kind(e->kind)) {
    e = e->owner ? find(*e->owner) : nullptr;
  }
  return e;
}

std::vector<EntityId> CodeModel::direct_supertypes(const EntityId& type) const {
  std::vector<EntityId> out;
  for (const Relation* r : outgoing(type)) {
    if (r->kind == RelationKind::Extends || r->kind == RelationKind::Implements) {
      if (std::find(out.begin(), out.end(), r->to) == out.end()) out.push_back(r->to);
    }
  }
  return out;
}

bool CodeModel::is_project_type(const EntityId& id) const {
  const Entity* e = find(id);
  return e != nullptr && is_project_type_kind(e->kind);
}

// ---------------------------------------------------------------------------
// Construction

CodeModel build_model(std::vector<Entity> entities, std::vector<Relation> relations) {
  CodeModel model;
  std::sort(entities.begin(), entities.end(),
            [](const Entity& a, const Entity& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < entities.size(); ++i) {
    if (entities[i].id == entities[i - 1].id) {
      throw DuplicateId("duplicate entity id '" + entities[i].id.str() + "'");
    }
  }
  std::sort(relations.begin(), relations.end(), relation_less);

  model.entities_ = std::move(entities);
  model.relations_ = std::move(relations);
  auto& index = model.index_;
  index.reserve(model.entities_.size());
  for (std::size_t i = 0; i < model.entities_.size(); ++i) {
    index.emplace(model.entities_[i].id, i);
  }

  for (std::size_t i = 0; i < model.entities_.size(); ++i) {
    const Entity& e = model.entities_[i];
    const bool rootless = e.kind == EntityKind::Package || e.kind == EntityKind::ExternalType;
    if (rootless && e.owner) {
      throw ModelError(e.id.str() + ": " + std::string(to_string(e.kind)) +
                       " entities cannot have an owner");
    }
    if (!rootless && !e.owner) {
      throw DanglingReference(e.id.str() + ": missing owner");
    }
    if (e.kind == EntityKind::ExternalType && e.location) {
      throw ModelError(e.id.str() + ": external types carry no location");
    }
    if (e.owner) {
      require_entity(index, *e.owner, e.id, "owner");
      if (model.entities_[index.at(*e.owner)].kind == EntityKind::ExternalType) {
        throw ModelError(e.id.str() + ": external types carry no members");
      }
      model.members_[*e.owner].push_back(i);
    }
    if (is_project_type_kind(e.kind)) {
      model.types_by_name_.emplace(e.qualified_name, i);
    }
    if (e.declared_type) require_entity(index, *e.declared_type, e.id, "declared type");
    if (e.method) {
      const MethodInfo& m = *e.method;
      for (const auto& p : m.params) require_entity(index, p.type, e.id, "parameter type");
      if (m.return_type) require_entity(index, *m.return_type, e.id, "return type");
      for (const auto& t : m.throws) require_entity(index, t, e.id, "thrown type");
      if (m.overrides) require_entity(index, *m.overrides, e.id, "overridden method");
      if (m.body) {
        for (const auto& c : m.body->calls) {
          if (c.target) require_entity(index, *c.target, e.id, "call target");
        }
        for (const auto& a : m.body->accesses) {
          if (a.target) require_entity(index, *a.target, e.id, "access target");
        }
        for (const auto& t : m.body->instantiations) {
          require_entity(index, t.type, e.id, "instantiated type");
        }
        for (const auto& t : m.body->instanceof_tests) {
          require_entity(index, t.type, e.id, "instanceof type");
        }
      }
    }
  }

  // Each entity has at most one owner, so a walk longer than the entity
  // count must have revisited something.
  for (const Entity& e : model.entities_) {
    const Entity* cur = &e;
    std::size_t steps = 0;
    while (cur->owner) {
      cur = &model.entities_[index.at(*cur->owner)];
      if (++steps > model.entities_.size() || cur == &e) {
        throw CyclicContainment("containment cycle through '" + e.id.str() + "'");
      }
    }
  }

  for (std::size_t i = 0; i < model.relations_.size(); ++i) {
    const Relation& r = model.relations_[i];
    require_entity(index, r.from, r.from, "relation source");
    require_entity(index, r.to, r.from, "relation target");
    const EntityKind from_kind = model.entities_[index.at(r.from)].kind;
    switch (r.kind) {
      case RelationKind::Extends:
      case RelationKind::Implements:
        if (!is_project_type_kind(from_kind)) {
          throw ModelError(r.from.str() + ": " + std::string(to_string(r.kind)) +
                           " source must be a type");
        }
        break;
      case RelationKind::Calls:
      case RelationKind::Accesses:
      case RelationKind::Instantiates:
        if (!is_callable_kind(from_kind)) {
          throw ModelError(r.from.str() + ": " + std::string(to_string(r.kind)) +
                           " source must be a method or constructor");
        }
        break;
      case RelationKind::UsesType:
        break;
    }
    model.outgoing_[r.from].push_back(i);
    model.incoming_[r.to].push_back(i);
  }
  return model;
}

// ---------------------------------------------------------------------------
// Name resolution and dependency queries

EntityId resolve_type_name(std::string_view name, const ResolutionContext& context,
                           const CodeModel& model) {
  if (const Entity* t = model.type_by_qualified_name(name)) return t->id;

  const auto dot = name.find('.');
  const std::string_view head = name.substr(0, dot);
  const std::string_view tail = dot == std::string_view::npos ? "" : name.substr(dot);

  std::optional<std::string> imported_external;
  for (const std::string& imp : context.imports) {
    if (imp.ends_with(".*") || last_segment(imp) != head) continue;
    std::string candidate = imp + std::string(tail);
    if (const Entity* t = model.type_by_qualified_name(candidate)) return t->id;
    if (!imported_external) imported_external = std::move(candidate);
  }

  if (!context.enclosing_type.empty()) {
    if (const Entity* t =
            model.type_by_qualified_name(context.enclosing_type + "." + std::string(name))) {
      return t->id;
    }
  }

  const std::string same_package =
      context.package.empty() ? std::string(name) : context.package + "." + std::string(name);
  if (const Entity* t = model.type_by_qualified_name(same_package)) return t->id;

  for (const std::string& imp : context.imports) {
    if (!imp.ends_with(".*")) continue;
    const std::string candidate = imp.substr(0, imp.size() - 1) + std::string(name);
    if (const Entity* t = model.type_by_qualified_name(candidate)) return t->id;
  }

  return external_type_id(imported_external ? *imported_external : std::string(name));
}

std::set<EntityId> dependencies_of(const EntityId& type, const CodeModel& model) {
  const Entity& self = model.get(type);
  if (!is_project_type_kind(self.kind)) {
    throw UnknownEntity("'" + type.str() + "' is not a project type");
  }

  std::set<EntityId> deps;
  auto add_target = [&](const EntityId& target) {
    const Entity* t = model.find(target);
    if (t == nullptr) return;
    if (t->kind == EntityKind::ExternalType || is_project_type_kind(t->kind)) {
      deps.insert(t->id);
    } else if (const Entity* owner = model.owning_type(t->id)) {
      deps.insert(owner->id);
    }
  };

  for (const Relation* r : model.outgoing(type)) add_target(r->to);
  for (const Entity* member : model.members(type)) {
    if (is_project_type_kind(member->kind)) continue;  // nested types answer for themselves
    for (const Relation* r : model.outgoing(member->id)) add_target(r->to);
  }
  deps.erase(type);
  return deps;
}

DirectedGraph package_dependency_graph(const CodeModel& model) {
  DirectedGraph graph;
  for (const Entity& e : model.entities()) {
    if (e.kind == EntityKind::Package) graph.add_node(e.id);
  }
  for (const Entity& e : model.entities()) {
    if (!is_project_type_kind(e.kind)) continue;
    const Entity* from_pkg = model.package_of(e.id);
    if (from_pkg == nullptr) continue;
    for (const EntityId& dep : dependencies_of(e.id, model)) {
      if (!model.is_project_type(dep)) continue;
      const Entity* to_pkg = model.package_of(dep);
      if (to_pkg != nullptr && to_pkg->id != from_pkg->id) graph.add_edge(from_pkg->id, to_pkg->id);
    }
  }
  return graph;
}

}  // namespace plint
