// SPDX-License-Identifier: Apache-2.0

#ifndef PLINT_CODE_MODEL_HPP
#define PLINT_CODE_MODEL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "plint/entity_id.hpp"
#include "plint/graph.hpp"

namespace plint {

enum class EntityKind {
  Package,
  Class,
  Interface,
  Enum,
  Method,
  Constructor,
  Field,
  Parameter,
  ExternalType,
};

std::string_view to_string(EntityKind kind);
std::optional<EntityKind> entity_kind_from_string(std::string_view text);

/// Class, Interface or Enum declared in the analyzed sources.
constexpr bool is_project_type_kind(EntityKind k) {
  return k == EntityKind::Class || k == EntityKind::Interface || k == EntityKind::Enum;
}
constexpr bool is_callable_kind(EntityKind k) {
  return k == EntityKind::Method || k == EntityKind::Constructor;
}

/// Content-derived identity: "<kind>:<qualified name><signature>".
/// Stable across runs, so ordering by id is ordering by content.
EntityId make_entity_id(EntityKind kind, std::string_view qualified_name,
                        std::string_view signature = {});

enum class Modifier : std::uint8_t {
  Public = 1 << 0,
  Protected = 1 << 1,
  Private = 1 << 2,
  Static = 1 << 3,
  Final = 1 << 4,
  Abstract = 1 << 5,
};

class Modifiers {
 public:
  constexpr Modifiers() = default;
  constexpr Modifiers(std::initializer_list<Modifier> mods) {
    for (Modifier m : mods) add(m);
  }

  constexpr bool has(Modifier m) const { return (bits_ & static_cast<std::uint8_t>(m)) != 0; }
  constexpr void add(Modifier m) { bits_ |= static_cast<std::uint8_t>(m); }

  /// Names in canonical order: public protected private static final abstract.
  std::vector<std::string> names() const;
  static std::optional<Modifier> parse(std::string_view name);

  constexpr bool operator==(const Modifiers&) const = default;

 private:
  std::uint8_t bits_ = 0;
};

struct SourceLocation {
  std::string file;
  int start_line = 0;
  int end_line = 0;

  auto operator<=>(const SourceLocation&) const = default;
};

/// A call or field access inside a body. `target` is empty when the name
/// could not be resolved to a project entity.
struct UseSite {
  std::optional<EntityId> target;
  std::string name;
  int line = 0;

  bool operator==(const UseSite&) const = default;
};

struct TypeUse {
  EntityId type;
  int line = 0;

  bool operator==(const TypeUse&) const = default;
};

struct SwitchCaseSet {
  std::vector<std::string> labels;  // sorted
  int line = 0;

  bool operator==(const SwitchCaseSet&) const = default;
};

/// Clone-detection token. token_class is one of ID, LIT, KW, PUNCT, OP; ID
/// and LIT compare by class only, the rest by lexeme.
struct NormalizedToken {
  std::string token_class;
  std::string lexeme;
  int line = 0;

  bool operator==(const NormalizedToken&) const = default;
};

struct BodySummary {
  int statement_count = 0;
  int cyclomatic = 1;
  int max_nesting = 0;
  std::vector<UseSite> calls;
  std::vector<UseSite> accesses;
  std::vector<TypeUse> instantiations;
  std::vector<TypeUse> instanceof_tests;
  std::vector<SwitchCaseSet> switch_case_sets;
  bool sole_statement_is_throw = false;
  std::optional<std::vector<NormalizedToken>> normalized_tokens;

  bool operator==(const BodySummary&) const = default;
};

struct MethodParam {
  std::string name;
  EntityId type;

  bool operator==(const MethodParam&) const = default;
};

struct MethodInfo {
  std::vector<MethodParam> params;
  std::optional<EntityId> return_type;  // empty for void and constructors
  std::vector<EntityId> throws;
  std::optional<BodySummary> body;      // empty for abstract/interface methods
  std::optional<EntityId> overrides;

  bool operator==(const MethodInfo&) const = default;
};

struct Entity {
  EntityId id;
  EntityKind kind = EntityKind::Class;
  std::string name;
  std::string qualified_name;
  Modifiers modifiers;
  std::optional<EntityId> owner;
  std::optional<SourceLocation> location;
  std::optional<MethodInfo> method;     // Method and Constructor only
  std::optional<EntityId> declared_type;  // Field and Parameter only

  bool operator==(const Entity&) const = default;
};

enum class RelationKind { Extends, Implements, Calls, Accesses, Instantiates, UsesType };

std::string_view to_string(RelationKind kind);
std::optional<RelationKind> relation_kind_from_string(std::string_view text);

struct Relation {
  RelationKind kind = RelationKind::UsesType;
  EntityId from;
  EntityId to;
  std::optional<int> line;

  bool operator==(const Relation&) const = default;
};

/// Immutable, validated entity/relation store. Entities iterate sorted by
/// id, relations by (from, kind, to, line).
class CodeModel {
 public:
  CodeModel() = default;

  std::span<const Entity> entities() const { return entities_; }
  std::span<const Relation> relations() const { return relations_; }
  std::size_t size() const { return entities_.size(); }

  const Entity* find(const EntityId& id) const;
  /// Throws UnknownEntity.
  const Entity& get(const EntityId& id) const;
  bool contains(const EntityId& id) const { return find(id) != nullptr; }

  /// Direct members (owner == id), sorted by id.
  std::vector<const Entity*> members(const EntityId& id) const;
  std::vector<const Relation*> outgoing(const EntityId& id) const;
  std::vector<const Relation*> incoming(const EntityId& id) const;

  /// Project type (class/interface/enum) with this dotted name.
  const Entity* type_by_qualified_name(std::string_view qualified_name) const;
  /// Nearest enclosing Package, or nullptr for ExternalType / packages.
  const Entity* package_of(const EntityId& id) const;
  /// Nearest enclosing project type, or the entity itself if it is one.
  const Entity* owning_type(const EntityId& id) const;
  /// Extends/Implements targets in declaration-independent sorted order.
  std::vector<EntityId> direct_supertypes(const EntityId& type) const;

  bool is_project_type(const EntityId& id) const;

  bool operator==(const CodeModel& other) const {
    return entities_ == other.entities_ && relations_ == other.relations_;
  }

  friend CodeModel build_model(std::vector<Entity> entities, std::vector<Relation> relations);

 private:
  std::vector<Entity> entities_;
  std::vector<Relation> relations_;
  std::unordered_map<EntityId, std::size_t, EntityIdHash> index_;
  std::unordered_map<EntityId, std::vector<std::size_t>, EntityIdHash> members_;
  std::unordered_map<EntityId, std::vector<std::size_t>, EntityIdHash> outgoing_;
  std::unordered_map<EntityId, std::vector<std::size_t>, EntityIdHash> incoming_;
  std::unordered_map<std::string, std::size_t> types_by_name_;
};

/// Validates and freezes the inputs. Throws DuplicateId, DanglingReference,
/// CyclicContainment, or ModelError for other structural violations.
CodeModel build_model(std::vector<Entity> entities, std::vector<Relation> relations);

struct ResolutionContext {
  std::string package;
  std::vector<std::string> imports;  // single-type ("q.B") or on-demand ("q.*")
  std::string enclosing_type;        // qualified name, empty at top level
};

/// Id of the ExternalType entity that stands in for an unresolved name.
EntityId external_type_id(std::string_view name);

/// Resolves a simple or dotted type name. Order: exact qualified match,
/// single-type import, member type of the enclosing type, same package,
/// on-demand import, then ExternalType fallback. Never fails; the returned
/// ExternalType id may not exist in `model` yet.
EntityId resolve_type_name(std::string_view name, const ResolutionContext& context,
                           const CodeModel& model);

/// Types the given project type depends on, excluding itself. Throws
/// UnknownEntity when `type` is not a project type of the model.
std::set<EntityId> dependencies_of(const EntityId& type, const CodeModel& model);

/// Edge p->q iff a type in p depends on a project type in q (p != q).
DirectedGraph package_dependency_graph(const CodeModel& model);

}  // namespace plint

#endif  // PLINT_CODE_MODEL_HPP
