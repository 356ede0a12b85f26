// SPDX-License-Identifier: Apache-2.0

#include "plint/facts.hpp"

#include <set>

#include "plint/error.hpp"

namespace plint {

using nlohmann::json;

namespace {

json id_or_null(const std::optional<EntityId>& id) {
  return id ? json(id->str()) : json(nullptr);
}

json location_json(const std::optional<SourceLocation>& loc) {
  if (!loc) return nullptr;
  return json{{"file", loc->file}, {"start_line", loc->start_line}, {"end_line", loc->end_line}};
}

json ids_json(const std::vector<EntityId>& ids) {
  json out = json::array();
  for (const EntityId& id : ids) out.push_back(id.str());
  return out;
}

json use_sites_json(const std::vector<UseSite>& sites) {
  json out = json::array();
  for (const UseSite& s : sites) {
    out.push_back(json{{"to", id_or_null(s.target)}, {"name", s.name}, {"line", s.line}});
  }
  return out;
}

json type_uses_json(const std::vector<TypeUse>& uses) {
  json out = json::array();
  for (const TypeUse& u : uses) out.push_back(json{{"type", u.type.str()}, {"line", u.line}});
  return out;
}

json body_json(const BodySummary& b, bool with_tokens) {
  json out{
      {"statement_count", b.statement_count},
      {"cyclomatic", b.cyclomatic},
      {"max_nesting", b.max_nesting},
      {"sole_statement_is_throw", b.sole_statement_is_throw},
      {"calls", use_sites_json(b.calls)},
      {"accesses", use_sites_json(b.accesses)},
      {"instantiations", type_uses_json(b.instantiations)},
      {"instanceof_tests", type_uses_json(b.instanceof_tests)},
  };
  json sets = json::array();
  for (const SwitchCaseSet& s : b.switch_case_sets) {
    sets.push_back(json{{"labels", s.labels}, {"line", s.line}});
  }
  out["switch_case_sets"] = std::move(sets);
  if (with_tokens && b.normalized_tokens) {
    json toks = json::array();
    for (const NormalizedToken& t : *b.normalized_tokens) {
      toks.push_back(json::array({t.token_class, t.lexeme, t.line}));
    }
    out["normalized_tokens"] = std::move(toks);
  }
  return out;
}

// -- reading ----------------------------------------------------------------

/// Cursor into the document that knows its JSON pointer.
class Node {
 public:
  Node(const json& value, std::string path) : v_(value), path_(std::move(path)) {}

  const json& value() const { return v_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& what) const { throw SchemaError(path_.empty() ? "/" : path_, what); }

  Node at(const std::string& key) const {
    if (!v_.is_object()) fail("expected an object");
    auto it = v_.find(key);
    if (it == v_.end()) throw SchemaError(path_ + "/" + key, "missing required field");
    return Node(*it, path_ + "/" + key);
  }
  bool has(const std::string& key) const { return v_.is_object() && v_.contains(key); }

  Node at(std::size_t i) const { return Node(v_.at(i), path_ + "/" + std::to_string(i)); }

  const json& array() const {
    if (!v_.is_array()) fail("expected an array");
    return v_;
  }
  std::size_t size() const { return array().size(); }

  std::string str() const {
    if (!v_.is_string()) fail("expected a string");
    return v_.get<std::string>();
  }
  int integer() const {
    if (!v_.is_number_integer()) fail("expected an integer");
    return v_.get<int>();
  }
  bool boolean() const {
    if (!v_.is_boolean()) fail("expected a boolean");
    return v_.get<bool>();
  }
  bool is_null() const { return v_.is_null(); }
  EntityId id() const { return EntityId(str()); }
  std::optional<EntityId> optional_id() const {
    if (is_null()) return std::nullopt;
    return id();
  }

 private:
  const json& v_;
  std::string path_;
};

Modifiers read_modifiers(const Node& n) {
  Modifiers mods;
  for (std::size_t i = 0; i < n.size(); ++i) {
    Node item = n.at(i);
    auto m = Modifiers::parse(item.str());
    if (!m) item.fail("unknown modifier '" + item.str() + "'");
    mods.add(*m);
  }
  return mods;
}

std::optional<SourceLocation> read_location(const Node& n) {
  if (n.is_null()) return std::nullopt;
  return SourceLocation{n.at("file").str(), n.at("start_line").integer(), n.at("end_line").integer()};
}

std::vector<EntityId> read_ids(const Node& n) {
  std::vector<EntityId> out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(n.at(i).id());
  return out;
}

std::vector<UseSite> read_use_sites(const Node& n) {
  std::vector<UseSite> out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    Node s = n.at(i);
    UseSite u;
    u.target = s.at("to").optional_id();
    if (s.has("name")) u.name = s.at("name").str();
    u.line = s.at("line").integer();
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<TypeUse> read_type_uses(const Node& n) {
  std::vector<TypeUse> out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    Node s = n.at(i);
    out.push_back(TypeUse{s.at("type").id(), s.at("line").integer()});
  }
  return out;
}

BodySummary read_body(const Node& n) {
  BodySummary b;
  b.statement_count = n.at("statement_count").integer();
  b.cyclomatic = n.at("cyclomatic").integer();
  b.max_nesting = n.at("max_nesting").integer();
  b.sole_statement_is_throw = n.at("sole_statement_is_throw").boolean();
  b.calls = read_use_sites(n.at("calls"));
  b.accesses = read_use_sites(n.at("accesses"));
  b.instantiations = read_type_uses(n.at("instantiations"));
  b.instanceof_tests = read_type_uses(n.at("instanceof_tests"));
  Node sets = n.at("switch_case_sets");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Node s = sets.at(i);
    SwitchCaseSet scs;
    Node labels = s.at("labels");
    for (std::size_t k = 0; k < labels.size(); ++k) scs.labels.push_back(labels.at(k).str());
    scs.line = s.at("line").integer();
    b.switch_case_sets.push_back(std::move(scs));
  }
  if (n.has("normalized_tokens")) {
    Node toks = n.at("normalized_tokens");
    std::vector<NormalizedToken> out;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      Node t = toks.at(i);
      if (t.size() != 3) t.fail("expected [class, lexeme, line]");
      out.push_back(NormalizedToken{t.at(0).str(), t.at(1).str(), t.at(2).integer()});
    }
    b.normalized_tokens = std::move(out);
  }
  return b;
}

std::string last_segment(const std::string& dotted) {
  const auto pos = dotted.rfind('.');
  return pos == std::string::npos ? dotted : dotted.substr(pos + 1);
}

}  // namespace

json export_facts(const CodeModel& model, bool with_tokens, const std::string& project) {
  json packages = json::array();
  json types = json::array();
  json fields = json::array();
  json methods = json::array();
  json externals = json::array();
  json relations = json::array();

  for (const Entity& e : model.entities()) {
    switch (e.kind) {
      case EntityKind::Package:
        packages.push_back(e.qualified_name);
        break;
      case EntityKind::Class:
      case EntityKind::Interface:
      case EntityKind::Enum: {
        std::vector<EntityId> ext, impl;
        for (const Relation* r : model.outgoing(e.id)) {
          if (r->kind == RelationKind::Extends) ext.push_back(r->to);
          if (r->kind == RelationKind::Implements) impl.push_back(r->to);
        }
        const Entity* pkg = model.package_of(e.id);
        types.push_back(json{
            {"id", e.id.str()},
            {"name", e.name},
            {"qualified_name", e.qualified_name},
            {"package", pkg != nullptr ? pkg->qualified_name : ""},
            {"owner", id_or_null(e.owner)},
            {"kind", std::string(to_string(e.kind))},
            {"modifiers", e.modifiers.names()},
            {"extends", ids_json(ext)},
            {"implements", ids_json(impl)},
            {"location", location_json(e.location)},
        });
        break;
      }
      case EntityKind::Field:
      case EntityKind::Parameter:
        fields.push_back(json{
            {"id", e.id.str()},
            {"kind", std::string(to_string(e.kind))},
            {"owner", id_or_null(e.owner)},
            {"name", e.name},
            {"qualified_name", e.qualified_name},
            {"type", id_or_null(e.declared_type)},
            {"modifiers", e.modifiers.names()},
            {"location", location_json(e.location)},
        });
        break;
      case EntityKind::Method:
      case EntityKind::Constructor: {
        const MethodInfo info = e.method.value_or(MethodInfo{});
        json params = json::array();
        for (const MethodParam& p : info.params) {
          params.push_back(json{{"name", p.name}, {"type", p.type.str()}});
        }
        methods.push_back(json{
            {"id", e.id.str()},
            {"kind", std::string(to_string(e.kind))},
            {"owner", id_or_null(e.owner)},
            {"name", e.name},
            {"qualified_name", e.qualified_name},
            {"params", std::move(params)},
            {"returns", id_or_null(info.return_type)},
            {"throws", ids_json(info.throws)},
            {"modifiers", e.modifiers.names()},
            {"overrides", id_or_null(info.overrides)},
            {"location", location_json(e.location)},
            {"body", info.body ? body_json(*info.body, with_tokens) : json(nullptr)},
        });
        break;
      }
      case EntityKind::ExternalType:
        externals.push_back(json{{"id", e.id.str()}, {"name", e.name}});
        break;
    }
  }
  for (const Relation& r : model.relations()) {
    relations.push_back(json{{"kind", std::string(to_string(r.kind))},
                             {"from", r.from.str()},
                             {"to", r.to.str()},
                             {"line", r.line ? json(*r.line) : json(nullptr)}});
  }
  return json{{"schema", kFactsSchema},       {"project", project},
              {"packages", std::move(packages)}, {"types", std::move(types)},
              {"fields", std::move(fields)},   {"methods", std::move(methods)},
              {"external_types", std::move(externals)}, {"relations", std::move(relations)}};
}

FactsImport import_facts(const json& document) {
  const Node root(document, "");
  if (!document.is_object()) root.fail("expected an object");
  const Node schema = root.at("schema");
  if (schema.str() != kFactsSchema) {
    schema.fail("unsupported schema '" + schema.str() + "', expected '" + kFactsSchema + "'");
  }

  FactsImport result;
  result.project = root.at("project").str();
  std::vector<Entity> entities;
  std::vector<Relation> relations;

  const Node packages = root.at("packages");
  for (std::size_t i = 0; i < packages.size(); ++i) {
    const std::string name = packages.at(i).str();
    Entity e;
    e.id = make_entity_id(EntityKind::Package, name);
    e.kind = EntityKind::Package;
    e.name = last_segment(name);
    e.qualified_name = name;
    entities.push_back(std::move(e));
  }

  const Node types = root.at("types");
  for (std::size_t i = 0; i < types.size(); ++i) {
    const Node t = types.at(i);
    Entity e;
    e.id = t.at("id").id();
    const Node kind = t.at("kind");
    auto k = entity_kind_from_string(kind.str());
    if (!k || !is_project_type_kind(*k)) kind.fail("expected class, interface or enum");
    e.kind = *k;
    e.name = t.at("name").str();
    e.qualified_name = t.at("qualified_name").str();
    e.modifiers = read_modifiers(t.at("modifiers"));
    if (t.has("owner") && !t.at("owner").is_null()) {
      e.owner = t.at("owner").id();
    } else {
      e.owner = make_entity_id(EntityKind::Package, t.at("package").str());
    }
    e.location = read_location(t.at("location"));
    if (!root.has("relations")) {
      for (const EntityId& s : read_ids(t.at("extends"))) {
        relations.push_back(Relation{RelationKind::Extends, e.id, s,
                                     e.location ? std::optional(e.location->start_line) : std::nullopt});
      }
      for (const EntityId& s : read_ids(t.at("implements"))) {
        relations.push_back(Relation{RelationKind::Implements, e.id, s,
                                     e.location ? std::optional(e.location->start_line) : std::nullopt});
      }
    }
    entities.push_back(std::move(e));
  }

  const Node fields = root.at("fields");
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const Node f = fields.at(i);
    Entity e;
    e.id = f.at("id").id();
    e.kind = EntityKind::Field;
    if (f.has("kind")) {
      const Node kind = f.at("kind");
      auto k = entity_kind_from_string(kind.str());
      if (!k || (*k != EntityKind::Field && *k != EntityKind::Parameter)) {
        kind.fail("expected field or parameter");
      }
      e.kind = *k;
    }
    e.owner = f.at("owner").id();
    e.name = f.at("name").str();
    e.qualified_name = f.has("qualified_name") ? f.at("qualified_name").str() : e.name;
    e.declared_type = f.at("type").optional_id();
    e.modifiers = read_modifiers(f.at("modifiers"));
    e.location = read_location(f.at("location"));
    entities.push_back(std::move(e));
  }

  bool tokens_missing = false;
  const Node methods = root.at("methods");
  for (std::size_t i = 0; i < methods.size(); ++i) {
    const Node m = methods.at(i);
    Entity e;
    e.id = m.at("id").id();
    e.kind = EntityKind::Method;
    if (m.has("kind")) {
      const Node kind = m.at("kind");
      auto k = entity_kind_from_string(kind.str());
      if (!k || !is_callable_kind(*k)) kind.fail("expected method or constructor");
      e.kind = *k;
    }
    e.owner = m.at("owner").id();
    e.name = m.at("name").str();
    e.qualified_name = m.has("qualified_name") ? m.at("qualified_name").str() : e.name;
    e.modifiers = read_modifiers(m.at("modifiers"));
    e.location = read_location(m.at("location"));
    MethodInfo info;
    const Node params = m.at("params");
    for (std::size_t k = 0; k < params.size(); ++k) {
      const Node p = params.at(k);
      info.params.push_back(MethodParam{p.at("name").str(), p.at("type").id()});
    }
    info.return_type = m.at("returns").optional_id();
    info.throws = read_ids(m.at("throws"));
    info.overrides = m.at("overrides").optional_id();
    const Node body = m.at("body");
    if (!body.is_null()) {
      info.body = read_body(body);
      if (!info.body->normalized_tokens) tokens_missing = true;
      if (!root.has("relations")) {
        for (const UseSite& c : info.body->calls) {
          if (c.target) relations.push_back(Relation{RelationKind::Calls, e.id, *c.target, c.line});
        }
        for (const UseSite& a : info.body->accesses) {
          if (a.target) relations.push_back(Relation{RelationKind::Accesses, e.id, *a.target, a.line});
        }
        for (const TypeUse& n : info.body->instantiations) {
          relations.push_back(Relation{RelationKind::Instantiates, e.id, n.type, n.line});
        }
      }
    }
    e.method = std::move(info);
    entities.push_back(std::move(e));
  }

  const Node externals = root.at("external_types");
  for (std::size_t i = 0; i < externals.size(); ++i) {
    const Node x = externals.at(i);
    Entity e;
    e.id = x.at("id").id();
    e.kind = EntityKind::ExternalType;
    e.name = x.at("name").str();
    e.qualified_name = e.name;
    entities.push_back(std::move(e));
  }

  if (root.has("relations")) {
    const Node rels = root.at("relations");
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const Node r = rels.at(i);
      const Node kind = r.at("kind");
      auto k = relation_kind_from_string(kind.str());
      if (!k) kind.fail("unknown relation kind '" + kind.str() + "'");
      Relation rel{*k, r.at("from").id(), r.at("to").id(), std::nullopt};
      if (r.has("line") && !r.at("line").is_null()) rel.line = r.at("line").integer();
      relations.push_back(std::move(rel));
    }
  }

  result.model = build_model(std::move(entities), std::move(relations));
  if (tokens_missing) result.warnings.push_back(Warning{"", 0, "clone detection unavailable"});
  return result;
}

}  // namespace plint
