// SPDX-License-Identifier: Apache-2.0

#include "plint/lowering.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "plint/error.hpp"
#include "plint/metrics.hpp"
#include "plint/parser.hpp"

namespace plint {

namespace {

namespace fs = std::filesystem;
using ast::Statement;
using ast::StmtKind;

struct MethodSig {
  EntityId id;
  std::string name;
  std::size_t arity = 0;
  std::optional<EntityId> returns;
  bool is_static = false;
  bool is_private = false;
  std::vector<EntityId> param_types;
};

struct FieldSig {
  EntityId id;
  EntityId type;
};

struct TypeTable {
  EntityId id;
  std::string qname;
  const ast::TypeDecl* decl = nullptr;
  const ast::CompilationUnit* unit = nullptr;
  std::string outer;                    // qualified name of the enclosing type
  std::vector<EntityId> supertypes;     // project and external, declaration order
  std::optional<EntityId> superclass;
  std::map<std::string, FieldSig> fields;
  std::vector<MethodSig> methods;
  std::vector<MethodSig> constructors;
};

std::string join_name(const std::string& prefix, const std::string& name) {
  return prefix.empty() ? name : prefix + "." + name;
}

std::string last_segment(const std::string& dotted) {
  const auto pos = dotted.rfind('.');
  return pos == std::string::npos ? dotted : dotted.substr(pos + 1);
}

/// Display form used in signatures: the id without its kind prefix.
std::string type_display(const EntityId& id) {
  const auto pos = id.str().find(':');
  return id.str().substr(pos + 1);
}

Modifiers parse_modifiers(const std::vector<std::string>& words) {
  Modifiers mods;
  for (const std::string& w : words) {
    if (auto m = Modifiers::parse(w)) mods.add(*m);
  }
  return mods;
}

std::string token_class_name(const Token& t) {
  if (t.lexeme == "true" || t.lexeme == "false" || t.lexeme == "null") {
    if (t.cls == TokenClass::Keyword) return "LIT";
  }
  switch (t.cls) {
    case TokenClass::Identifier:
      return "ID";
    case TokenClass::NumberLiteral:
    case TokenClass::StringLiteral:
    case TokenClass::CharLiteral:
      return "LIT";
    case TokenClass::Keyword:
      return "KW";
    case TokenClass::Punctuation:
      return "PUNCT";
    case TokenClass::Operator:
      return "OP";
  }
  return "OP";
}

class Lowering {
 public:
  explicit Lowering(std::vector<ast::CompilationUnit> units) : units_(std::move(units)) {
    std::stable_sort(units_.begin(), units_.end(),
                     [](const auto& a, const auto& b) { return a.file < b.file; });
  }

  LoweringResult run() {
    for (const auto& u : units_) {
      warnings_.insert(warnings_.end(), u.warnings.begin(), u.warnings.end());
    }
    declare_types();
    declare_members();
    for (auto& [_, table] : types_) lower_type(table);
    resolve_overrides();

    for (const std::string& name : externals_) {
      Entity e;
      e.id = external_type_id(name);
      e.kind = EntityKind::ExternalType;
      e.name = name;
      e.qualified_name = name;
      add_entity(std::move(e));
    }
    for (const auto& [key, line] : uses_) {
      relations_.push_back(Relation{RelationKind::UsesType, key.first, key.second, line});
    }
    std::vector<Entity> entities;
    entities.reserve(entities_.size());
    for (auto& [_, e] : entities_) entities.push_back(std::move(e));
    std::sort(warnings_.begin(), warnings_.end());
    return LoweringResult{build_model(std::move(entities), std::move(relations_)),
                          std::move(warnings_)};
  }

 private:
  // -- pass 1 -----------------------------------------------------------------

  bool add_entity(Entity e) {
    const EntityId id = e.id;
    return entities_.emplace(id, std::move(e)).second;
  }

  void warn(const std::string& file, int line, std::string message) {
    warnings_.push_back(Warning{file, line, std::move(message)});
  }

  void declare_types() {
    std::vector<Entity> prelim;
    std::set<EntityId> packages;
    for (const auto& unit : units_) {
      const EntityId pkg = make_entity_id(EntityKind::Package, unit.package);
      if (packages.insert(pkg).second) {
        Entity e;
        e.id = pkg;
        e.kind = EntityKind::Package;
        e.name = last_segment(unit.package);
        e.qualified_name = unit.package;
        add_entity(e);
        prelim.push_back(std::move(e));
      }
      for (const auto& decl : unit.types) {
        const std::string qname = join_name(unit.package, decl.name);
        if (!declare_type(unit, decl, qname, pkg, "", prelim)) continue;
        for (const auto& inner : decl.nested) {
          declare_type(unit, inner, qname + "." + inner.name, types_.at(qname).id, qname, prelim);
        }
      }
    }
    prelim_ = build_model(std::move(prelim), {});
  }

  bool declare_type(const ast::CompilationUnit& unit, const ast::TypeDecl& decl,
                    const std::string& qname, const EntityId& owner, const std::string& outer,
                    std::vector<Entity>& prelim) {
    EntityKind kind = EntityKind::Class;
    if (decl.kind == ast::TypeKind::Interface) kind = EntityKind::Interface;
    if (decl.kind == ast::TypeKind::Enum) kind = EntityKind::Enum;
    Entity e;
    e.id = make_entity_id(kind, qname);
    e.kind = kind;
    e.name = decl.name;
    e.qualified_name = qname;
    e.modifiers = parse_modifiers(decl.modifiers);
    e.owner = owner;
    e.location = SourceLocation{unit.file, decl.line, decl.end_line};
    if (types_.contains(qname)) {
      warn(unit.file, decl.line, "duplicate declaration of type " + qname + " skipped");
      return false;
    }
    TypeTable table;
    table.id = e.id;
    table.qname = qname;
    table.decl = &decl;
    table.unit = &unit;
    table.outer = outer;
    types_.emplace(qname, std::move(table));
    add_entity(e);
    prelim.push_back(std::move(e));
    return true;
  }

  ResolutionContext context_for(const TypeTable& t, bool outer) const {
    return ResolutionContext{t.unit->package, t.unit->imports, outer ? t.outer : t.qname};
  }

  EntityId resolve(const ast::TypeRef& ref, const TypeTable& t) {
    if (ref.primitive()) {
      externals_.insert(ref.name);
      return external_type_id(ref.name);
    }
    EntityId id = resolve_type_name(ref.name, context_for(t, false), prelim_);
    if (!prelim_.contains(id) && !t.outer.empty()) {
      EntityId again = resolve_type_name(ref.name, context_for(t, true), prelim_);
      if (prelim_.contains(again)) id = again;
    }
    if (!prelim_.contains(id)) externals_.insert(type_display(id));
    return id;
  }

  /// Resolved type, with a UsesType edge from the owning type unless the
  /// reference is primitive.
  EntityId use_type(const ast::TypeRef& ref, TypeTable& t, int line) {
    const EntityId id = resolve(ref, t);
    if (!ref.primitive() && id != t.id) {
      auto [it, inserted] = uses_.emplace(std::make_pair(t.id, id), line);
      if (!inserted) it->second = std::min(it->second, line);
    }
    return id;
  }

  void declare_members() {
    for (auto& [_, t] : types_) {
      const ast::TypeDecl& decl = *t.decl;
      const bool is_interface = decl.kind == ast::TypeKind::Interface;
      const std::string& file = t.unit->file;

      for (const auto& sup : decl.extends) {
        const EntityId id = use_type(sup, t, decl.line);
        t.supertypes.push_back(id);
        if (!is_interface && !t.superclass) t.superclass = id;
        relations_.push_back(Relation{RelationKind::Extends, t.id, id, decl.line});
      }
      for (const auto& sup : decl.implements) {
        const EntityId id = use_type(sup, t, decl.line);
        t.supertypes.push_back(id);
        relations_.push_back(Relation{RelationKind::Implements, t.id, id, decl.line});
      }

      for (const auto& c : decl.enum_constants) {
        Entity f;
        f.id = make_entity_id(EntityKind::Field, t.qname + "." + c.name);
        f.kind = EntityKind::Field;
        f.name = c.name;
        f.qualified_name = t.qname + "." + c.name;
        f.modifiers = Modifiers{Modifier::Public, Modifier::Static, Modifier::Final};
        f.owner = t.id;
        f.location = SourceLocation{file, c.line, c.line};
        f.declared_type = t.id;
        if (!add_entity(std::move(f))) {
          warn(file, c.line, "duplicate declaration of " + t.qname + "." + c.name + " skipped");
          continue;
        }
        t.fields.emplace(c.name, FieldSig{make_entity_id(EntityKind::Field, t.qname + "." + c.name), t.id});
      }

      for (const auto& fd : decl.fields) {
        Entity f;
        f.id = make_entity_id(EntityKind::Field, t.qname + "." + fd.name);
        f.kind = EntityKind::Field;
        f.name = fd.name;
        f.qualified_name = t.qname + "." + fd.name;
        f.modifiers = parse_modifiers(fd.modifiers);
        if (is_interface) {
          f.modifiers.add(Modifier::Public);
          f.modifiers.add(Modifier::Static);
          f.modifiers.add(Modifier::Final);
        }
        f.owner = t.id;
        f.location = SourceLocation{file, fd.line, fd.end_line};
        f.declared_type = use_type(fd.type, t, fd.line);
        const EntityId fid = f.id;
        const EntityId ftype = *f.declared_type;
        if (!add_entity(std::move(f))) {
          warn(file, fd.line, "duplicate declaration of " + t.qname + "." + fd.name + " skipped");
          continue;
        }
        t.fields.emplace(fd.name, FieldSig{fid, ftype});
      }

      for (const auto& md : decl.methods) declare_method(t, md, is_interface);
    }
  }

  void declare_method(TypeTable& t, const ast::MethodDecl& md, bool is_interface) {
    const std::string& file = t.unit->file;
    MethodInfo info;
    std::string sig = "(";
    for (std::size_t i = 0; i < md.params.size(); ++i) {
      const EntityId type = use_type(md.params[i].type, t, md.line);
      info.params.push_back(MethodParam{md.params[i].name, type});
      if (i > 0) sig += ",";
      sig += type_display(type);
    }
    sig += ")";
    if (md.return_type) info.return_type = use_type(*md.return_type, t, md.line);
    for (const auto& th : md.throws) info.throws.push_back(use_type(th, t, md.line));

    Entity m;
    m.kind = md.is_constructor ? EntityKind::Constructor : EntityKind::Method;
    m.name = md.name;
    m.qualified_name = md.is_constructor ? t.qname : t.qname + "." + md.name;
    m.id = make_entity_id(m.kind, m.qualified_name, sig);
    m.modifiers = parse_modifiers(md.modifiers);
    if (is_interface) {
      if (!m.modifiers.has(Modifier::Private)) m.modifiers.add(Modifier::Public);
      if (!md.body && !m.modifiers.has(Modifier::Static)) m.modifiers.add(Modifier::Abstract);
    }
    m.owner = t.id;
    m.location = SourceLocation{file, md.line, md.end_line};
    m.method = std::move(info);

    MethodSig s;
    s.id = m.id;
    s.name = md.name;
    s.arity = md.params.size();
    s.returns = m.method->return_type;
    s.is_static = m.modifiers.has(Modifier::Static);
    s.is_private = m.modifiers.has(Modifier::Private);
    for (const auto& p : m.method->params) s.param_types.push_back(p.type);
    if (!add_entity(std::move(m))) {
      warn(file, md.line, "duplicate declaration of " + s.id.str() + " skipped");
      return;
    }
    decl_ids_.emplace(&md, s.id);
    (md.is_constructor ? t.constructors : t.methods).push_back(std::move(s));
  }

  // -- pass 2 -----------------------------------------------------------------

  TypeTable* table_of(const EntityId& id) {
    const Entity* e = prelim_.find(id);
    if (e == nullptr || !is_project_type_kind(e->kind)) return nullptr;
    auto it = types_.find(e->qualified_name);
    return it == types_.end() ? nullptr : &it->second;
  }

  /// Breadth-first walk over `start` and its project supertypes.
  template <typename Fn>
  auto search_hierarchy(const EntityId& start, Fn&& fn) -> decltype(fn(std::declval<TypeTable&>())) {
    std::deque<EntityId> queue{start};
    std::set<EntityId> seen{start};
    while (!queue.empty()) {
      TypeTable* t = table_of(queue.front());
      queue.pop_front();
      if (t == nullptr) continue;
      if (auto hit = fn(*t)) return hit;
      for (const EntityId& s : t->supertypes) {
        if (seen.insert(s).second) queue.push_back(s);
      }
    }
    return std::nullopt;
  }

  std::optional<FieldSig> find_field(const EntityId& type, const std::string& name) {
    return search_hierarchy(type, [&](TypeTable& t) -> std::optional<FieldSig> {
      auto it = t.fields.find(name);
      if (it == t.fields.end()) return std::nullopt;
      return it->second;
    });
  }

  std::optional<MethodSig> find_method(const EntityId& type, const std::string& name,
                                       std::size_t arity) {
    return search_hierarchy(type, [&](TypeTable& t) -> std::optional<MethodSig> {
      for (const MethodSig& m : t.methods) {
        if (m.name == name && m.arity == arity) return m;
      }
      return std::nullopt;
    });
  }

  std::optional<MethodSig> find_constructor(const EntityId& type, std::size_t arity) {
    TypeTable* t = table_of(type);
    if (t == nullptr) return std::nullopt;
    for (const MethodSig& m : t->constructors) {
      if (m.arity == arity) return m;
    }
    return std::nullopt;
  }

  void lower_type(TypeTable& t) {
    for (const auto& md : t.decl->methods) {
      auto id = decl_ids_.find(&md);
      if (!md.body || id == decl_ids_.end()) continue;
      Entity& method = entities_.at(id->second);
      BodyLowering body(*this, t, method, md);
      method.method->body = body.run();
    }
  }

  class BodyLowering {
   public:
    BodyLowering(Lowering& owner, TypeTable& type, const Entity& method, const ast::MethodDecl& decl)
        : L_(owner), type_(type), method_(method), decl_(decl) {}

    BodySummary run() {
      for (const auto& p : method_.method->params) locals_[p.name] = p.type;
      const Statement& body = *decl_.body;
      walk(body);
      summary_.statement_count = metrics::statement_count(body);
      summary_.cyclomatic = metrics::cyclomatic_complexity(body);
      summary_.max_nesting = metrics::max_nesting_depth(body);
      summary_.sole_statement_is_throw =
          body.children.size() == 1 && body.children.front().kind == StmtKind::Throw;
      std::vector<NormalizedToken> tokens;
      tokens.reserve(decl_.body_tokens.size());
      for (const Token& tk : decl_.body_tokens) {
        tokens.push_back(NormalizedToken{token_class_name(tk), tk.lexeme, tk.line});
      }
      summary_.normalized_tokens = std::move(tokens);
      return std::move(summary_);
    }

   private:
    using Toks = std::vector<Token>;

    void declare(const ast::LocalVar& v) {
      if (v.type.name == "var") {
        locals_[v.name] = std::nullopt;
        return;
      }
      locals_[v.name] = L_.use_type(v.type, type_, v.line);
    }

    void walk(const Statement& s) {
      for (const auto& v : s.locals) declare(v);
      for (const auto& c : s.caught) L_.use_type(c, type_, c.line);
      scan(s.expr);
      if (s.kind == StmtKind::Switch) {
        std::set<std::string> labels;
        for (const Statement& c : s.children) {
          labels.insert(c.case_labels.begin(), c.case_labels.end());
        }
        if (!labels.empty()) {
          summary_.switch_case_sets.push_back(
              SwitchCaseSet{std::vector<std::string>(labels.begin(), labels.end()), s.line});
        }
      }
      for (const Statement& c : s.children) walk(c);
    }

    void record_call(const std::optional<MethodSig>& target, const std::string& name, int line) {
      summary_.calls.push_back(UseSite{target ? std::optional(target->id) : std::nullopt, name, line});
      if (target) {
        L_.relations_.push_back(Relation{RelationKind::Calls, method_.id, target->id, line});
      }
    }

    void record_access(const std::optional<FieldSig>& target, const std::string& name, int line) {
      summary_.accesses.push_back(UseSite{target ? std::optional(target->id) : std::nullopt, name, line});
      if (target) {
        L_.relations_.push_back(Relation{RelationKind::Accesses, method_.id, target->id, line});
      }
    }

    static bool is_ident(const Toks& t, std::size_t i) {
      return i < t.size() && t[i].cls == TokenClass::Identifier;
    }
    static bool is_p(const Toks& t, std::size_t i, std::string_view p) {
      return i < t.size() && t[i].is_punct(p);
    }

    /// At '(': scans the arguments and returns (arity, index after ')').
    std::pair<std::size_t, std::size_t> args(const Toks& t, std::size_t open) {
      int depth = 0;
      std::size_t close = t.size();
      std::size_t commas = 0;
      for (std::size_t i = open; i < t.size(); ++i) {
        const Token& k = t[i];
        if (k.is_punct("(") || k.is_punct("[") || k.is_punct("{")) ++depth;
        if (k.is_punct(")") || k.is_punct("]") || k.is_punct("}")) {
          if (--depth == 0) {
            close = i;
            break;
          }
        }
        if (depth == 1 && k.is_punct(",")) ++commas;
      }
      Toks inner(t.begin() + static_cast<std::ptrdiff_t>(open + 1),
                 t.begin() + static_cast<std::ptrdiff_t>(close));
      scan(inner);
      return {inner.empty() ? 0 : commas + 1, std::min(close + 1, t.size())};
    }

    /// Dotted type name (generic arguments skipped) starting at i. Returns
    /// the name and the index after it.
    static std::pair<std::string, std::size_t> type_name_at(const Toks& t, std::size_t i) {
      std::string name;
      while (i < t.size()) {
        if (t[i].cls == TokenClass::Identifier || (t[i].cls == TokenClass::Keyword && is_primitive_type(t[i].lexeme))) {
          name += t[i].lexeme;
          ++i;
        } else {
          break;
        }
        if (i < t.size() && t[i].is_op("<")) {
          int depth = 0;
          for (; i < t.size(); ++i) {
            if (t[i].is_op("<")) ++depth;
            if (t[i].is_op(">") && --depth == 0) {
              ++i;
              break;
            }
          }
        }
        if (is_p(t, i, ".") && is_ident(t, i + 1)) {
          name += ".";
          ++i;
          continue;
        }
        break;
      }
      return {name, i};
    }

    void scan(const Toks& t) {
      std::size_t i = 0;
      while (i < t.size()) {
        const Token& k = t[i];
        const bool after_dot = i > 0 && (t[i - 1].is_punct(".") || t[i - 1].is_punct("::"));
        if (k.is_keyword("new")) {
          i = scan_new(t, i);
        } else if (k.is_keyword("instanceof")) {
          i = scan_instanceof(t, i);
        } else if (after_dot && k.cls == TokenClass::Identifier) {
          if (is_p(t, i + 1, "(") && t[i - 1].is_punct(".")) {
            record_call(std::nullopt, k.lexeme, k.line);
            i = args(t, i + 1).second;
          } else {
            ++i;
          }
        } else if (k.cls == TokenClass::Identifier || k.is_keyword("this") || k.is_keyword("super")) {
          i = scan_chain(t, i);
        } else {
          ++i;
        }
      }
    }

    std::size_t scan_instanceof(const Toks& t, std::size_t i) {
      auto [name, next] = type_name_at(t, i + 1);
      if (name.empty()) return i + 1;
      const int line = t[i].line;
      const EntityId type = L_.use_type(ast::TypeRef{name, line}, type_, line);
      summary_.instanceof_tests.push_back(TypeUse{type, line});
      if (is_ident(t, next) && !(next + 1 < t.size() && t[next + 1].is_punct("."))) {
        locals_[t[next].lexeme] = type;
        ++next;
      }
      return next;
    }

    std::size_t scan_new(const Toks& t, std::size_t i) {
      auto [name, next] = type_name_at(t, i + 1);
      if (name.empty()) return i + 1;
      const int line = t[i].line;
      if (!is_p(t, next, "(")) return next;  // array creation
      const EntityId type = L_.resolve(ast::TypeRef{name, line}, type_);
      summary_.instantiations.push_back(TypeUse{type, line});
      L_.relations_.push_back(Relation{RelationKind::Instantiates, method_.id, type, line});
      const std::size_t after = args(t, next).second;
      return continue_chain(t, after, type);
    }

    std::optional<EntityId> implicit_field(const std::string& name, int line, std::size_t& i) {
      for (const EntityId& start : self_types()) {
        if (auto f = L_.find_field(start, name)) {
          record_access(f, name, line);
          ++i;
          return f->type;
        }
      }
      return std::nullopt;
    }

    std::vector<EntityId> self_types() const {
      std::vector<EntityId> out{type_.id};
      if (!type_.outer.empty()) out.push_back(L_.types_.at(type_.outer).id);
      return out;
    }

    std::size_t scan_chain(const Toks& t, std::size_t i) {
      const Token& first = t[i];
      std::optional<EntityId> type;
      if (first.is_keyword("this") || first.is_keyword("super")) {
        const bool is_super = first.is_keyword("super");
        const std::optional<EntityId> self =
            is_super ? type_.superclass : std::optional<EntityId>(type_.id);
        if (is_p(t, i + 1, "(")) {
          auto [arity, after] = args(t, i + 1);
          std::optional<MethodSig> ctor = self ? L_.find_constructor(*self, arity) : std::nullopt;
          record_call(ctor, first.lexeme, first.line);
          return after;
        }
        if (is_super && is_p(t, i + 1, ".") && is_ident(t, i + 2) && is_p(t, i + 3, "(")) {
          return continue_chain(t, i + 1, self);
        }
        if (!is_super && is_p(t, i + 1, ".") && is_ident(t, i + 2) && !is_p(t, i + 3, "(")) {
          // this.f: recorded even when unresolved
          const Token& f = t[i + 2];
          auto field = L_.find_field(type_.id, f.lexeme);
          record_access(field, f.lexeme, f.line);
          return continue_chain(t, i + 3, field ? std::optional(field->type) : std::nullopt);
        }
        return continue_chain(t, i + 1, self);
      }

      const std::string& name = first.lexeme;
      if (is_p(t, i + 1, "(")) {
        std::optional<MethodSig> target;
        auto [arity, after] = args(t, i + 1);
        for (const EntityId& start : self_types()) {
          target = L_.find_method(start, name, arity);
          if (target) break;
        }
        record_call(target, name, first.line);
        return continue_chain(t, after, target ? target->returns : std::nullopt);
      }
      if (auto it = locals_.find(name); it != locals_.end()) {
        return continue_chain(t, i + 1, it->second);
      }
      if (auto ft = implicit_field(name, first.line, i)) return continue_chain(t, i, ft);

      // Longest dotted prefix naming a project type, used as a qualifier.
      std::string dotted = name;
      std::size_t j = i + 1;
      std::optional<std::pair<EntityId, std::size_t>> best;
      while (true) {
        if (is_p(t, j, ".")) {
          const EntityId id = L_.resolve_quiet(dotted, type_);
          if (L_.prelim_.contains(id)) best = {id, j};
        }
        if (is_p(t, j, ".") && is_ident(t, j + 1) && !is_p(t, j + 2, "(")) {
          dotted += "." + t[j + 1].lexeme;
          j += 2;
          continue;
        }
        break;
      }
      if (best) return continue_chain(t, best->second, best->first);
      return continue_chain(t, i + 1, type);
    }

    std::size_t continue_chain(const Toks& t, std::size_t i, std::optional<EntityId> type) {
      while (is_p(t, i, ".") && is_ident(t, i + 1)) {
        const Token& m = t[i + 1];
        if (is_p(t, i + 2, "(")) {
          auto [arity, after] = args(t, i + 2);
          std::optional<MethodSig> target = type ? L_.find_method(*type, m.lexeme, arity) : std::nullopt;
          record_call(target, m.lexeme, m.line);
          type = target ? target->returns : std::nullopt;
          i = after;
        } else {
          std::optional<FieldSig> field = type ? L_.find_field(*type, m.lexeme) : std::nullopt;
          if (field) record_access(field, m.lexeme, m.line);
          type = field ? std::optional(field->type) : std::nullopt;
          i += 2;
        }
      }
      return i;
    }

    Lowering& L_;
    TypeTable& type_;
    const Entity& method_;
    const ast::MethodDecl& decl_;
    std::map<std::string, std::optional<EntityId>> locals_;
    BodySummary summary_;
  };

  /// Resolution without registering an ExternalType.
  EntityId resolve_quiet(const std::string& name, const TypeTable& t) const {
    EntityId id = resolve_type_name(name, context_for(t, false), prelim_);
    if (!prelim_.contains(id) && !t.outer.empty()) {
      EntityId again = resolve_type_name(name, context_for(t, true), prelim_);
      if (prelim_.contains(again)) id = again;
    }
    return id;
  }

  void resolve_overrides() {
    for (auto& [_, t] : types_) {
      for (const MethodSig& m : t.methods) {
        if (m.is_static || m.is_private) continue;
        std::optional<MethodSig> found;
        std::deque<EntityId> queue(t.supertypes.begin(), t.supertypes.end());
        std::set<EntityId> seen(queue.begin(), queue.end());
        while (!queue.empty() && !found) {
          TypeTable* s = table_of(queue.front());
          queue.pop_front();
          if (s == nullptr) continue;
          std::optional<MethodSig> loose;
          for (const MethodSig& c : s->methods) {
            if (c.name != m.name || c.arity != m.arity || c.is_static || c.is_private) continue;
            if (c.param_types == m.param_types) {
              found = c;
              break;
            }
            if (!loose) loose = c;
          }
          if (!found) found = loose;
          for (const EntityId& x : s->supertypes) {
            if (seen.insert(x).second) queue.push_back(x);
          }
        }
        if (found) entities_.at(m.id).method->overrides = found->id;
      }
    }
  }

  std::vector<ast::CompilationUnit> units_;
  std::map<EntityId, Entity> entities_;
  std::vector<Relation> relations_;
  std::map<std::pair<EntityId, EntityId>, int> uses_;
  std::map<std::string, TypeTable> types_;
  std::set<std::string> externals_;
  std::map<const ast::MethodDecl*, EntityId> decl_ids_;
  Warnings warnings_;
  CodeModel prelim_;
};

}  // namespace

LoweringResult lower_to_model(std::vector<ast::CompilationUnit> units) {
  return Lowering(std::move(units)).run();
}

std::vector<std::string> collect_source_files(const std::vector<std::string>& paths) {
  std::set<std::string> out;
  for (const std::string& p : paths) {
    const fs::path path(p);
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      for (auto it = fs::recursive_directory_iterator(path, ec);
           !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (it->is_regular_file() && it->path().extension() == ".java") {
          out.insert(it->path().lexically_normal().generic_string());
        }
      }
      if (ec) throw InputError(p + ": " + ec.message());
    } else if (fs::is_regular_file(path, ec)) {
      out.insert(path.lexically_normal().generic_string());
    } else {
      throw InputError(p + ": no such file or directory");
    }
  }
  return {out.begin(), out.end()};
}

LoweringResult analyze_files(const std::vector<std::string>& files) {
  std::vector<ast::CompilationUnit> units;
  units.reserve(files.size());
  for (const std::string& f : files) {
    std::ifstream in(f, std::ios::binary);
    if (!in) throw InputError(f + ": cannot read file");
    std::ostringstream buf;
    buf << in.rdbuf();
    units.push_back(parse_source(buf.str(), f));
  }
  return lower_to_model(std::move(units));
}

}  // namespace plint
