// SPDX-License-Identifier: Apache-2.0

#include "plint/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>

#include "plint/error.hpp"

namespace plint::metrics {

using ast::Statement;
using ast::StmtKind;

namespace {

bool is_wrapper(StmtKind k) {
  return k == StmtKind::Block || k == StmtKind::Else || k == StmtKind::Case ||
         k == StmtKind::Catch || k == StmtKind::Finally;
}

int decision_weight(const Statement& s) {
  int n = 0;
  switch (s.kind) {
    case StmtKind::If:
    case StmtKind::For:
    case StmtKind::While:
    case StmtKind::Do:
    case StmtKind::Catch:
      n = 1;
      break;
    case StmtKind::Case:
      n = s.is_default ? 0 : 1;
      break;
    default:
      break;
  }
  for (const Token& t : s.expr) {
    if (t.is_op("&&") || t.is_op("||") || t.is_op("?")) ++n;
  }
  return n;
}

class NestingWalker {
 public:
  int run(const Statement& body) {
    for (const Statement& c : body.children) visit(c, 1);
    return max_;
  }

 private:
  void body_at(const Statement& s, int depth) {
    if (s.kind == StmtKind::Block) {
      for (const Statement& c : s.children) visit(c, depth);
    } else {
      visit(s, depth);
    }
  }

  void visit(const Statement& s, int depth) {
    if (s.kind == StmtKind::Block) {
      for (const Statement& c : s.children) visit(c, depth);
      return;
    }
    max_ = std::max(max_, depth);
    switch (s.kind) {
      case StmtKind::If:
        for (const Statement& c : s.children) {
          if (c.kind != StmtKind::Else) {
            body_at(c, depth + 1);
          } else if (!c.children.empty() && c.children.front().kind == StmtKind::If) {
            visit(c.children.front(), depth);
          } else {
            for (const Statement& e : c.children) body_at(e, depth + 1);
          }
        }
        break;
      case StmtKind::For:
      case StmtKind::While:
      case StmtKind::Do:
        for (const Statement& c : s.children) body_at(c, depth + 1);
        break;
      case StmtKind::Switch:
        for (const Statement& kase : s.children) {
          for (const Statement& c : kase.children) body_at(c, depth + 1);
        }
        break;
      case StmtKind::Try:
        for (const Statement& c : s.children) {
          if (c.kind == StmtKind::Catch || c.kind == StmtKind::Finally) {
            for (const Statement& b : c.children) body_at(b, depth + 1);
          } else {
            body_at(c, depth + 1);
          }
        }
        break;
      default:
        break;
    }
  }

  int max_ = 0;
};

const Entity& require_class(const EntityId& cls, const CodeModel& model) {
  const Entity* e = model.find(cls);
  if (e == nullptr || e->kind != EntityKind::Class) {
    throw NotAClass(cls.str() + " is not a class");
  }
  return *e;
}

bool has_body(const Entity& e) { return e.method && e.method->body.has_value(); }

/// Own fields of `cls` that `method` accesses.
std::set<EntityId> own_fields_used(const Entity& method, const EntityId& cls,
                                   const CodeModel& model) {
  std::set<EntityId> out;
  for (const Relation* r : model.outgoing(method.id)) {
    if (r->kind != RelationKind::Accesses) continue;
    const Entity* f = model.find(r->to);
    if (f != nullptr && f->kind == EntityKind::Field && f->owner == cls) out.insert(f->id);
  }
  return out;
}

bool shares_any(const std::set<EntityId>& a, const std::set<EntityId>& b) {
  for (const EntityId& x : a) {
    if (b.contains(x)) return true;
  }
  return false;
}

}  // namespace

int cyclomatic_complexity(const Statement& body) {
  int n = 1;
  std::function<void(const Statement&)> walk = [&](const Statement& s) {
    n += decision_weight(s);
    for (const Statement& c : s.children) walk(c);
  };
  for (const Statement& c : body.children) walk(c);
  return n + decision_weight(body);
}

int max_nesting_depth(const Statement& body) { return NestingWalker{}.run(body); }

int statement_count(const Statement& body) {
  int n = 0;
  std::function<void(const Statement&)> walk = [&](const Statement& s) {
    if (!is_wrapper(s.kind)) ++n;
    for (const Statement& c : s.children) walk(c);
  };
  for (const Statement& c : body.children) walk(c);
  return n;
}

int cyclomatic_complexity(const Entity& method) {
  if (!has_body(method)) throw NoBody(method.id.str() + " has no body");
  return method.method->body->cyclomatic;
}

std::size_t lcom4(const EntityId& cls, const CodeModel& model) {
  require_class(cls, model);
  std::vector<const Entity*> nodes;
  for (const Entity* m : model.members(cls)) {
    if (m->kind == EntityKind::Method && !m->modifiers.has(Modifier::Static) && has_body(*m)) {
      nodes.push_back(m);
    }
  }
  const std::size_t n = nodes.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](std::size_t a, std::size_t b) { parent[root(a)] = root(b); };

  std::map<EntityId, std::size_t> index;
  std::vector<std::set<EntityId>> fields(n);
  for (std::size_t i = 0; i < n; ++i) {
    index[nodes[i]->id] = i;
    fields[i] = own_fields_used(*nodes[i], cls, model);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (shares_any(fields[i], fields[j])) join(i, j);
    }
    for (const Relation* r : model.outgoing(nodes[i]->id)) {
      if (r->kind != RelationKind::Calls) continue;
      auto it = index.find(r->to);
      if (it != index.end()) join(i, it->second);
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) roots.insert(root(i));
  return roots.size();
}

int wmc(const EntityId& cls, const CodeModel& model) {
  require_class(cls, model);
  int sum = 0;
  for (const Entity* m : model.members(cls)) {
    if (is_callable_kind(m->kind) && has_body(*m)) sum += m->method->body->cyclomatic;
  }
  return sum;
}

double tcc(const EntityId& cls, const CodeModel& model) {
  require_class(cls, model);
  std::vector<std::set<EntityId>> visible;
  for (const Entity* m : model.members(cls)) {
    if (m->kind == EntityKind::Method && !m->modifiers.has(Modifier::Private) &&
        !m->modifiers.has(Modifier::Static) && has_body(*m)) {
      visible.push_back(own_fields_used(*m, cls, model));
    }
  }
  const std::size_t n = visible.size();
  if (n < 2) return 1.0;
  std::size_t connected = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (shares_any(visible[i], visible[j])) ++connected;
    }
  }
  return static_cast<double>(connected) / static_cast<double>(n * (n - 1) / 2);
}

bool is_accessor_name(std::string_view name) {
  for (std::string_view prefix : {"get", "set", "is"}) {
    if (name.size() > prefix.size() && name.starts_with(prefix) &&
        std::isupper(static_cast<unsigned char>(name[prefix.size()]))) {
      return true;
    }
  }
  return false;
}

std::size_t atfd(const EntityId& cls, const CodeModel& model) {
  require_class(cls, model);
  auto foreign = [&](const Entity& target) {
    const Entity* owner = model.owning_type(target.id);
    return owner != nullptr && owner->id != cls;
  };
  std::set<EntityId> touched;
  for (const Entity* m : model.members(cls)) {
    if (!is_callable_kind(m->kind)) continue;
    for (const Relation* r : model.outgoing(m->id)) {
      const Entity* target = model.find(r->to);
      if (target == nullptr || !foreign(*target)) continue;
      if (r->kind == RelationKind::Accesses && target->kind == EntityKind::Field) {
        touched.insert(target->id);
      } else if (r->kind == RelationKind::Calls && target->kind == EntityKind::Method &&
                 is_accessor_name(target->name)) {
        touched.insert(target->id);
      }
    }
  }
  return touched.size();
}

std::set<EntityId> efferent_packages(const EntityId& type, const CodeModel& model) {
  if (!model.is_project_type(type)) throw NotAType(type.str() + " is not a project type");
  const Entity* own = model.package_of(type);
  std::set<EntityId> out;
  for (const EntityId& dep : dependencies_of(type, model)) {
    if (!model.is_project_type(dep)) continue;
    const Entity* pkg = model.package_of(dep);
    if (pkg != nullptr && (own == nullptr || pkg->id != own->id)) out.insert(pkg->id);
  }
  return out;
}

std::vector<std::vector<EntityId>> strongly_connected_components(const DirectedGraph& graph) {
  // Iterative Tarjan over integer node indices.
  std::vector<EntityId> ids;
  std::map<EntityId, std::size_t> index_of;
  for (const auto& [node, _] : graph.adjacency()) {
    index_of.emplace(node, ids.size());
    ids.push_back(node);
  }
  const std::size_t n = ids.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [node, targets] : graph.adjacency()) {
    for (const EntityId& t : targets) succ[index_of.at(node)].push_back(index_of.at(t));
  }

  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<EntityId>> out;
  std::size_t counter = 0;

  struct Frame {
    std::size_t node;
    std::size_t next;
  };
  for (std::size_t start = 0; start < n; ++start) {
    if (index[start] != kUnvisited) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = counter++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < succ[f.node].size()) {
        const std::size_t w = succ[f.node][f.next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      const std::size_t v = f.node;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().node] = std::min(low[frames.back().node], low[v]);
      if (low[v] != index[v]) continue;
      std::vector<EntityId> component;
      std::size_t w = 0;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(ids[w]);
      } while (w != v);
      std::sort(component.begin(), component.end());
      out.push_back(std::move(component));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace plint::metrics
