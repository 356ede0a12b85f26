// SPDX-License-Identifier: Apache-2.0

#ifndef PLINT_METRICS_HPP
#define PLINT_METRICS_HPP

#include <cstddef>
#include <set>
#include <string_view>
#include <vector>

#include "plint/ast.hpp"
#include "plint/code_model.hpp"
#include "plint/graph.hpp"

namespace plint::metrics {

// Statement-tree measures. `body` is a method's root block.

/// 1 + if/for/while/do/case/catch nodes + &&, || and ?: operators.
int cyclomatic_complexity(const ast::Statement& body);
/// Statements directly in the body have depth 1; blocks, case groups and
/// catch/finally clauses add no level, and else-if chains stay flat.
int max_nesting_depth(const ast::Statement& body);
/// Counts every node except the structural wrappers (block, else, case,
/// catch, finally).
int statement_count(const ast::Statement& body);

/// Stored value for a method or constructor. Throws NoBody.
int cyclomatic_complexity(const Entity& method);

// Class-level measures over a built model. Each throws NotAClass unless
// `cls` names a Class entity.

/// Connected components over non-static methods with bodies, joined by a
/// shared own field or a direct call.
std::size_t lcom4(const EntityId& cls, const CodeModel& model);
/// Sum of cyclomatic complexity over methods and constructors with bodies.
int wmc(const EntityId& cls, const CodeModel& model);
/// Fraction of visible (non-private, non-static) method pairs sharing an
/// own field; 1.0 below two visible methods.
double tcc(const EntityId& cls, const CodeModel& model);
/// Distinct foreign fields read directly or through accessor-shaped calls.
std::size_t atfd(const EntityId& cls, const CodeModel& model);

/// get/set/is followed by an upper-case letter.
bool is_accessor_name(std::string_view name);

/// Other project packages the type depends on. Throws NotAType.
std::set<EntityId> efferent_packages(const EntityId& type, const CodeModel& model);

/// Tarjan's algorithm. Components come back with members sorted and the
/// components ordered by their smallest member.
std::vector<std::vector<EntityId>> strongly_connected_components(const DirectedGraph& graph);

}  // namespace plint::metrics

#endif  // PLINT_METRICS_HPP
