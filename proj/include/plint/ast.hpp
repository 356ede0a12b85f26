// SPDX-License-Identifier: Apache-2.0

#ifndef PLINT_AST_HPP
#define PLINT_AST_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plint/diagnostics.hpp"
#include "plint/lexer.hpp"

namespace plint::ast {

enum class StmtKind {
  Block,
  If,
  Else,
  For,
  While,
  Do,
  Switch,
  Case,
  Try,
  Catch,
  Finally,
  Throw,
  Return,
  LocalDecl,
  ExprStmt,
};

std::string_view to_string(StmtKind kind);

/// Erased type reference: generic arguments and array dimensions dropped.
struct TypeRef {
  std::string name;  // dotted as written, e.g. "Map.Entry" or "int"
  int line = 0;

  bool primitive() const;
  bool operator==(const TypeRef&) const = default;
};

struct LocalVar {
  TypeRef type;
  std::string name;
  int line = 0;

  bool operator==(const LocalVar&) const = default;
};

/// One statement node. `expr` holds the tokens of this node's own
/// expressions (condition, initializers, operand) with opaque constructs
/// removed; nested statements live in `children`.
///
/// Shapes: If -> [then, Else?]; Else -> [stmt]; For/While/Do -> [body];
/// Switch -> [Case...]; Case -> [stmt...]; Try -> [Block, Catch..., Finally?];
/// Catch/Finally -> [Block].
struct Statement {
  StmtKind kind = StmtKind::Block;
  int line = 0;
  int end_line = 0;
  std::vector<Token> expr;
  std::vector<Statement> children;
  std::vector<LocalVar> locals;          // LocalDecl, For, Catch, Try resources
  std::vector<TypeRef> caught;           // Catch: every alternative of a multi-catch
  std::vector<std::string> case_labels;  // Case, empty for default
  bool is_default = false;               // Case

  bool operator==(const Statement&) const = default;
};

enum class TypeKind { Class, Interface, Enum };

struct Param {
  TypeRef type;
  std::string name;

  bool operator==(const Param&) const = default;
};

struct MethodDecl {
  bool is_constructor = false;
  std::string name;
  std::vector<std::string> modifiers;
  std::optional<TypeRef> return_type;  // empty for void and constructors
  std::vector<Param> params;
  std::vector<TypeRef> throws;
  std::optional<Statement> body;
  std::vector<Token> body_tokens;  // between the body braces
  int line = 0;
  int end_line = 0;

  bool operator==(const MethodDecl&) const = default;
};

struct FieldDecl {
  std::string name;
  std::vector<std::string> modifiers;
  TypeRef type;
  int line = 0;
  int end_line = 0;

  bool operator==(const FieldDecl&) const = default;
};

struct EnumConstant {
  std::string name;
  int line = 0;

  bool operator==(const EnumConstant&) const = default;
};

struct TypeDecl {
  TypeKind kind = TypeKind::Class;
  std::string name;
  std::vector<std::string> modifiers;
  std::vector<TypeRef> extends;
  std::vector<TypeRef> implements;
  std::vector<EnumConstant> enum_constants;
  std::vector<FieldDecl> fields;
  std::vector<MethodDecl> methods;
  std::vector<TypeDecl> nested;  // one level only
  int line = 0;
  int end_line = 0;

  bool operator==(const TypeDecl&) const = default;
};

struct CompilationUnit {
  std::string file;
  std::string package;
  std::vector<std::string> imports;
  std::vector<TypeDecl> types;
  Warnings warnings;

  bool operator==(const CompilationUnit&) const = default;
};

}  // namespace plint::ast

#endif  // PLINT_AST_HPP
