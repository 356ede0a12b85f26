// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "plint/error.hpp"
#include "plint/lexer.hpp"
#include "plint/lowering.hpp"
#include "plint/parser.hpp"

namespace plint {
namespace {

CodeModel lower(std::vector<std::pair<std::string, std::string>> files, Warnings* warnings = nullptr) {
  std::vector<ast::CompilationUnit> units;
  for (auto& [name, src] : files) units.push_back(parse_source(src, name));
  auto result = lower_to_model(std::move(units));
  if (warnings != nullptr) *warnings = result.warnings;
  return std::move(result.model);
}

TEST(Lexer, ClassHeader) {
  auto toks = tokenize("class A {}", "a.java");
  ASSERT_EQ(toks.size(), 4u);
  EXPECT_TRUE(toks[0].is_keyword("class"));
  EXPECT_EQ(toks[1].cls, TokenClass::Identifier);
  EXPECT_EQ(toks[1].lexeme, "A");
  EXPECT_TRUE(toks[2].is_punct("{"));
  EXPECT_TRUE(toks[3].is_punct("}"));
}

TEST(Lexer, CommentDropped) {
  auto toks = tokenize("// c\nint x;", "a.java");
  ASSERT_EQ(toks.size(), 3u);
  EXPECT_TRUE(toks[0].is_keyword("int"));
  EXPECT_EQ(toks[0].line, 2);
}

TEST(Lexer, EscapedQuoteStaysInOneToken) {
  auto toks = tokenize("s = \"a\\\"b\";", "a.java");
  ASSERT_EQ(toks.size(), 4u);
  EXPECT_EQ(toks[2].cls, TokenClass::StringLiteral);
  EXPECT_EQ(toks[2].lexeme, "a\\\"b");
}

TEST(Lexer, UnterminatedLiteralsReportLine) {
  try {
    tokenize("int a;\n/* open", "f.java");
    FAIL();
  } catch (const LexError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.file(), "f.java");
  }
  EXPECT_THROW(tokenize("x = \"abc\n\";", "f.java"), LexError);
}

TEST(Parser, MinimalUnit) {
  auto unit = parse_source("package p; class A {}", "A.java");
  EXPECT_EQ(unit.package, "p");
  ASSERT_EQ(unit.types.size(), 1u);
  EXPECT_EQ(unit.types[0].name, "A");
  EXPECT_TRUE(unit.warnings.empty());
}

TEST(Parser, IfElseWithNestedWhile) {
  const char* src =
      "class A {\n"
      "  void m(int x) {\n"
      "    if (x > 0) {\n"
      "      while (x > 1) {\n"
      "        x--;\n"
      "      }\n"
      "    } else {\n"
      "      return;\n"
      "    }\n"
      "  }\n"
      "}\n";
  auto unit = parse_source(src, "A.java");
  const auto& body = *unit.types.at(0).methods.at(0).body;
  using ast::StmtKind;
  ASSERT_EQ(body.children.size(), 1u);
  const auto& s_if = body.children[0];
  EXPECT_EQ(s_if.kind, StmtKind::If);
  EXPECT_EQ(s_if.line, 3);
  EXPECT_EQ(s_if.end_line, 9);
  ASSERT_EQ(s_if.children.size(), 2u);
  const auto& then = s_if.children[0];
  EXPECT_EQ(then.kind, StmtKind::Block);
  ASSERT_EQ(then.children.size(), 1u);
  const auto& loop = then.children[0];
  EXPECT_EQ(loop.kind, StmtKind::While);
  EXPECT_EQ(loop.line, 4);
  EXPECT_EQ(loop.end_line, 6);
  ASSERT_EQ(loop.children.size(), 1u);
  ASSERT_EQ(loop.children[0].children.size(), 1u);
  EXPECT_EQ(loop.children[0].children[0].kind, StmtKind::ExprStmt);
  EXPECT_EQ(loop.children[0].children[0].line, 5);
  const auto& els = s_if.children[1];
  EXPECT_EQ(els.kind, StmtKind::Else);
  ASSERT_EQ(els.children.size(), 1u);
  EXPECT_EQ(els.children[0].children.at(0).kind, StmtKind::Return);
}

TEST(Parser, MissingClosingBraceFailsAtLastLine) {
  try {
    parse_source("package p;\nclass A {\n  int x;\n", "A.java");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Parser, UnsupportedConstructsWarnOnce) {
  const char* src =
      "class A {\n"
      "  static { init(); }\n"
      "  void m() {\n"
      "    Runnable r = () -> { go(); };\n"
      "    Object o = new Object() { public String toString() { return \"\"; } };\n"
      "  }\n"
      "}\n";
  auto unit = parse_source(src, "A.java");
  ASSERT_EQ(unit.warnings.size(), 3u);
  EXPECT_EQ(unit.warnings[0].line, 2);
  EXPECT_EQ(unit.warnings[1].line, 4);
  EXPECT_EQ(unit.warnings[2].line, 5);
}

TEST(Lowering, GetterAccessesField) {
  auto m = lower({{"p/A.java", "package p; class A { private int f; int getF() { return f; } }"}});
  const EntityId getter = make_entity_id(EntityKind::Method, "p.A.getF", "()");
  const EntityId field = make_entity_id(EntityKind::Field, "p.A.f");
  ASSERT_TRUE(m.contains(getter));
  ASSERT_TRUE(m.contains(field));
  int types = 0, fields = 0, methods = 0;
  for (const auto& e : m.entities()) {
    types += is_project_type_kind(e.kind);
    fields += e.kind == EntityKind::Field;
    methods += e.kind == EntityKind::Method;
  }
  EXPECT_EQ(types, 1);
  EXPECT_EQ(fields, 1);
  EXPECT_EQ(methods, 1);
  auto out = m.outgoing(getter);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0]->kind, RelationKind::Accesses);
  EXPECT_EQ(out[0]->to, field);
}

TEST(Lowering, UnknownSuperclassBecomesExternal) {
  auto m = lower({{"A.java", "class A extends Unknown {}"}});
  const EntityId a = make_entity_id(EntityKind::Class, "A");
  auto out = m.outgoing(a);
  bool found = false;
  for (const Relation* r : out) {
    if (r->kind == RelationKind::Extends) {
      EXPECT_EQ(r->to, external_type_id("Unknown"));
      EXPECT_EQ(m.get(r->to).kind, EntityKind::ExternalType);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Lowering, SharedPackageDeclaredOnce) {
  auto m = lower({{"p/A.java", "package p; class A {}"}, {"p/B.java", "package p; class B {}"}});
  int packages = 0;
  for (const auto& e : m.entities()) packages += e.kind == EntityKind::Package;
  EXPECT_EQ(packages, 1);
}

TEST(Lowering, ReceiverTypesResolveCalls) {
  auto m = lower({
      {"q/B.java", "package q; public class B { public int x; public int getY() { return 0; } public B next() { return this; } }"},
      {"p/A.java",
       "package p; import q.B; class A { private B b;\n"
       "  int m(B other) { B local = new B(); return b.getY() + other.x + local.next().getY() + "
       "helper(); }\n"
       "  int helper() { return unknown.call(); } }"},
  });
  const EntityId a_m = make_entity_id(EntityKind::Method, "p.A.m", "(q.B)");
  const auto& body = *m.get(a_m).method->body;
  std::vector<std::string> resolved, unresolved;
  for (const auto& c : body.calls) (c.target ? resolved : unresolved).push_back(c.name);
  EXPECT_EQ(resolved, (std::vector<std::string>{"getY", "next", "getY", "helper"}));
  EXPECT_TRUE(unresolved.empty());
  ASSERT_EQ(body.accesses.size(), 2u);  // b, other.x
  ASSERT_EQ(body.instantiations.size(), 1u);
  EXPECT_EQ(body.instantiations[0].type, make_entity_id(EntityKind::Class, "q.B"));
  const EntityId helper = make_entity_id(EntityKind::Method, "p.A.helper", "()");
  const auto& hb = *m.get(helper).method->body;
  ASSERT_EQ(hb.calls.size(), 1u);
  EXPECT_FALSE(hb.calls[0].target.has_value());
  EXPECT_EQ(hb.calls[0].name, "call");
}

TEST(Lowering, OverridesAndImplicitModifiers) {
  auto m = lower({{"p/S.java",
                   "package p; interface S { int K = 1; void run(int a); }\n"
                   "class Impl implements S { public void run(int b) { } }"}});
  const auto& k = m.get(make_entity_id(EntityKind::Field, "p.S.K"));
  EXPECT_TRUE(k.modifiers.has(Modifier::Public));
  EXPECT_TRUE(k.modifiers.has(Modifier::Static));
  EXPECT_TRUE(k.modifiers.has(Modifier::Final));
  const auto& run = m.get(make_entity_id(EntityKind::Method, "p.Impl.run", "(int)"));
  ASSERT_TRUE(run.method->overrides.has_value());
  EXPECT_EQ(*run.method->overrides, make_entity_id(EntityKind::Method, "p.S.run", "(int)"));
  const auto& abstract_run = m.get(*run.method->overrides);
  EXPECT_TRUE(abstract_run.modifiers.has(Modifier::Abstract));
  EXPECT_FALSE(abstract_run.method->body.has_value());
}

TEST(Lowering, OrderIndependent) {
  std::vector<std::pair<std::string, std::string>> files = {
      {"p/A.java", "package p; import q.B; class A { B b; void m() { b.go(); } }"},
      {"q/B.java", "package q; public class B { public void go() { } }"},
  };
  auto forward = lower(files);
  std::swap(files[0], files[1]);
  EXPECT_EQ(forward, lower(files));
}

}  // namespace
}  // namespace plint
