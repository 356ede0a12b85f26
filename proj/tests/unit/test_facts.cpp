// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "plint/error.hpp"
#include "plint/facts.hpp"
#include "plint/rules.hpp"
#include "test_support.hpp"

namespace plint {
namespace {

using nlohmann::json;

std::string schema_error_path(const json& doc) {
  try {
    import_facts(doc);
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<no error>";
}

TEST(Facts, RoundTripReproducesModel) {
  auto result = testing::analyze_corpus();
  const json doc = export_facts(result.model, true, "corpus");
  EXPECT_EQ(doc.at("schema"), kFactsSchema);
  EXPECT_EQ(doc.at("project"), "corpus");
  auto back = import_facts(json::parse(doc.dump()));
  EXPECT_TRUE(back.warnings.empty());
  EXPECT_EQ(back.project, "corpus");
  EXPECT_TRUE(back.model == result.model);
  EXPECT_EQ(export_facts(back.model, true, "corpus"), doc);
}

TEST(Facts, RoundTripKeepsFindings) {
  auto result = testing::analyze_corpus();
  auto back = import_facts(export_facts(result.model, true));
  auto direct = evaluate_all(result.model, RuleConfig::all_rules());
  auto imported = evaluate_all(back.model, RuleConfig::all_rules());
  EXPECT_EQ(direct.findings, imported.findings);
}

TEST(Facts, WithoutTokensDisablesClones) {
  auto result = testing::analyze_corpus();
  const json doc = export_facts(result.model, false);
  auto back = import_facts(doc);
  ASSERT_EQ(back.warnings.size(), 1u);
  EXPECT_EQ(back.warnings[0].message, "clone detection unavailable");
  auto eval = check_dry(back.model);
  EXPECT_TRUE(eval.findings.empty());
  ASSERT_EQ(eval.warnings.size(), 1u);
  EXPECT_NE(eval.warnings[0].message.find("R-DRY-1"), std::string::npos);
}

TEST(Facts, KeysAreSorted) {
  auto m = testing::model_of("package p; public class A { private int f; public int g() { return f; } }");
  const std::string text = export_facts(m, true).dump();
  const json doc = json::parse(text);
  EXPECT_EQ(doc.dump(), text);
  std::string prev;
  for (const auto& [k, _] : doc.items()) {
    EXPECT_LT(prev, k);
    prev = k;
  }
}

TEST(Facts, RelationsAreOptional) {
  auto m = testing::model_of({{"A.java", "package p; public class A extends B { int g(B b) { return b.h(); } }"},
                              {"B.java", "package p; public class B { int h() { return 1; } }"}});
  json doc = export_facts(m, true);
  doc.erase("relations");
  auto back = import_facts(doc);
  bool extends = false;
  bool calls = false;
  for (const Relation& r : back.model.relations()) {
    extends = extends || (r.kind == RelationKind::Extends && r.from == EntityId("class:p.A"));
    calls = calls || (r.kind == RelationKind::Calls && r.to == EntityId("method:p.B.h()"));
  }
  EXPECT_TRUE(extends);
  EXPECT_TRUE(calls);
}

TEST(Facts, SchemaErrorsCarryPointer) {
  auto m = testing::model_of("package p; public class A { int f; void g() {} }");
  const json good = export_facts(m, true);

  EXPECT_EQ(schema_error_path(json::array()), "/");
  json wrong = good;
  wrong["schema"] = "code-model/2";
  EXPECT_EQ(schema_error_path(wrong), "/schema");

  json no_types = good;
  no_types.erase("types");
  EXPECT_EQ(schema_error_path(no_types), "/types");

  json bad_line = good;
  bad_line["types"][0]["location"]["start_line"] = "one";
  EXPECT_EQ(schema_error_path(bad_line), "/types/0/location/start_line");

  json bad_kind = good;
  bad_kind["types"][0]["kind"] = "module";
  EXPECT_EQ(schema_error_path(bad_kind), "/types/0/kind");

  json bad_mod = good;
  bad_mod["fields"][0]["modifiers"] = json::array({"volatile"});
  EXPECT_EQ(schema_error_path(bad_mod), "/fields/0/modifiers/0");
}

TEST(Facts, DanglingReferenceIsModelError) {
  auto m = testing::model_of("package p; public class A { int f; }");
  json doc = export_facts(m, true);
  doc["fields"][0]["owner"] = "class:p.Missing";
  EXPECT_THROW(import_facts(doc), Error);
}

}  // namespace
}  // namespace plint
