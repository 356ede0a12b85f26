// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "plint/code_model.hpp"
#include "plint/error.hpp"

namespace plint {
namespace {

Entity make(EntityKind kind, const std::string& qname, std::optional<EntityId> owner = std::nullopt) {
  Entity e;
  e.kind = kind;
  e.id = make_entity_id(kind, qname);
  e.qualified_name = qname;
  e.name = qname.substr(qname.rfind('.') + 1);
  e.owner = std::move(owner);
  if (kind != EntityKind::ExternalType && kind != EntityKind::Package) e.location = SourceLocation{"A.java", 1, 9};
  return e;
}

std::vector<Entity> small_world() {
  const EntityId pkg = make_entity_id(EntityKind::Package, "p");
  const EntityId a = make_entity_id(EntityKind::Class, "p.A");
  Entity field = make(EntityKind::Field, "p.A.f", a);
  field.declared_type = make_entity_id(EntityKind::ExternalType, "String");
  return {make(EntityKind::Class, "p.A", pkg), field, make(EntityKind::Package, "p"),
          make(EntityKind::ExternalType, "String")};
}

TEST(EntityIds, Format) {
  EXPECT_EQ(make_entity_id(EntityKind::Method, "p.A.f", "(int)").str(), "method:p.A.f(int)");
  EXPECT_EQ(make_entity_id(EntityKind::ExternalType, "String").str(), "external:String");
  EXPECT_EQ(entity_kind_from_string(to_string(EntityKind::Constructor)), EntityKind::Constructor);
  EXPECT_FALSE(entity_kind_from_string("module").has_value());
}

TEST(Modifiers, CanonicalOrder) {
  Modifiers m{Modifier::Final, Modifier::Public, Modifier::Static};
  EXPECT_EQ(m.names(), (std::vector<std::string>{"public", "static", "final"}));
  EXPECT_TRUE(m.has(Modifier::Static));
  EXPECT_FALSE(m.has(Modifier::Private));
  EXPECT_EQ(Modifiers::parse("abstract"), Modifier::Abstract);
  EXPECT_FALSE(Modifiers::parse("volatile").has_value());
}

TEST(CodeModel, QueriesAndOrder) {
  const CodeModel m = build_model(small_world(), {});
  ASSERT_EQ(m.size(), 4u);
  EXPECT_TRUE(std::is_sorted(m.entities().begin(), m.entities().end(),
                             [](const Entity& a, const Entity& b) { return a.id < b.id; }));
  const EntityId a("class:p.A");
  const EntityId f("field:p.A.f");
  ASSERT_EQ(m.members(a).size(), 1u);
  EXPECT_EQ(m.members(a)[0]->id, f);
  EXPECT_EQ(m.package_of(f)->id, EntityId("package:p"));
  EXPECT_EQ(m.owning_type(f)->id, a);
  EXPECT_EQ(m.type_by_qualified_name("p.A")->id, a);
  EXPECT_TRUE(m.is_project_type(a));
  EXPECT_FALSE(m.is_project_type(EntityId("external:String")));
  EXPECT_EQ(m.package_of(EntityId("external:String")), nullptr);
  EXPECT_THROW(m.get(EntityId("class:p.Z")), UnknownEntity);
}

TEST(CodeModel, Relations) {
  auto world = small_world();
  world.push_back(make(EntityKind::Class, "p.B", EntityId("package:p")));
  const std::vector<Relation> rels = {
      {RelationKind::Extends, EntityId("class:p.B"), EntityId("class:p.A"), 1},
      {RelationKind::UsesType, EntityId("class:p.B"), EntityId("class:p.A"), 2},
  };
  const CodeModel m = build_model(world, rels);
  EXPECT_EQ(m.outgoing(EntityId("class:p.B")).size(), 2u);
  EXPECT_EQ(m.incoming(EntityId("class:p.A")).size(), 2u);
  EXPECT_EQ(m.direct_supertypes(EntityId("class:p.B")), std::vector<EntityId>{EntityId("class:p.A")});
}

TEST(CodeModel, Validation) {
  auto dup = small_world();
  dup.push_back(dup.front());
  EXPECT_THROW(build_model(dup, {}), DuplicateId);

  auto dangling = small_world();
  dangling.push_back(make(EntityKind::Field, "p.Z.g", EntityId("class:p.Z")));
  EXPECT_THROW(build_model(dangling, {}), DanglingReference);

  auto orphan = small_world();
  orphan.push_back(make(EntityKind::Class, "q.C"));
  EXPECT_THROW(build_model(orphan, {}), DanglingReference);

  auto cyclic = small_world();
  cyclic.push_back(make(EntityKind::Class, "x.C", EntityId("class:x.D")));
  cyclic.push_back(make(EntityKind::Class, "x.D", EntityId("class:x.C")));
  EXPECT_THROW(build_model(cyclic, {}), CyclicContainment);

  const std::vector<Relation> bad_rel = {
      {RelationKind::Calls, EntityId("class:p.A"), EntityId("class:p.A"), 1}};
  EXPECT_THROW(build_model(small_world(), bad_rel), ModelError);
  const std::vector<Relation> missing = {
      {RelationKind::UsesType, EntityId("class:p.A"), EntityId("class:p.Gone"), 1}};
  EXPECT_THROW(build_model(small_world(), missing), DanglingReference);
}

TEST(CodeModel, EqualityIgnoresInputOrder) {
  auto world = small_world();
  auto reversed = world;
  std::reverse(reversed.begin(), reversed.end());
  EXPECT_TRUE(build_model(world, {}) == build_model(reversed, {}));
}

}  // namespace
}  // namespace plint
