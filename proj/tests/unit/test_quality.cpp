// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "plint/error.hpp"
#include "plint/quality.hpp"
#include "test_support.hpp"

namespace plint {
namespace {

const ScoreConfig kDefaults = ScoreConfig::defaults();

TEST(Density, Examples) {
  EXPECT_DOUBLE_EQ(violation_density(0, 30), 0.0);
  EXPECT_DOUBLE_EQ(violation_density(3, 30), 0.1);
  EXPECT_DOUBLE_EQ(violation_density(4, 0), 0.0);
}

TEST(Utility, Examples) {
  EXPECT_DOUBLE_EQ(utility(0.0, 0.1), 1.0);
  EXPECT_DOUBLE_EQ(utility(0.1, 0.1), 0.0);
  EXPECT_DOUBLE_EQ(utility(0.05, 0.1), 0.5);
  EXPECT_DOUBLE_EQ(utility(3.0, 0.1), 0.0);
  EXPECT_THROW(utility(0.1, 0.0), NonPositiveLimit);
  EXPECT_THROW(utility(0.1, -1.0), NonPositiveLimit);
}

TEST(PrincipleScore, Examples) {
  const RuleUtility one[] = {{0.7, Severity::Minor}};
  EXPECT_DOUBLE_EQ(principle_score(one, kDefaults), 0.7);
  const RuleUtility mixed[] = {{1.0, Severity::Major}, {0.0, Severity::Minor}};
  EXPECT_DOUBLE_EQ(principle_score(mixed, kDefaults), 2.0 / 3.0);
  const RuleUtility clean[] = {{1.0, Severity::Major}, {1.0, Severity::Info}};
  EXPECT_DOUBLE_EQ(principle_score(clean, kDefaults), 1.0);
  EXPECT_THROW(principle_score({}, kDefaults), NoEnabledRules);
}

TEST(Overall, Examples) {
  std::map<Principle, double> all_one;
  std::map<Principle, double> all_zero;
  for (Principle p : kAllPrinciples) {
    all_one[p] = 1.0;
    all_zero[p] = 0.0;
  }
  auto a = overall_and_grade(all_one, kDefaults);
  EXPECT_DOUBLE_EQ(a.overall, 1.0);
  EXPECT_DOUBLE_EQ(a.grade, 1.0);
  auto b = overall_and_grade(all_zero, kDefaults);
  EXPECT_DOUBLE_EQ(b.overall, 0.0);
  EXPECT_DOUBLE_EQ(b.grade, 6.0);
  auto c = overall_and_grade({{Principle::SRP, 1.0}, {Principle::KISS, 0.0}}, kDefaults);
  EXPECT_DOUBLE_EQ(c.overall, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(c.grade, 8.0 / 3.0);
  EXPECT_THROW(overall_and_grade({}, kDefaults), NothingScored);
}

TEST(ScoreConfig, DefaultWeightOrdering) {
  const std::set<Principle> top = {Principle::SRP, Principle::SOC, Principle::DRY, Principle::IH, Principle::OCP};
  for (Principle a : top) {
    for (Principle b : kAllPrinciples) {
      if (!top.contains(b)) {
        EXPECT_GT(kDefaults.principle_weight(a), kDefaults.principle_weight(b));
      }
    }
  }
  EXPECT_DOUBLE_EQ(kDefaults.severity_weight(Severity::Major), 2.0);
  EXPECT_DOUBLE_EQ(kDefaults.severity_weight(Severity::Minor), 1.0);
  EXPECT_DOUBLE_EQ(kDefaults.severity_weight(Severity::Info), 0.5);
  EXPECT_DOUBLE_EQ(default_density_limit(Severity::Major), 0.10);
  EXPECT_DOUBLE_EQ(default_density_limit(Severity::Minor), 0.25);
  EXPECT_DOUBLE_EQ(default_density_limit(Severity::Info), 0.50);
}

TEST(ScoreConfig, RejectsNonPositive) {
  ScoreConfig c = kDefaults;
  c.rule_density_limits["R-KISS-1"] = 0.0;
  EXPECT_THROW(c.validate(), NonPositiveLimit);
  ScoreConfig w = kDefaults;
  w.principle_weights[Principle::DRY] = -2.0;
  EXPECT_THROW(w.validate(), NonPositiveLimit);
}

TEST(Assess, NoFindingsScoresPerfect) {
  auto model = testing::analyze_corpus().model;
  std::vector<std::string> ids;
  for (const auto& r : list_rules()) ids.push_back(r.rule_id);
  auto report = assess(model, {}, ids, kDefaults);
  EXPECT_EQ(report.per_rule.size(), 17u);
  EXPECT_EQ(report.per_principle.size(), 9u);
  ASSERT_TRUE(report.overall.has_value());
  EXPECT_DOUBLE_EQ(report.overall->grade, 1.0);
}

TEST(Assess, DisabledPrinciplesAreOmitted) {
  auto model = testing::analyze_corpus().model;
  const std::vector<std::string> ids = {"R-KISS-1"};
  auto report = assess(model, {}, ids, kDefaults);
  EXPECT_EQ(report.per_principle.size(), 1u);
  EXPECT_TRUE(report.per_principle.contains(Principle::KISS));
  EXPECT_FALSE(assess(model, {}, {}, kDefaults).overall.has_value());
}

TEST(Assess, RandomizedProperties) {
  auto model = testing::analyze_corpus().model;
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    EXPECT_EQ(testing::check_aggregation_case(model, rng), "") << "case " << i;
  }
}

TEST(Assess, ExtraFindingsNeverImproveGrade) {
  auto model = testing::analyze_corpus().model;
  std::vector<std::string> ids;
  for (const auto& r : list_rules()) ids.push_back(r.rule_id);
  auto base = evaluate_all(model, RuleConfig::all_rules()).findings;
  auto worse = base;
  worse.push_back(testing::synthetic_finding("R-SRP-1", 0));
  const double g1 = assess(model, base, ids, kDefaults).overall->grade;
  const double g2 = assess(model, worse, ids, kDefaults).overall->grade;
  EXPECT_GE(g2, g1);
}

}  // namespace
}  // namespace plint
