#include <gtest/gtest.h>

#include <array>
#include <random>

#include "depra/dpn_engine.hpp"
#include "depra/error.hpp"
#include "test_support.hpp"

namespace depra {
namespace {

const std::vector<DependabilityProperty> kWeights{
    {"safety", 100}, {"reliability", 10}, {"availability", 1}, {"maintainability", 0.1}, {"security", 0.01}};

TradeoffCriteria criteria(double x, std::string unit = "score", double actual = 1, double expected = 1) {
  TradeoffCriteria c;
  c.actual = {actual, unit};
  c.expected = {expected, unit};
  c.acceptance = x;
  return c;
}

Alternative alternative(std::string id, std::array<double, 5> xs) {
  Alternative a;
  a.id = id;
  a.name = id;
  for (std::size_t i = 0; i < xs.size(); ++i) a.evaluations[kWeights[i].name] = criteria(xs[i]);
  return a;
}

// Reference: plain weighted sum in the test.
double weighted_sum(const std::array<double, 5>& xs) {
  double s = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) s += xs[i] * kWeights[i].weight;
  return s;
}

TEST(Dpn, CaseStudyTotals) {
  const std::array<double, 5> without{0.8, 0.8, 0.8, 1, 1};
  const std::array<double, 5> redundancy{1, 1, 1, 1, 1};
  const std::array<double, 5> monitoring{1, 1, 0.2, 1, 1};
  EXPECT_NEAR(compute_dpn(alternative("w", without), kWeights).total, 88.91, 1e-9);
  EXPECT_NEAR(compute_dpn(alternative("r", redundancy), kWeights).total, 111.11, 1e-9);
  EXPECT_NEAR(compute_dpn(alternative("m", monitoring), kWeights).total, 110.31, 1e-9);
  EXPECT_NEAR(expected_dpn(kWeights), 111.11, 1e-9);
}

TEST(Dpn, ContributionsFollowPropertyOrder) {
  const DpnResult r = compute_dpn(alternative("m", {1, 1, 0.2, 1, 1}), kWeights);
  ASSERT_EQ(r.contributions.size(), 5u);
  EXPECT_EQ(r.contributions[2].property, "availability");
  EXPECT_NEAR(r.contributions[2].value, 0.2, 1e-15);
  ASSERT_NE(r.find("security"), nullptr);
  EXPECT_NEAR(r.find("security")->value, 0.01, 1e-15);
}

TEST(Dpn, MissingEvaluationListsEveryProperty) {
  Alternative a = alternative("a", {1, 1, 1, 1, 1});
  a.evaluations.erase("availability");
  a.evaluations.erase("security");
  try {
    compute_dpn(a, kWeights);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::missing);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("availability"), std::string::npos);
    EXPECT_NE(msg.find("security"), std::string::npos);
  }
}

TEST(Dpn, RejectsBadWeightsAndAcceptance) {
  std::vector<DependabilityProperty> zero{{"safety", 0.0}};
  EXPECT_THROW(expected_dpn(zero), Error);
  EXPECT_THROW(expected_dpn({}), Error);
  Alternative a;
  a.evaluations["safety"] = criteria(1.5);
  std::vector<DependabilityProperty> one{{"safety", 1.0}};
  EXPECT_THROW(compute_dpn(a, one), Error);
}

TEST(DpnProperty, WeightedSumBoundedByExpected) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 5000; ++i) {
    std::array<double, 5> xs{};
    for (double& x : xs) x = fixtures::uniform(rng, 0, 1);
    const DpnResult r = compute_dpn(alternative("a", xs), kWeights);
    EXPECT_NEAR(r.total, weighted_sum(xs), 1e-12);
    EXPECT_LE(r.total, r.expected_total + 1e-12);
    EXPECT_GE(r.total, 0.0);
  }
}

TEST(DpnProperty, RaisingOneAcceptanceNeverLowersTheTotal) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 5000; ++i) {
    std::array<double, 5> xs{};
    for (double& x : xs) x = fixtures::uniform(rng, 0, 1);
    std::array<double, 5> ys = xs;
    const auto k = static_cast<std::size_t>(fixtures::pick(rng, 0, 4));
    ys[k] = fixtures::uniform(rng, xs[k], 1.0);
    EXPECT_GE(compute_dpn(alternative("b", ys), kWeights).total,
              compute_dpn(alternative("a", xs), kWeights).total);
  }
}

TEST(Comparison, RanksByTotalAndKeepsInputOrderOnTies) {
  const std::vector<Alternative> alts{alternative("without", {0.8, 0.8, 0.8, 1, 1}),
                                      alternative("redundancy", {1, 1, 1, 1, 1}),
                                      alternative("monitoring", {1, 1, 0.2, 1, 1}),
                                      alternative("twin", {1, 1, 0.2, 1, 1})};
  const ComparisonReport r = compare_alternatives(alts, kWeights);
  ASSERT_EQ(r.ranking.size(), 4u);
  EXPECT_EQ(r.alternatives[r.ranking[0]].id, "redundancy");
  EXPECT_EQ(r.alternatives[r.ranking[1]].id, "monitoring");
  EXPECT_EQ(r.alternatives[r.ranking[2]].id, "twin");
  EXPECT_EQ(r.alternatives[r.ranking[3]].id, "without");
  EXPECT_TRUE(r.alternatives[1].all_fulfilled);
  EXPECT_FALSE(r.alternatives[2].all_fulfilled);
  EXPECT_EQ(r.alternatives[2].fulfilled, (std::vector<bool>{true, true, false, true, true}));
  ASSERT_EQ(r.property_series.size(), 5u);
  EXPECT_NEAR(r.property_series[2].values[2], 0.2, 1e-15);
  EXPECT_NEAR(r.actual_series.values[0], 88.91, 1e-9);
  EXPECT_NEAR(r.expected_series.values[3], 111.11, 1e-9);
}

TEST(ObjectiveCheck, UsesUnitPolarityAndLimits) {
  TradeoffCriteria c = criteria(1, "fit", 2, 10);
  EXPECT_EQ(objective_check(c), ObjectiveStatus::meets_expected);
  c.actual.value = 10;
  EXPECT_EQ(objective_check(c), ObjectiveStatus::meets_expected);
  c.actual.value = 12;
  EXPECT_EQ(objective_check(c), ObjectiveStatus::no_limits);
  c.upper_limit = 15;
  EXPECT_EQ(objective_check(c), ObjectiveStatus::within_limits);
  c.actual.value = 20;
  EXPECT_EQ(objective_check(c), ObjectiveStatus::violates_upper);

  TradeoffCriteria a = criteria(1, "availability", 0.9999, 0.99999);
  a.lower_limit = 0.999;
  EXPECT_EQ(objective_check(a), ObjectiveStatus::within_limits);
  a.actual.value = 0.99;
  EXPECT_EQ(objective_check(a), ObjectiveStatus::violates_lower);
  a.actual.value = 0.999995;
  EXPECT_EQ(objective_check(a), ObjectiveStatus::meets_expected);
}

TEST(ObjectiveCheck, UnitMismatchAndUnknownUnitAreDomainErrors) {
  TradeoffCriteria c = criteria(1, "fit");
  c.expected.unit = "per_hour";
  EXPECT_THROW(objective_check(c), Error);
  EXPECT_THROW(objective_check(criteria(1, "furlongs")), Error);
}

TEST(ObjectiveCheck, DisagreementsBecomeWarnings) {
  TradeoffCriteria c = criteria(1.0, "fit", 20, 10);
  c.upper_limit = 15;
  EXPECT_TRUE(acceptance_disagreement(c));
  c.acceptance = 0.6;
  EXPECT_FALSE(acceptance_disagreement(c));
  TradeoffCriteria ok = criteria(0.0, "fit", 5, 10);
  EXPECT_TRUE(acceptance_disagreement(ok));

  Alternative a = alternative("a", {1, 1, 1, 1, 1});
  a.evaluations["safety"] = c;
  a.evaluations["safety"].acceptance = 1.0;
  const std::vector<Alternative> alts{a};
  const ComparisonReport r = compare_alternatives(alts, kWeights);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_EQ(r.warnings[0].kind, "acceptance_disagreement");
  EXPECT_EQ(r.warnings[0].subject, "a/safety");
}

TEST(Conflicts, OneImprovedOneWorsened) {
  const DpnResult before = compute_dpn(alternative("a", {1, 1, 1, 1, 0}), kWeights);
  const DpnResult after = compute_dpn(alternative("b", {1, 1, 0, 1, 1}), kWeights);
  EXPECT_NEAR(before.total, 111.10, 1e-9);
  EXPECT_NEAR(after.total, 110.11, 1e-9);
  const auto conflicts = detect_conflicts(before, after);
  ASSERT_EQ(conflicts.size(), 1u);
  EXPECT_EQ(conflicts[0], (Conflict{"security", "availability"}));
}

TEST(Conflicts, NoneWhenOnlyImprovements) {
  const DpnResult before = compute_dpn(alternative("a", {0.8, 0.8, 0.8, 1, 1}), kWeights);
  const DpnResult after = compute_dpn(alternative("b", {1, 1, 1, 1, 1}), kWeights);
  EXPECT_TRUE(detect_conflicts(before, after).empty());
  EXPECT_TRUE(detect_conflicts(after, after).empty());
}

TEST(Conflicts, EveryImprovedWorsenedPair) {
  const DpnResult before = compute_dpn(alternative("a", {0.4, 1, 0.4, 1, 0.6}), kWeights);
  const DpnResult after = compute_dpn(alternative("b", {1, 0.2, 1, 0, 0.6}), kWeights);
  const auto c = detect_conflicts(before, after);
  EXPECT_EQ(c, (std::vector<Conflict>{{"safety", "reliability"},
                                      {"safety", "maintainability"},
                                      {"availability", "reliability"},
                                      {"availability", "maintainability"}}));
}

TEST(Conflicts, DifferentPropertySetsAreRejected) {
  const DpnResult a = compute_dpn(alternative("a", {1, 1, 1, 1, 1}), kWeights);
  DpnResult b = a;
  b.contributions[0].weight = 50;
  EXPECT_THROW(detect_conflicts(a, b), Error);
}

TEST(Decomposition, RecoversTheCaseStudyVector) {
  const auto levels = decompose_contributions(110.31, kWeights);
  ASSERT_EQ(levels.size(), 5u);
  EXPECT_EQ(levels[2].first, "availability");
  EXPECT_EQ(levels[2].second.label, AcceptanceLabel::almost_unacceptable);
  for (std::size_t i : {0u, 1u, 3u, 4u}) EXPECT_EQ(levels[i].second.value, 1.0);
}

TEST(Decomposition, TwoDigitReadback) {
  // 109.11 -> 111.11 moves only the second digit: reliability.
  const auto before = decompose_contributions(109.11, kWeights);
  const auto after = decompose_contributions(111.11, kWeights);
  for (std::size_t i = 0; i < 5; ++i) {
    if (i == 1) EXPECT_LT(before[i].second.value, after[i].second.value);
    else EXPECT_EQ(before[i].second, after[i].second);
  }
}

TEST(Decomposition, InvertsComputeOnEveryQuantizedVector) {
  std::array<std::size_t, 5> idx{};
  int checked = 0;
  for (idx[0] = 0; idx[0] < 6; ++idx[0])
    for (idx[1] = 0; idx[1] < 6; ++idx[1])
      for (idx[2] = 0; idx[2] < 6; ++idx[2])
        for (idx[3] = 0; idx[3] < 6; ++idx[3])
          for (idx[4] = 0; idx[4] < 6; ++idx[4]) {
            std::array<double, 5> xs{};
            for (std::size_t i = 0; i < 5; ++i) xs[i] = kAcceptanceScale[idx[i]].value;
            const double total = compute_dpn(alternative("a", xs), kWeights).total;
            const auto levels = decompose_contributions(total, kWeights);
            for (std::size_t i = 0; i < 5; ++i) ASSERT_EQ(levels[i].second, kAcceptanceScale[idx[i]]);
            ++checked;
          }
  EXPECT_EQ(checked, 7776);
}

TEST(Decomposition, AmbiguousWeightsAreRefused) {
  const std::vector<DependabilityProperty> flat{{"a", 1}, {"b", 1}};
  EXPECT_FALSE(decomposition_supported(flat));
  try {
    decompose_contributions(1.0, flat);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ambiguous);
  }
}

TEST(Decomposition, UnreachableTotalIsInconsistent) {
  try {
    decompose_contributions(55.555, kWeights);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::inconsistent);
  }
  EXPECT_THROW(decompose_contributions(200.0, kWeights), Error);
}

TEST(AcceptanceScale, LabelsAndLookup) {
  EXPECT_EQ(acceptance_label_text(AcceptanceLabel::predominantly_acceptable), "predominantly acceptable");
  ASSERT_TRUE(acceptance_level_for(0.6));
  EXPECT_EQ(acceptance_level_for(0.6)->label, AcceptanceLabel::predominantly_acceptable);
  EXPECT_FALSE(acceptance_level_for(0.5));
}

TEST(EnumText, RoundTripsEveryValue) {
  for (auto n : EnumText<Drawback>::names) EXPECT_EQ(to_text(*from_text<Drawback>(n)), n);
  EXPECT_EQ(to_text(Benefit::better_reliability_availability), "Better reliability/availability");
  EXPECT_FALSE(from_text<FurtherAction>("Pray"));
}

}  // namespace
}  // namespace depra
