#include <gtest/gtest.h>

#include <random>

#include "depra/error.hpp"
#include "depra/risk_tables.hpp"
#include "test_support.hpp"

namespace depra {
namespace {

TEST(Rpn, ProductOfRatings) {
  EXPECT_EQ(compute_rpn(8, 1, 7), 56);
  EXPECT_EQ(compute_rpn(8, 1, 2), 16);
  EXPECT_EQ(compute_rpn(1, 1, 1), 1);
  EXPECT_EQ(compute_rpn(10, 10, 10), 1000);
}

TEST(Rpn, RatingsOutsideOneToTenAreRejected) {
  EXPECT_THROW(compute_rpn(0, 5, 5), Error);
  EXPECT_THROW(compute_rpn(5, 11, 5), Error);
  EXPECT_THROW(compute_rpn(5, 5, -1), Error);
}

TEST(Rpn, MonotoneInEveryRating) {
  for (int s = 1; s <= 10; ++s)
    for (int o = 1; o <= 10; ++o)
      for (int d = 1; d <= 10; ++d) {
        const int base = compute_rpn(s, o, d);
        if (s < 10) EXPECT_GT(compute_rpn(s + 1, o, d), base);
        if (o < 10) EXPECT_GT(compute_rpn(s, o + 1, d), base);
        if (d < 10) EXPECT_GT(compute_rpn(s, o, d + 1), base);
      }
}

TEST(RatedMeasure, UsesItsOwnRatings) {
  RatedMeasure m{"Monitoring", {}, 8, 1, 2, std::nullopt};
  EXPECT_EQ(m.rpn(), 16);
}

TEST(Fmeda, SplitsByCoverage) {
  const FmedaSplit half = fmeda_split(10.0, 0.5);
  EXPECT_EQ(half.dangerous_detected_fit, 5.0);
  EXPECT_EQ(half.dangerous_undetected_fit, 5.0);
  const FmedaSplit ninety = fmeda_split(10.0, 0.9);
  EXPECT_EQ(ninety.dangerous_detected_fit, 9.0);
  EXPECT_EQ(ninety.dangerous_undetected_fit, 1.0);
  const FmedaSplit none = fmeda_split(10.0, 0.0);
  EXPECT_EQ(none.dangerous_detected_fit, 0.0);
  EXPECT_EQ(none.dangerous_undetected_fit, 10.0);
}

TEST(Fmeda, RejectsOutOfRangeInputs) {
  EXPECT_THROW(fmeda_split(10.0, 1.5), Error);
  EXPECT_THROW(fmeda_split(-1.0, 0.5), Error);
}

TEST(FmedaProperty, SplitConservesTheRate) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100000; ++i) {
    const double lambda = fixtures::log_uniform(rng, 1e-6, 1e9);
    const double dc = fixtures::uniform(rng, 0.0, 1.0);
    const FmedaSplit s = fmeda_split(lambda, dc);
    EXPECT_EQ(s.dangerous_detected_fit + s.dangerous_undetected_fit, lambda) << lambda << " " << dc;
    EXPECT_GE(s.dangerous_undetected_fit, 0.0);
  }
}

TEST(Sff, SafeAndDetectedOverTotal) {
  EXPECT_DOUBLE_EQ(compute_sff(0.0, 9.0, 1.0), 0.9);
  EXPECT_DOUBLE_EQ(compute_sff(10.0, 5.0, 5.0), 0.75);
  EXPECT_THROW(compute_sff(0.0, 0.0, 0.0), Error);
  FmedaEntry e{"bwc", "Brake warning contact", "Monitoring", {}, 10.0, 0.9, 0.0};
  EXPECT_DOUBLE_EQ(e.sff(), 0.9);
}

TEST(SffProperty, StaysInUnitInterval) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20000; ++i) {
    const double s = fixtures::pick(rng, 0, 3) == 0 ? 0.0 : fixtures::log_uniform(rng, 1e-3, 1e6);
    const double dd = fixtures::log_uniform(rng, 1e-3, 1e6);
    const double du = fixtures::pick(rng, 0, 3) == 0 ? 0.0 : fixtures::log_uniform(rng, 1e-3, 1e6);
    const double sff = compute_sff(s, dd, du);
    EXPECT_GE(sff, 0.0);
    EXPECT_LE(sff, 1.0);
  }
}

TEST(DerivedLeaves, NamedAfterTheElement) {
  FmedaEntry e{"row", "Brake warning contact", "Monitoring", {}, 10.0, 0.9, 0.0};
  const DerivedLeaves l = derive_cft_leaves(e, 24.0);
  EXPECT_EQ(l.undetected.id, "Brake_warning_contact_du");
  EXPECT_EQ(l.detected.id, "Brake_warning_contact_dd");
  EXPECT_EQ(l.undetected.failure_rate_fit, 1.0);
  EXPECT_EQ(l.detected.failure_rate_fit, 9.0);
  EXPECT_EQ(l.detected.mdt_hours, 24.0);
  EXPECT_TRUE(l.warnings.empty());

  FaultTreeModel m;
  m.basic_events = {l.undetected, l.detected};
  m.gates = {{"top", GateKind::or_gate, {l.undetected.id, l.detected.id}}};
  m.top = "top";
  EXPECT_TRUE(validate_model(m).ok());
}

TEST(DerivedLeaves, ZeroCoverageWarnsAboutTheEmptyLeaf) {
  FmedaEntry e{"row", "relay", "none", {}, 10.0, 0.0, 0.0};
  const DerivedLeaves l = derive_cft_leaves(e, 24.0);
  ASSERT_EQ(l.warnings.size(), 1u);
  EXPECT_EQ(l.warnings[0].kind, "zero_rate_leaf");
  EXPECT_EQ(l.warnings[0].subject, "relay_dd");
}

}  // namespace
}  // namespace depra
