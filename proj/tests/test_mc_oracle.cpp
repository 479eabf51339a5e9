#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "depra/error.hpp"
#include "depra/mc_oracle.hpp"
#include "test_support.hpp"

namespace depra {
namespace {

FlatTree scaled_single_leaf() {
  // lambda = 1e-2 /h, MDT = 5 h.
  return flatten(fixtures::single_event_model(1e7, 5.0));
}

TEST(Simulate, ParallelMatchesSerialBitForBit) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) {
    const FlatTree t = flatten(fixtures::random_oracle_tree(rng));
    const SimEstimate a = simulate(t, 2e4, 99 + i, SimOptions{12});
    const SimEstimate b = simulate_serial(t, 2e4, 99 + i, SimOptions{12});
    EXPECT_EQ(a, b) << "case " << i;
  }
}

TEST(Simulate, SameSeedSameResultOtherSeedDiffers) {
  const FlatTree t = scaled_single_leaf();
  EXPECT_EQ(simulate(t, 1e5, 5), simulate(t, 1e5, 5));
  EXPECT_NE(simulate(t, 1e5, 5).unavailability_hat, simulate(t, 1e5, 6).unavailability_hat);
  EXPECT_EQ(simulate_replication(t, 1e5, 5, 3), simulate_replication(t, 1e5, 5, 3));
}

TEST(Simulate, SingleLeafMatchesTheRenewalFormula) {
  const FlatTree t = scaled_single_leaf();
  const SimEstimate e = simulate(t, 1e6, 42, SimOptions{32});
  const double x = 1e-2 * 5.0;
  EXPECT_LE(std::abs(e.unavailability_hat - x / (1 + x)), 3 * e.unavailability_stderr);
  EXPECT_LE(std::abs(e.failure_frequency_hat - 1.0 / (100.0 + 5.0)), 3 * e.failure_frequency_stderr);
  EXPECT_EQ(e.samples, 32u);
  EXPECT_GT(e.leaf_events, 0u);
  EXPECT_FALSE(e.no_events);
}

TEST(Simulate, AgreesWithExactStateEnumeration) {
  // The enumeration is exact for independent leaves, so no rare-event
  // restriction applies here: use large unavailabilities.
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    FaultTreeModel m = fixtures::random_oracle_tree(rng, 2, 5);
    for (auto& e : m.basic_events) e.failure_rate_fit *= 3.0;
    const FlatTree t = flatten(m);
    const auto exact = fixtures::exact_steady_state(t);
    const double horizon = fixtures::oracle_horizon(t, exact.failure_frequency, 32, 4000, 4e6);
    const SimEstimate e = simulate(t, horizon, 1000 + i, SimOptions{32});
    EXPECT_LE(std::abs(e.unavailability_hat - exact.unavailability), 4 * e.unavailability_stderr)
        << "case " << i << " exact " << exact.unavailability << " sim " << e.unavailability_hat;
    EXPECT_LE(std::abs(e.failure_frequency_hat - exact.failure_frequency),
              4 * e.failure_frequency_stderr)
        << "case " << i;
  }
}

TEST(Simulate, ShortHorizonReportsNoEvents) {
  const FlatTree t = flatten(fixtures::single_event_model(1.0, 24.0));
  const SimEstimate e = simulate(t, 1.0, 1, SimOptions{4});
  EXPECT_TRUE(e.no_events);
  EXPECT_EQ(e.leaf_events, 0u);
}

TEST(Simulate, RejectsBadInputs) {
  EXPECT_THROW(simulate(FlatTree{}, 10.0, 1), Error);
  EXPECT_THROW(simulate(scaled_single_leaf(), 0.0, 1), Error);
  EXPECT_THROW(simulate(scaled_single_leaf(), 10.0, 1, SimOptions{0}), Error);
}

TEST(Oracle, ReportsBothSidesAndTheVerdict) {
  const FlatTree t = scaled_single_leaf();
  const OracleReport r = compare_to_analytic(t, 1e6, 7, 3.0, SimOptions{32});
  EXPECT_DOUBLE_EQ(r.analytic.unavailability, 0.05 / 1.05);
  EXPECT_EQ(r.k_sigma, 3.0);
  EXPECT_DOUBLE_EQ(r.deviation, std::abs(r.analytic.unavailability - r.estimate.unavailability_hat));
  EXPECT_EQ(r.pass, r.deviation <= 3.0 * r.estimate.unavailability_stderr);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.frequency_within);
  EXPECT_THROW(compare_to_analytic(t, 1e6, 7, 0.0), Error);
}

TEST(Oracle, WithinKSigma) {
  EXPECT_TRUE(within_k_sigma(1.0, 1.2, 0.1, 3.0));
  EXPECT_FALSE(within_k_sigma(1.0, 1.4, 0.1, 3.0));
  EXPECT_FALSE(within_k_sigma(1.0, 0.0, 0.0, 3.0));
}

}  // namespace
}  // namespace depra
