#pragma once

// Monte Carlo simulation of a repairable fault tree. Each basic event is an
// alternating renewal process with exponential up times (mean 1/lambda) and
// exponential repair times (mean MDT), started from its stationary state;
// the top event state is re-evaluated after every leaf transition.
//
// Replications are independent. Replication r draws from a stream seeded by
// (seed, r) only, so the OpenMP kernel and the serial reference produce
// bit-identical estimates.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "depra/cft_eval.hpp"
#include "depra/model.hpp"

namespace depra {

struct SimOptions {
  std::size_t replications = 16;
};

struct ReplicationResult {
  double down_hours = 0.0;         // time the top event spent failed
  std::uint64_t top_failures = 0;  // up -> down transitions of the top event
  std::uint64_t leaf_events = 0;

  bool operator==(const ReplicationResult&) const = default;
};

struct SimEstimate {
  double unavailability_hat = 0.0;
  double unavailability_stderr = 0.0;
  double failure_frequency_hat = 0.0;  // top failures per hour
  double failure_frequency_stderr = 0.0;
  double horizon_hours = 0.0;  // simulated time per replication
  std::uint64_t seed = 0;
  std::size_t samples = 0;  // replications
  std::uint64_t leaf_events = 0;
  bool no_events = false;  // horizon too short to observe any transition

  bool operator==(const SimEstimate&) const = default;
};

ReplicationResult simulate_replication(const FlatTree& tree, double horizon_hours,
                                       std::uint64_t seed, std::size_t replication);

/// Replications run in parallel with OpenMP.
SimEstimate simulate(const FlatTree& tree, double horizon_hours, std::uint64_t seed,
                     SimOptions options = {});

/// Single-threaded reference for simulate().
SimEstimate simulate_serial(const FlatTree& tree, double horizon_hours, std::uint64_t seed,
                            SimOptions options = {});

struct OracleReport {
  RamsResult analytic;
  SimEstimate estimate;
  double k_sigma = 3.0;
  double deviation = 0.0;  // |U_analytic - U_hat|
  bool pass = false;       // deviation <= k_sigma * stderr
  bool frequency_within = false;  // same test on analytic failure_frequency()

  bool operator==(const OracleReport&) const = default;
};

OracleReport compare_to_analytic(const FlatTree& tree, double horizon_hours, std::uint64_t seed,
                                 double k_sigma, SimOptions options = {});

/// Pass/fail rule of compare_to_analytic for an arbitrary analytic value.
bool within_k_sigma(double analytic, double estimate, double stderr_, double k_sigma);

}  // namespace depra
