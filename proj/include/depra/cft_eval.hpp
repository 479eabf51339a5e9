#pragma once

// Steady-state RAMS evaluation of a flattened fault tree.
//
// Every node is summarised by an equivalent repairable item: a failure rate
// while up (lambda), a mean down time and the steady-state unavailability
//
//     U = lambda * MDT / (1 + lambda * MDT),    A = MTBF / (MTBF + MDT),
//
// with MTBF = 1 / lambda. Gates combine their inputs as
//
//     OR:  lambda = sum(lambda_i),  MDT = sum(lambda_i * MDT_i) / sum(lambda_i)
//     AND: U = prod(U_i),           1 / MDT = sum(1 / MDT_i)
//
// and an AND's lambda is chosen so the U/MDT relation above holds exactly,
// i.e. lambda = U / (MDT * (1 - U)). Its failure frequency U / MDT is exact
// for independent inputs with exponential repair.

#include <map>
#include <span>
#include <string>

#include "depra/model.hpp"

namespace depra {

struct RamsResult {
  double lambda_per_hour = 0.0;
  double fit = 0.0;
  double mtbf_hours = 0.0;  // 1/lambda, +inf when lambda == 0
  double mttf_hours = 0.0;  // mtbf - mdt
  double mdt_hours = 0.0;
  double availability = 1.0;
  double unavailability = 0.0;
  double mission_time_hours = kDefaultMissionTimeHours;
  double mission_unreliability = 0.0;  // 1 - exp(-lambda * T)

  /// Expected failures per calendar hour, lambda * A = 1 / (MTBF + MDT).
  double failure_frequency() const { return lambda_per_hour * availability; }

  bool operator==(const RamsResult&) const = default;
};

/// Fills the derived fields of a result from (lambda, MDT).
RamsResult make_rams(double lambda_per_hour, double mdt_hours, double mission_time_hours);

RamsResult eval_basic_event(const BasicEvent& event, double mission_time_hours);
RamsResult eval_basic_event(double failure_rate_fit, double mdt_hours, double mission_time_hours);

RamsResult eval_or(std::span<const RamsResult> children);
RamsResult eval_and(std::span<const RamsResult> children);

using TreeResults = std::map<std::string, RamsResult>;

/// Evaluates every node bottom-up; deterministic for a given tree.
TreeResults eval_tree(const FlatTree& tree, double mission_time_hours);

/// Result of the top node only.
RamsResult eval_top(const FlatTree& tree, double mission_time_hours);

}  // namespace depra
