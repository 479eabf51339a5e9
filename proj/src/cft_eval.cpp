#include "depra/cft_eval.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "depra/error.hpp"

namespace depra {

RamsResult make_rams(double lambda_per_hour, double mdt_hours, double mission_time_hours) {
  RamsResult r;
  r.lambda_per_hour = lambda_per_hour;
  r.fit = lambda_per_hour * 1e9;
  r.mdt_hours = mdt_hours;
  r.mission_time_hours = mission_time_hours;

  const double x = lambda_per_hour * mdt_hours;
  r.unavailability = x / (1.0 + x);
  r.availability = 1.0 / (1.0 + x);
  if (lambda_per_hour > 0.0) {
    r.mtbf_hours = 1.0 / lambda_per_hour;
    r.mttf_hours = r.mtbf_hours - mdt_hours;
  } else {
    r.mtbf_hours = std::numeric_limits<double>::infinity();
    r.mttf_hours = std::numeric_limits<double>::infinity();
  }
  r.mission_unreliability = -std::expm1(-lambda_per_hour * mission_time_hours);
  return r;
}

RamsResult eval_basic_event(double failure_rate_fit, double mdt_hours, double mission_time_hours) {
  if (!(mdt_hours > 0.0)) fail(ErrorCode::domain, "MDT must be > 0 h");
  return make_rams(fit_to_per_hour(failure_rate_fit), mdt_hours, mission_time_hours);
}

RamsResult eval_basic_event(const BasicEvent& event, double mission_time_hours) {
  return eval_basic_event(event.failure_rate_fit, event.mdt_hours, mission_time_hours);
}

RamsResult eval_or(std::span<const RamsResult> children) {
  if (children.size() < 2) fail(ErrorCode::domain, "OR gate needs at least 2 inputs");
  double lambda = 0.0;
  double weighted_mdt = 0.0;
  double mdt_sum = 0.0;
  for (const auto& c : children) {
    lambda += c.lambda_per_hour;
    weighted_mdt += c.lambda_per_hour * c.mdt_hours;
    mdt_sum += c.mdt_hours;
  }
  // No input can fail: MDT is never observed, report the plain mean.
  const double mdt = lambda > 0.0 ? weighted_mdt / lambda
                                  : mdt_sum / static_cast<double>(children.size());
  return make_rams(lambda, mdt, children.front().mission_time_hours);
}

RamsResult eval_and(std::span<const RamsResult> children) {
  if (children.size() < 2) fail(ErrorCode::domain, "AND gate needs at least 2 inputs");
  double unavailability = 1.0;
  double repair_rate = 0.0;
  for (const auto& c : children) {
    unavailability *= c.unavailability;
    repair_rate += 1.0 / c.mdt_hours;
  }
  const double mdt = 1.0 / repair_rate;
  const double lambda = unavailability / (mdt * (1.0 - unavailability));
  RamsResult r = make_rams(lambda, mdt, children.front().mission_time_hours);
  // Keep the product itself rather than the value re-derived from lambda.
  r.unavailability = unavailability;
  r.availability = 1.0 - unavailability;
  return r;
}

namespace {

std::vector<RamsResult> eval_nodes(const FlatTree& tree, double mission_time_hours) {
  if (tree.nodes.empty()) fail(ErrorCode::structural, "cannot evaluate an empty tree");
  if (tree.top >= tree.nodes.size()) fail(ErrorCode::structural, "top node index out of range");

  std::vector<RamsResult> results(tree.nodes.size());
  std::vector<RamsResult> inputs;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const FlatNode& n = tree.nodes[i];
    if (n.is_leaf()) {
      results[i] = eval_basic_event(n.failure_rate_fit, n.mdt_hours, mission_time_hours);
      continue;
    }
    inputs.clear();
    for (std::size_t c : n.inputs) {
      if (c >= i) fail(ErrorCode::structural, "node '" + n.id + "' is not in bottom-up order");
      inputs.push_back(results[c]);
    }
    results[i] = n.kind == NodeKind::and_gate ? eval_and(inputs) : eval_or(inputs);
  }
  return results;
}

}  // namespace

TreeResults eval_tree(const FlatTree& tree, double mission_time_hours) {
  const auto results = eval_nodes(tree, mission_time_hours);
  TreeResults out;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) out.emplace(tree.nodes[i].id, results[i]);
  return out;
}

RamsResult eval_top(const FlatTree& tree, double mission_time_hours) {
  return eval_nodes(tree, mission_time_hours)[tree.top];
}

}  // namespace depra
