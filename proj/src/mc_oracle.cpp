#include "depra/mc_oracle.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "depra/error.hpp"

namespace depra {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Stream {
 public:
  Stream(std::uint64_t seed, std::size_t replication)
      : engine_(splitmix64(splitmix64(seed) ^ splitmix64(replication + 0x5851f42d4c957f2dULL))) {}

  // Uniform in [0, 1) from the top 53 bits; independent of the standard
  // library's distribution implementations.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double exponential(double rate) {
    if (rate <= 0.0) return std::numeric_limits<double>::infinity();
    return -std::log1p(-uniform()) / rate;
  }

 private:
  std::mt19937_64 engine_;
};

void check_inputs(const FlatTree& tree, double horizon_hours) {
  if (tree.nodes.empty() || tree.leaf_count() == 0)
    fail(ErrorCode::structural, "cannot simulate a tree without basic events");
  if (tree.top >= tree.nodes.size()) fail(ErrorCode::structural, "top node index out of range");
  if (!(horizon_hours > 0.0) || !std::isfinite(horizon_hours))
    fail(ErrorCode::domain, "simulation horizon must be > 0 h");
  for (const auto& n : tree.nodes) {
    if (n.is_leaf() && (!(n.failure_rate_fit >= 0.0) || !(n.mdt_hours > 0.0)))
      fail(ErrorCode::domain, "leaf '" + n.id + "' needs rate >= 0 and MDT > 0");
  }
}

bool evaluate_state(const FlatTree& tree, const std::vector<char>& leaf_down,
                    std::vector<char>& node_down) {
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const FlatNode& n = tree.nodes[i];
    switch (n.kind) {
      case NodeKind::basic_event:
        node_down[i] = leaf_down[i];
        break;
      case NodeKind::and_gate: {
        char down = 1;
        for (std::size_t c : n.inputs) down = down && node_down[c];
        node_down[i] = down;
        break;
      }
      case NodeKind::or_gate: {
        char down = 0;
        for (std::size_t c : n.inputs) down = down || node_down[c];
        node_down[i] = down;
        break;
      }
    }
  }
  return node_down[tree.top] != 0;
}

double sample_stderr(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
}

SimEstimate summarize(const std::vector<ReplicationResult>& runs, double horizon_hours,
                      std::uint64_t seed) {
  SimEstimate est;
  est.horizon_hours = horizon_hours;
  est.seed = seed;
  est.samples = runs.size();

  std::vector<double> u, f;
  for (const auto& r : runs) {
    u.push_back(r.down_hours / horizon_hours);
    f.push_back(static_cast<double>(r.top_failures) / horizon_hours);
    est.leaf_events += r.leaf_events;
  }
  double su = 0.0, sf = 0.0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    su += u[i];
    sf += f[i];
  }
  const double n = static_cast<double>(runs.size());
  est.unavailability_hat = su / n;
  est.failure_frequency_hat = sf / n;
  est.unavailability_stderr = sample_stderr(u, est.unavailability_hat);
  est.failure_frequency_stderr = sample_stderr(f, est.failure_frequency_hat);
  est.no_events = est.leaf_events == 0;
  return est;
}

std::size_t replication_count(const SimOptions& options) {
  if (options.replications == 0) fail(ErrorCode::domain, "at least one replication is required");
  return options.replications;
}

}  // namespace

ReplicationResult simulate_replication(const FlatTree& tree, double horizon_hours,
                                       std::uint64_t seed, std::size_t replication) {
  check_inputs(tree, horizon_hours);
  Stream rng(seed, replication);

  const std::size_t n = tree.nodes.size();
  std::vector<std::size_t> leaves;
  std::vector<double> rate(n, 0.0);
  std::vector<double> repair(n, 0.0);
  std::vector<char> leaf_down(n, 0);
  std::vector<double> next(n, std::numeric_limits<double>::infinity());

  for (std::size_t i = 0; i < n; ++i) {
    const FlatNode& node = tree.nodes[i];
    if (!node.is_leaf()) continue;
    leaves.push_back(i);
    rate[i] = node.failure_rate_fit * kFitPerHour;
    repair[i] = 1.0 / node.mdt_hours;
    // Stationary start; residual times are exponential again by memorylessness.
    const double x = rate[i] * node.mdt_hours;
    leaf_down[i] = rng.uniform() < x / (1.0 + x);
    next[i] = leaf_down[i] ? rng.exponential(repair[i]) : rng.exponential(rate[i]);
  }

  std::vector<char> node_down(n, 0);
  bool top_down = evaluate_state(tree, leaf_down, node_down);

  ReplicationResult out;
  double now = 0.0;
  for (;;) {
    std::size_t which = leaves.front();
    for (std::size_t i : leaves)
      if (next[i] < next[which]) which = i;
    const double t = next[which];
    if (!(t < horizon_hours)) {
      if (top_down) out.down_hours += horizon_hours - now;
      break;
    }
    if (top_down) out.down_hours += t - now;
    now = t;

    ++out.leaf_events;
    leaf_down[which] = !leaf_down[which];
    next[which] = now + (leaf_down[which] ? rng.exponential(repair[which])
                                          : rng.exponential(rate[which]));
    const bool was_down = top_down;
    top_down = evaluate_state(tree, leaf_down, node_down);
    if (top_down && !was_down) ++out.top_failures;
  }
  return out;
}

SimEstimate simulate(const FlatTree& tree, double horizon_hours, std::uint64_t seed,
                     SimOptions options) {
  check_inputs(tree, horizon_hours);
  const auto count = static_cast<std::ptrdiff_t>(replication_count(options));
  std::vector<ReplicationResult> runs(static_cast<std::size_t>(count));

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t r = 0; r < count; ++r) {
    runs[static_cast<std::size_t>(r)] =
        simulate_replication(tree, horizon_hours, seed, static_cast<std::size_t>(r));
  }
  return summarize(runs, horizon_hours, seed);
}

SimEstimate simulate_serial(const FlatTree& tree, double horizon_hours, std::uint64_t seed,
                            SimOptions options) {
  check_inputs(tree, horizon_hours);
  const std::size_t count = replication_count(options);
  std::vector<ReplicationResult> runs;
  runs.reserve(count);
  for (std::size_t r = 0; r < count; ++r)
    runs.push_back(simulate_replication(tree, horizon_hours, seed, r));
  return summarize(runs, horizon_hours, seed);
}

bool within_k_sigma(double analytic, double estimate, double stderr_, double k_sigma) {
  return std::abs(analytic - estimate) <= k_sigma * stderr_;
}

OracleReport compare_to_analytic(const FlatTree& tree, double horizon_hours, std::uint64_t seed,
                                 double k_sigma, SimOptions options) {
  if (!(k_sigma > 0.0)) fail(ErrorCode::domain, "k_sigma must be > 0");
  OracleReport report;
  report.k_sigma = k_sigma;
  report.analytic = eval_top(tree, kDefaultMissionTimeHours);
  report.estimate = simulate(tree, horizon_hours, seed, options);
  report.deviation = std::abs(report.analytic.unavailability - report.estimate.unavailability_hat);
  report.pass = within_k_sigma(report.analytic.unavailability, report.estimate.unavailability_hat,
                               report.estimate.unavailability_stderr, k_sigma);
  report.frequency_within =
      within_k_sigma(report.analytic.failure_frequency(), report.estimate.failure_frequency_hat,
                     report.estimate.failure_frequency_stderr, k_sigma);
  return report;
}

}  // namespace depra
