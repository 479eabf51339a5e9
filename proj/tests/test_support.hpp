#pragma once

// Generators and independent reference computations shared by the unit
// tests and the acceptance suite. Nothing here calls the evaluator.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "depra/model.hpp"
#include "depra/project.hpp"

namespace depra::fixtures {

#ifndef DEPRA_DATA_DIR
#define DEPRA_DATA_DIR "data"
#endif

inline std::string example_project_path() {
  return std::string(DEPRA_DATA_DIR) + "/brake_warning_contact.project";
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

inline int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline FaultTreeModel single_event_model(double fit, double mdt) {
  FaultTreeModel m;
  m.basic_events = {{"e", "event", fit, mdt}};
  m.top = "e";
  return m;
}

// ---------------------------------------------------------------------------
// Random trees for the simulation cross-check. Rates are "scaled": far above
// real FIT values so that a simulation sees enough failures. Leaves directly
// under an OR gate get lambda*MDT in [1e-3, 3e-3], which keeps the rare-event
// error of the OR formula near 0.1 %; leaves under an AND gate get
// [0.05, 0.25] so that AND outputs stay observable. AND gates never feed AND
// gates directly (such nesting is equivalent to one wider gate).

struct RandomTreeBuilder {
  std::mt19937_64& rng;
  FaultTreeModel model;
  int next_leaf = 0;
  int next_gate = 0;

  std::string build(int leaves, GateKind* parent) {
    if (leaves == 1) {
      const bool under_and = parent && *parent == GateKind::and_gate;
      const double x = under_and ? log_uniform(rng, 0.05, 0.25) : log_uniform(rng, 1e-3, 3e-3);
      const double mdt = uniform(rng, 0.5, 2.0);
      BasicEvent e{"e" + std::to_string(next_leaf++), "", x / mdt * 1e9, mdt};
      model.basic_events.push_back(e);
      return e.id;
    }
    GateKind kind = GateKind::or_gate;
    if (!(parent && *parent == GateKind::and_gate) && pick(rng, 0, 1) == 0) kind = GateKind::and_gate;
    const int fan_in = pick(rng, 2, std::min(leaves, 3));
    // Split `leaves` into fan_in positive parts.
    std::vector<int> parts(fan_in, 1);
    for (int extra = leaves - fan_in; extra > 0; --extra) ++parts[pick(rng, 0, fan_in - 1)];
    Gate g{"g" + std::to_string(next_gate++), kind, {}};
    for (int p : parts) g.inputs.push_back(build(p, &kind));
    model.gates.push_back(g);
    return g.id;
  }
};

inline FaultTreeModel random_oracle_tree(std::mt19937_64& rng, int min_leaves = 2, int max_leaves = 6) {
  RandomTreeBuilder b{rng, {}};
  b.model.top = b.build(pick(rng, min_leaves, max_leaves), nullptr);
  return b.model;
}

// ---------------------------------------------------------------------------
// Exact steady state of a tree of independent alternating-renewal leaves, by
// enumerating all 2^n leaf states. Used as the reference for the simulator.

struct ExactSteadyState {
  double unavailability = 0.0;
  double failure_frequency = 0.0;  // top up -> down transitions per hour
};

inline bool top_down(const FlatTree& tree, const std::vector<char>& leaf_down) {
  std::vector<char> down(tree.nodes.size(), 0);
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const FlatNode& n = tree.nodes[i];
    if (n.is_leaf()) {
      down[i] = leaf_down[i];
    } else if (n.kind == NodeKind::and_gate) {
      down[i] = 1;
      for (std::size_t c : n.inputs) down[i] = down[i] && down[c];
    } else {
      down[i] = 0;
      for (std::size_t c : n.inputs) down[i] = down[i] || down[c];
    }
  }
  return down[tree.top] != 0;
}

inline ExactSteadyState exact_steady_state(const FlatTree& tree) {
  std::vector<std::size_t> leaves;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    if (tree.nodes[i].is_leaf()) leaves.push_back(i);
  std::vector<double> lambda(leaves.size()), q(leaves.size());
  for (std::size_t k = 0; k < leaves.size(); ++k) {
    const FlatNode& n = tree.nodes[leaves[k]];
    lambda[k] = n.failure_rate_fit * 1e-9;
    const double mu = 1.0 / n.mdt_hours;
    q[k] = lambda[k] / (lambda[k] + mu);
  }

  ExactSteadyState out;
  std::vector<char> state(tree.nodes.size(), 0);
  const std::uint64_t count = std::uint64_t{1} << leaves.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    double p = 1.0;
    for (std::size_t k = 0; k < leaves.size(); ++k) {
      const bool d = (bits >> k) & 1u;
      state[leaves[k]] = d;
      p *= d ? q[k] : 1.0 - q[k];
    }
    if (top_down(tree, state)) {
      out.unavailability += p;
      continue;
    }
    for (std::size_t k = 0; k < leaves.size(); ++k) {
      if (state[leaves[k]]) continue;
      state[leaves[k]] = 1;
      if (top_down(tree, state)) out.failure_frequency += p * lambda[k];
      state[leaves[k]] = 0;
    }
  }
  return out;
}

/// Horizon per replication that yields about `episodes` top failures in
/// total, capped so the whole run stays within `leaf_event_budget` leaf
/// transitions.
inline double oracle_horizon(const FlatTree& tree, double top_failure_frequency,
                             std::size_t replications, double episodes, double leaf_event_budget) {
  double leaf_rate = 0.0;
  for (const auto& n : tree.nodes)
    if (n.is_leaf()) leaf_rate += 2.0 * n.failure_rate_fit * 1e-9;
  const double total = std::min(episodes / top_failure_frequency, leaf_event_budget / leaf_rate);
  return total / static_cast<double>(replications);
}

// ---------------------------------------------------------------------------
// Random component fault trees: nested definitions with ports, instanced at
// the top level. Always valid.

inline FaultTreeModel random_component_model(std::mt19937_64& rng) {
  FaultTreeModel m;
  const int definitions = pick(rng, 1, 3);
  for (int d = 0; d < definitions; ++d) {
    ComponentDefinition def;
    def.id = "part" + std::to_string(d);
    def.name = "Part " + std::to_string(d);
    def.inports = {"in"};
    const bool use_inport = pick(rng, 0, 3) != 0;
    if (!use_inport) def.unused_inports = {"in"};
    const int events = pick(rng, use_inport ? 1 : 2, 3);
    for (int e = 0; e < events; ++e) {
      def.basic_events.push_back({"f" + std::to_string(e), "failure " + std::to_string(e),
                                  log_uniform(rng, 0.1, 1e4), uniform(rng, 1.0, 100.0)});
    }
    Gate g{"g", pick(rng, 0, 1) ? GateKind::and_gate : GateKind::or_gate, {}};
    for (const auto& e : def.basic_events) g.inputs.push_back(e.id);
    if (use_inport) g.inputs.push_back("in");
    if (d > 0 && pick(rng, 0, 1)) {
      ComponentInstance sub{"sub", "part" + std::to_string(pick(rng, 0, d - 1)), {}};
      sub.inputs["in"] = def.basic_events.front().id;
      def.instances.push_back(sub);
      g.inputs.push_back("sub.out");
    }
    def.gates.push_back(g);
    def.outports["out"] = "g";
    m.components.push_back(std::move(def));
  }

  const int top_events = pick(rng, 1, 3);
  for (int e = 0; e < top_events; ++e)
    m.basic_events.push_back({"x" + std::to_string(e), "", log_uniform(rng, 0.1, 1e4), uniform(rng, 1.0, 100.0)});
  const int instances = pick(rng, 1, 4);
  Gate top{"top", pick(rng, 0, 1) ? GateKind::and_gate : GateKind::or_gate, {}};
  for (int i = 0; i < instances; ++i) {
    ComponentInstance inst{"u" + std::to_string(i), "part" + std::to_string(pick(rng, 0, definitions - 1)), {}};
    const auto& def = m.components[static_cast<std::size_t>(std::stoi(inst.definition.substr(4)))];
    if (def.unused_inports.empty()) {
      // Bind to a top-level event or to an earlier instance's output.
      if (i > 0 && pick(rng, 0, 1)) inst.inputs["in"] = "u" + std::to_string(pick(rng, 0, i - 1)) + ".out";
      else inst.inputs["in"] = "x" + std::to_string(pick(rng, 0, top_events - 1));
    }
    m.instances.push_back(inst);
    top.inputs.push_back(inst.id + ".out");
  }
  top.inputs.push_back("x0");
  m.gates.push_back(top);
  m.top = "top";
  m.mission_time_hours = uniform(rng, 100.0, 1e5);
  return m;
}

// ---------------------------------------------------------------------------
// Random valid projects for serialization round trips.

inline std::string random_text(std::mt19937_64& rng) {
  static const std::vector<std::string> words{
      "brake", "contact", "Überwachung", "sensor", "δ-check", "ブレーキ", "power", "supply",
      "comma,separated", "quote \"q\"", "tab\tstop", "line\nbreak", "🚆", "x"};
  std::string out;
  const int n = pick(rng, 0, 4);
  for (int i = 0; i < n; ++i) out += (i ? " " : "") + words[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(words.size()) - 1))];
  return out;
}

inline double random_real(std::mt19937_64& rng) {
  switch (pick(rng, 0, 3)) {
    case 0: return log_uniform(rng, 1e-12, 1e12);
    case 1: return uniform(rng, 0.0, 1.0);
    case 2: return static_cast<double>(pick(rng, 0, 1000));
    default: return 1.0 - log_uniform(rng, 1e-15, 1e-3);
  }
}

inline TradeoffCriteria random_criteria(std::mt19937_64& rng) {
  static const std::vector<std::string> units{"fit", "per_hour", "mdt_h", "unavailability", "rpn",
                                              "mtbf_h", "mttf_h", "availability", "sff", "sil", "score"};
  TradeoffCriteria c;
  const std::string unit = units[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(units.size()) - 1))];
  c.actual = {random_real(rng), unit};
  c.expected = {random_real(rng), unit};
  const double lower = random_real(rng);
  if (pick(rng, 0, 1)) c.lower_limit = lower;
  if (pick(rng, 0, 1)) c.upper_limit = lower + random_real(rng);
  c.benefit = static_cast<Benefit>(pick(rng, 0, 4));
  c.drawback = static_cast<Drawback>(pick(rng, 0, 6));
  c.cost = static_cast<ImprovementCost>(pick(rng, 0, 4));
  c.time_to_achieve = static_cast<TimeToAchieve>(pick(rng, 0, 4));
  c.further_action = static_cast<FurtherAction>(pick(rng, 0, 3));
  c.acceptance = pick(rng, 0, 1) ? kAcceptanceScale[static_cast<std::size_t>(pick(rng, 0, 5))].value
                                 : uniform(rng, 0.0, 1.0);
  return c;
}

inline Project random_project(std::mt19937_64& rng) {
  Project p;
  p.name = random_text(rng);
  p.description = random_text(rng);
  const int goals = pick(rng, 0, 2);
  for (int i = 0; i < goals; ++i) p.goals.push_back({"G" + std::to_string(i), random_text(rng), random_text(rng)});
  const int scenarios = pick(rng, 1, 2);
  for (int i = 0; i < scenarios; ++i) p.scenarios.push_back({"S" + std::to_string(i), random_text(rng)});
  p.functional_requirements.push_back({"FR0", random_text(rng), "S0"});
  if (pick(rng, 0, 1)) p.hazards.push_back({"H0", random_text(rng), "FR0"});

  const int properties = pick(rng, 1, 5);
  for (int i = 0; i < properties; ++i)
    p.properties.push_back({"prop" + std::to_string(i) + (pick(rng, 0, 1) ? "" : " é"), log_uniform(rng, 1e-3, 1e3)});

  const int trees = pick(rng, 0, 2);
  for (int t = 0; t < trees; ++t) p.fault_trees.emplace("tree" + std::to_string(t), random_component_model(rng));

  const int alternatives = pick(rng, 1, 4);
  for (int a = 0; a < alternatives; ++a) {
    Alternative alt;
    alt.id = "alt-" + std::to_string(a);
    alt.name = random_text(rng);
    alt.kind = pick(rng, 0, 1) ? AlternativeKind::measure : AlternativeKind::design_alternative;
    if (trees > 0 && pick(rng, 0, 2)) alt.tree = "tree" + std::to_string(pick(rng, 0, trees - 1));
    if (pick(rng, 0, 2) == 0) alt.sil = "SIL " + std::to_string(pick(rng, 1, 4));
    for (const auto& prop : p.properties)
      if (pick(rng, 0, 3)) alt.evaluations[prop.name] = random_criteria(rng);
    p.alternatives.push_back(std::move(alt));
  }

  const int fmeca = pick(rng, 0, 2);
  for (int i = 0; i < fmeca; ++i) {
    FmecaEntry e{"fm" + std::to_string(i), random_text(rng), random_text(rng), pick(rng, 1, 10),
                 pick(rng, 1, 10), pick(rng, 1, 10), pick(rng, 0, 1) == 1, {}};
    const int measures = pick(rng, 0, 2);
    for (int k = 0; k < measures; ++k) {
      RatedMeasure m{random_text(rng), {p.alternatives.front().id}, pick(rng, 1, 10), pick(rng, 1, 10),
                     pick(rng, 1, 10), std::nullopt};
      if (pick(rng, 0, 1)) m.further_action = random_text(rng);
      e.measures.push_back(std::move(m));
    }
    p.fmeca.push_back(std::move(e));
  }
  const int fmeda = pick(rng, 0, 2);
  for (int i = 0; i < fmeda; ++i) {
    p.fmeda.push_back({"fd" + std::to_string(i), random_text(rng), random_text(rng),
                       {p.alternatives.back().id}, log_uniform(rng, 1e-3, 1e4), uniform(rng, 0.0, 1.0),
                       pick(rng, 0, 1) ? 0.0 : log_uniform(rng, 1e-3, 1e4)});
  }
  return p;
}

}  // namespace depra::fixtures
