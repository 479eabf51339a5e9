#pragma once

// Component fault tree model: reusable component definitions with ports,
// instanced into a tree and flattened into plain basic events and gates.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace depra {

inline constexpr double kFitPerHour = 1e-9;
inline constexpr double kDefaultMissionTimeHours = 8760.0;

/// 1 FIT is one failure per 1e9 hours.
double fit_to_per_hour(double fit);
double per_hour_to_fit(double per_hour);

struct BasicEvent {
  std::string id;
  std::string name;
  double failure_rate_fit = 0.0;
  double mdt_hours = 0.0;

  bool operator==(const BasicEvent&) const = default;
};

enum class GateKind { and_gate, or_gate };

std::string_view gate_kind_name(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view text);

// Gate inputs are node references resolved within the enclosing scope:
// "name" names a basic event, gate or inport; "instance.port" names an
// outport of a component instance.
struct Gate {
  std::string id;
  GateKind kind = GateKind::or_gate;
  std::vector<std::string> inputs;

  bool operator==(const Gate&) const = default;
};

struct ComponentInstance {
  std::string id;
  std::string definition;
  std::map<std::string, std::string> inputs;  // inport -> reference

  bool operator==(const ComponentInstance&) const = default;
};

struct ComponentDefinition {
  std::string id;
  std::string name;
  std::vector<std::string> inports;
  std::vector<std::string> unused_inports;
  std::map<std::string, std::string> outports;  // outport -> reference
  std::vector<BasicEvent> basic_events;
  std::vector<Gate> gates;
  std::vector<ComponentInstance> instances;

  bool operator==(const ComponentDefinition&) const = default;
};

struct FaultTreeModel {
  std::vector<ComponentDefinition> components;
  std::vector<BasicEvent> basic_events;
  std::vector<Gate> gates;
  std::vector<ComponentInstance> instances;
  std::string top;
  double mission_time_hours = kDefaultMissionTimeHours;

  bool operator==(const FaultTreeModel&) const = default;
};

enum class NodeKind { basic_event, and_gate, or_gate };

struct FlatNode {
  std::string id;  // instance-qualified, segments joined with '/'
  NodeKind kind = NodeKind::basic_event;
  std::string name;
  double failure_rate_fit = 0.0;
  double mdt_hours = 0.0;
  std::vector<std::size_t> inputs;  // indices into FlatTree::nodes

  bool is_leaf() const { return kind == NodeKind::basic_event; }
  bool operator==(const FlatNode&) const = default;
};

// Nodes are stored children-before-parents, so a forward pass is a valid
// bottom-up evaluation order.
struct FlatTree {
  std::vector<FlatNode> nodes;
  std::size_t top = 0;

  const FlatNode& top_node() const { return nodes.at(top); }
  std::optional<std::size_t> find(std::string_view id) const;
  std::size_t leaf_count() const;

  bool operator==(const FlatTree&) const = default;
};

struct Issue {
  std::string kind;     // e.g. "cycle", "non_positive_rate", "unbound_inport"
  std::string subject;  // id of the offending element
  std::string message;

  bool operator==(const Issue&) const = default;
};

struct ValidationReport {
  std::vector<Issue> violations;
  std::vector<Issue> warnings;

  bool ok() const { return violations.empty(); }
  bool has_violation(std::string_view kind) const;
  bool has_warning(std::string_view kind) const;
};

ValidationReport validate_model(const FaultTreeModel& model);

/// Expands every component instance and eliminates ports. Throws
/// Error(structural) naming the first violation when the model is not
/// evaluable; succeeds exactly when validate_model reports no violations.
FlatTree flatten(const FaultTreeModel& model);

/// Re-expresses a flat tree as a component-free model (qualified ids become
/// top-level ids), so flatten(as_model(flatten(m))) == flatten(m).
FaultTreeModel as_model(const FlatTree& tree,
                        double mission_time_hours = kDefaultMissionTimeHours);

}  // namespace depra
