#include "depra/model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "depra/error.hpp"

namespace depra {

double fit_to_per_hour(double fit) {
  if (!(fit >= 0.0) || !std::isfinite(fit)) {
    std::ostringstream msg;
    msg << "failure rate must be a finite value >= 0 FIT, got " << fit;
    fail(ErrorCode::domain, msg.str());
  }
  return fit / 1e9;
}

double per_hour_to_fit(double per_hour) {
  if (!(per_hour >= 0.0) || !std::isfinite(per_hour)) {
    std::ostringstream msg;
    msg << "failure rate must be a finite value >= 0 per hour, got " << per_hour;
    fail(ErrorCode::domain, msg.str());
  }
  const double fit = per_hour * 1e9;
  // Prefer the neighbour that maps back onto the input.
  for (double candidate : {fit, std::nextafter(fit, HUGE_VAL), std::nextafter(fit, -HUGE_VAL)}) {
    if (candidate / 1e9 == per_hour) return candidate;
  }
  return fit;
}

std::string_view gate_kind_name(GateKind kind) {
  return kind == GateKind::and_gate ? "AND" : "OR";
}

std::optional<GateKind> parse_gate_kind(std::string_view text) {
  if (text == "AND") return GateKind::and_gate;
  if (text == "OR") return GateKind::or_gate;
  return std::nullopt;
}

std::optional<std::size_t> FlatTree::find(std::string_view id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t FlatTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const FlatNode& n) { return n.is_leaf(); }));
}

bool ValidationReport::has_violation(std::string_view kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Issue& i) { return i.kind == kind; });
}

bool ValidationReport::has_warning(std::string_view kind) const {
  return std::any_of(warnings.begin(), warnings.end(),
                     [&](const Issue& i) { return i.kind == kind; });
}

namespace {

// Uniform view over the top level of a model and the body of a definition.
struct Scope {
  std::string label;  // "model" or "component 'x'"
  bool top_level = false;
  const std::vector<std::string>* inports = nullptr;
  const std::vector<std::string>* unused_inports = nullptr;
  const std::map<std::string, std::string>* outports = nullptr;
  const std::vector<BasicEvent>* basic_events = nullptr;
  const std::vector<Gate>* gates = nullptr;
  const std::vector<ComponentInstance>* instances = nullptr;

  const BasicEvent* event(std::string_view id) const {
    for (const auto& e : *basic_events)
      if (e.id == id) return &e;
    return nullptr;
  }
  const Gate* gate(std::string_view id) const {
    for (const auto& g : *gates)
      if (g.id == id) return &g;
    return nullptr;
  }
  const ComponentInstance* instance(std::string_view id) const {
    for (const auto& i : *instances)
      if (i.id == id) return &i;
    return nullptr;
  }
  bool has_inport(std::string_view id) const {
    return inports && std::find(inports->begin(), inports->end(), id) != inports->end();
  }
};

Scope top_scope(const FaultTreeModel& m) {
  Scope s;
  s.label = "model";
  s.top_level = true;
  s.basic_events = &m.basic_events;
  s.gates = &m.gates;
  s.instances = &m.instances;
  return s;
}

Scope definition_scope(const ComponentDefinition& d) {
  Scope s;
  s.label = "component '" + d.id + "'";
  s.inports = &d.inports;
  s.unused_inports = &d.unused_inports;
  s.outports = &d.outports;
  s.basic_events = &d.basic_events;
  s.gates = &d.gates;
  s.instances = &d.instances;
  return s;
}

using DefinitionMap = std::map<std::string, const ComponentDefinition*, std::less<>>;

struct PortRef {
  std::string instance;
  std::string port;
};

std::optional<PortRef> split_port_ref(std::string_view ref) {
  const auto dot = ref.find('.');
  if (dot == std::string_view::npos) return std::nullopt;
  return PortRef{std::string(ref.substr(0, dot)), std::string(ref.substr(dot + 1))};
}

bool valid_id(std::string_view id, bool allow_slash) {
  if (id.empty()) return false;
  if (id.find('.') != std::string_view::npos) return false;
  if (!allow_slash && id.find('/') != std::string_view::npos) return false;
  return true;
}

class Checker {
 public:
  Checker(const DefinitionMap& defs, ValidationReport& report) : defs_(defs), report_(report) {}

  void check_scope(const Scope& scope) {
    check_ids(scope);
    for (const auto& e : *scope.basic_events) check_event(scope, e);
    for (const auto& g : *scope.gates) check_gate(scope, g);
    for (const auto& inst : *scope.instances) check_instance(scope, inst);
    if (scope.outports) {
      if (scope.outports->empty())
        violation("missing_outport", scope.label, scope.label + " declares no outport");
      for (const auto& [port, ref] : *scope.outports)
        check_ref(scope, ref, scope.label + " outport '" + port + "'");
    }
    if (scope.inports) check_inport_usage(scope);
    check_local_cycles(scope);
  }

  void check_definition_recursion() {
    std::map<std::string, int, std::less<>> color;  // 0 new, 1 active, 2 done
    std::function<void(const ComponentDefinition&)> visit = [&](const ComponentDefinition& d) {
      color[d.id] = 1;
      for (const auto& inst : d.instances) {
        auto it = defs_.find(inst.definition);
        if (it == defs_.end()) continue;
        const int c = color[inst.definition];
        if (c == 1) {
          violation("cycle", d.id,
                    "component '" + d.id + "' instantiates '" + inst.definition +
                        "' which (transitively) instantiates '" + d.id + "'");
        } else if (c == 0) {
          visit(*it->second);
        }
      }
      color[d.id] = 2;
    };
    for (const auto& [id, def] : defs_)
      if (color[id] == 0) visit(*def);
  }

  void violation(std::string kind, std::string subject, std::string message) {
    report_.violations.push_back({std::move(kind), std::move(subject), std::move(message)});
  }

  void check_ref(const Scope& scope, const std::string& ref, const std::string& where) {
    if (auto port = split_port_ref(ref)) {
      const ComponentInstance* inst = scope.instance(port->instance);
      if (!inst) {
        violation("dangling_reference", ref,
                  where + " references unknown instance '" + port->instance + "'");
        return;
      }
      auto def = defs_.find(inst->definition);
      if (def == defs_.end()) return;  // reported by check_instance
      if (!def->second->outports.count(port->port)) {
        violation("dangling_port", ref,
                  where + " references '" + ref + "': instance '" + port->instance +
                      "' has no outport '" + port->port + "'");
      }
      return;
    }
    if (scope.event(ref) || scope.gate(ref) || scope.has_inport(ref)) return;
    violation("dangling_reference", ref, where + " references unknown node '" + ref + "'");
  }

 private:
  void check_ids(const Scope& scope) {
    std::set<std::string, std::less<>> seen;
    auto add = [&](const std::string& id, bool allow_slash, const char* what) {
      if (!valid_id(id, allow_slash)) {
        violation("invalid_id", id,
                  scope.label + ": invalid " + std::string(what) + " id '" + id +
                      "' (must be non-empty and free of '.'" +
                      (allow_slash ? "" : " and '/'") + ")");
      }
      if (!seen.insert(id).second)
        violation("duplicate_id", id, scope.label + ": duplicate id '" + id + "'");
    };
    for (const auto& e : *scope.basic_events) add(e.id, scope.top_level, "basic event");
    for (const auto& g : *scope.gates) add(g.id, scope.top_level, "gate");
    for (const auto& i : *scope.instances) add(i.id, false, "instance");
    if (scope.inports)
      for (const auto& p : *scope.inports) add(p, false, "inport");
    if (scope.outports)
      for (const auto& [p, ref] : *scope.outports)
        if (!valid_id(p, false))
          violation("invalid_id", p, scope.label + ": invalid outport id '" + p + "'");
  }

  void check_event(const Scope& scope, const BasicEvent& e) {
    const std::string where = scope.label + " basic event '" + e.id + "'";
    if (!(e.failure_rate_fit > 0.0) || !std::isfinite(e.failure_rate_fit)) {
      std::ostringstream msg;
      msg << where << ": failure rate must be > 0 FIT, got " << e.failure_rate_fit;
      violation("non_positive_rate", e.id, msg.str());
    }
    if (!(e.mdt_hours > 0.0) || !std::isfinite(e.mdt_hours)) {
      std::ostringstream msg;
      msg << where << ": MDT must be > 0 h, got " << e.mdt_hours;
      violation("non_positive_mdt", e.id, msg.str());
    }
    if (e.failure_rate_fit > 0.0 && e.mdt_hours > 0.0 &&
        !(e.failure_rate_fit / 1e9 * e.mdt_hours < 1.0)) {
      violation("unavailability_bound", e.id,
                where + ": failure rate x MDT must be below 1");
    }
  }

  void check_gate(const Scope& scope, const Gate& g) {
    const std::string where = scope.label + " gate '" + g.id + "'";
    if (g.inputs.size() < 2) {
      violation("gate_arity", g.id,
                where + " has " + std::to_string(g.inputs.size()) + " input(s), needs at least 2");
    }
    std::set<std::string, std::less<>> seen;
    for (const auto& in : g.inputs) {
      if (in == g.id) {
        violation("cycle", g.id, where + " uses itself as an input");
        continue;
      }
      if (!seen.insert(in).second)
        violation("duplicate_input", g.id, where + " lists input '" + in + "' twice");
      check_ref(scope, in, where);
    }
  }

  void check_instance(const Scope& scope, const ComponentInstance& inst) {
    const std::string where = scope.label + " instance '" + inst.id + "'";
    auto it = defs_.find(inst.definition);
    if (it == defs_.end()) {
      violation("unknown_definition", inst.id,
                where + " refers to unknown component definition '" + inst.definition + "'");
      return;
    }
    const ComponentDefinition& def = *it->second;
    for (const auto& [port, ref] : inst.inputs) {
      if (std::find(def.inports.begin(), def.inports.end(), port) == def.inports.end()) {
        violation("dangling_port", inst.id + "." + port,
                  where + " binds unknown inport '" + port + "' of '" + def.id + "'");
      }
      check_ref(scope, ref, where + " inport '" + port + "'");
    }
    for (const auto& port : def.inports) {
      const bool unused = std::find(def.unused_inports.begin(), def.unused_inports.end(), port) !=
                          def.unused_inports.end();
      if (!inst.inputs.count(port) && !unused) {
        violation("unbound_inport", inst.id + "." + port,
                  where + " leaves inport '" + port + "' unbound");
      }
    }
  }

  void check_inport_usage(const Scope& scope) {
    std::set<std::string, std::less<>> used;
    for (const auto& g : *scope.gates) used.insert(g.inputs.begin(), g.inputs.end());
    for (const auto& [p, ref] : *scope.outports) used.insert(ref);
    for (const auto& inst : *scope.instances)
      for (const auto& [p, ref] : inst.inputs) used.insert(ref);
    for (const auto& port : *scope.unused_inports) {
      if (!scope.has_inport(port))
        violation("dangling_port", port,
                  scope.label + " marks unknown inport '" + port + "' as unused");
    }
    for (const auto& port : *scope.inports) {
      const bool marked = std::find(scope.unused_inports->begin(), scope.unused_inports->end(),
                                    port) != scope.unused_inports->end();
      if (!used.count(port) && !marked) {
        violation("unused_inport", port,
                  scope.label + " inport '" + port + "' is neither used nor marked unused");
      }
    }
  }

  // Gate-to-gate cycles inside one scope; cycles through instance ports are
  // caught while resolving.
  void check_local_cycles(const Scope& scope) {
    std::map<std::string, int, std::less<>> color;
    std::function<void(const Gate&)> visit = [&](const Gate& g) {
      color[g.id] = 1;
      for (const auto& in : g.inputs) {
        if (in == g.id) continue;  // reported as self-reference
        const Gate* child = scope.gate(in);
        if (!child) continue;
        const int c = color[child->id];
        if (c == 1) {
          violation("cycle", g.id,
                    scope.label + ": gate '" + g.id + "' and gate '" + child->id +
                        "' lie on a cycle");
        } else if (c == 0) {
          visit(*child);
        }
      }
      color[g.id] = 2;
    };
    for (const auto& g : *scope.gates)
      if (color[g.id] == 0) visit(g);
  }

  const DefinitionMap& defs_;
  ValidationReport& report_;
};

struct ResolveFailure {
  Issue issue;
};

class Resolver {
 public:
  explicit Resolver(const DefinitionMap& defs) : defs_(defs) {
    for (const auto& [id, def] : defs_) scopes_.emplace(id, definition_scope(*def));
  }

  FlatTree run(const FaultTreeModel& model) {
    const Scope root_scope = top_scope(model);
    const Frame root{&root_scope, "", nullptr, nullptr};
    tree_.top = resolve(root, model.top);
    return std::move(tree_);
  }

 private:
  struct Frame {
    const Scope* scope;
    std::string prefix;
    const Frame* parent;
    const ComponentInstance* binding;  // instance that created this frame
  };

  [[noreturn]] static void raise(std::string kind, std::string subject, std::string message) {
    throw ResolveFailure{{std::move(kind), std::move(subject), std::move(message)}};
  }

  std::size_t resolve(const Frame& frame, const std::string& ref) {
    if (auto port = split_port_ref(ref)) return resolve_outport(frame, *port, ref);

    const std::string qualified = frame.prefix + ref;
    if (const BasicEvent* e = frame.scope->event(ref)) {
      if (auto hit = memo_.find(qualified); hit != memo_.end()) {
        check_origin(qualified, e);
        return hit->second;
      }
      FlatNode node;
      node.id = qualified;
      node.kind = NodeKind::basic_event;
      node.name = e->name;
      node.failure_rate_fit = e->failure_rate_fit;
      node.mdt_hours = e->mdt_hours;
      return add(qualified, e, std::move(node));
    }
    if (const Gate* g = frame.scope->gate(ref)) {
      if (auto hit = memo_.find(qualified); hit != memo_.end()) {
        check_origin(qualified, g);
        return hit->second;
      }
      if (!active_.insert(qualified).second)
        raise("cycle", qualified, "gate '" + qualified + "' lies on a cycle through ports");
      FlatNode node;
      node.id = qualified;
      node.kind = g->kind == GateKind::and_gate ? NodeKind::and_gate : NodeKind::or_gate;
      for (const auto& in : g->inputs) {
        const std::size_t child = resolve(frame, in);
        if (std::find(node.inputs.begin(), node.inputs.end(), child) != node.inputs.end()) {
          raise("duplicate_input", qualified,
                "gate '" + qualified + "' receives node '" + tree_.nodes[child].id +
                    "' twice after port resolution");
        }
        node.inputs.push_back(child);
      }
      active_.erase(qualified);
      return add(qualified, g, std::move(node));
    }
    if (frame.scope->has_inport(ref)) {
      if (!frame.binding || !frame.parent)
        raise("unbound_inport", qualified, "inport '" + qualified + "' has no binding");
      auto bound = frame.binding->inputs.find(ref);
      if (bound == frame.binding->inputs.end()) {
        raise("unbound_inport", qualified,
              "inport '" + qualified + "' is used but not bound (it is marked unused)");
      }
      const std::string key = "in:" + qualified;
      if (!active_.insert(key).second)
        raise("cycle", qualified, "port '" + qualified + "' is wired to itself");
      const std::size_t r = resolve(*frame.parent, bound->second);
      active_.erase(key);
      return r;
    }
    raise("dangling_reference", qualified, "unresolved reference '" + qualified + "'");
  }

  std::size_t resolve_outport(const Frame& frame, const PortRef& port, const std::string& ref) {
    const std::string qualified = frame.prefix + ref;
    const ComponentInstance* inst = frame.scope->instance(port.instance);
    if (!inst) raise("dangling_reference", qualified, "unknown instance in '" + qualified + "'");
    auto def = defs_.find(inst->definition);
    if (def == defs_.end())
      raise("unknown_definition", qualified, "unknown definition '" + inst->definition + "'");
    auto out = def->second->outports.find(port.port);
    if (out == def->second->outports.end())
      raise("dangling_port", qualified, "unresolved port '" + qualified + "'");

    const std::string key = "out:" + qualified;
    if (!active_.insert(key).second)
      raise("cycle", qualified, "port '" + qualified + "' is wired to itself");
    const Frame child{&scopes_.at(def->first), frame.prefix + port.instance + "/", &frame, inst};
    const std::size_t r = resolve(child, out->second);
    active_.erase(key);
    return r;
  }

  void check_origin(const std::string& qualified, const void* element) {
    if (origin_.at(qualified) != element)
      raise("duplicate_id", qualified, "two distinct nodes flatten to id '" + qualified + "'");
  }

  std::size_t add(const std::string& qualified, const void* element, FlatNode node) {
    if (auto o = origin_.find(qualified); o != origin_.end() && o->second != element)
      raise("duplicate_id", qualified, "two distinct nodes flatten to id '" + qualified + "'");
    origin_[qualified] = element;
    tree_.nodes.push_back(std::move(node));
    const std::size_t index = tree_.nodes.size() - 1;
    memo_[qualified] = index;
    return index;
  }

  const DefinitionMap& defs_;
  std::map<std::string, Scope, std::less<>> scopes_;
  FlatTree tree_;
  std::map<std::string, std::size_t, std::less<>> memo_;
  std::map<std::string, const void*, std::less<>> origin_;
  std::set<std::string, std::less<>> active_;
};

std::optional<FlatTree> build(const FaultTreeModel& model, ValidationReport& report) {
  DefinitionMap defs;
  Checker checker(defs, report);
  for (const auto& d : model.components) {
    if (!valid_id(d.id, false))
      checker.violation("invalid_id", d.id, "invalid component definition id '" + d.id + "'");
    if (!defs.emplace(d.id, &d).second)
      checker.violation("duplicate_id", d.id, "duplicate component definition '" + d.id + "'");
  }
  checker.check_definition_recursion();
  for (const auto& d : model.components) checker.check_scope(definition_scope(d));
  const Scope root = top_scope(model);
  checker.check_scope(root);

  if (!(model.mission_time_hours > 0.0) || !std::isfinite(model.mission_time_hours))
    checker.violation("non_positive_mission_time", "mission_time_hours",
                      "mission time must be > 0 h");
  if (model.top.empty()) {
    checker.violation("missing_top", "top", "model has no top event");
  } else {
    checker.check_ref(root, model.top, "top event");
  }
  if (!report.ok()) return std::nullopt;

  FlatTree tree;
  try {
    tree = Resolver(defs).run(model);
  } catch (const ResolveFailure& f) {
    report.violations.push_back(f.issue);
    return std::nullopt;
  }

  std::vector<std::size_t> parents(tree.nodes.size(), 0);
  for (const auto& n : tree.nodes)
    for (std::size_t c : n.inputs) ++parents[c];
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    if (parents[i] > 1) {
      report.warnings.push_back(
          {"shared_node", tree.nodes[i].id,
           "node '" + tree.nodes[i].id + "' feeds " + std::to_string(parents[i]) +
               " gates; evaluation treats each occurrence as independent"});
    }
  }
  return tree;
}

}  // namespace

ValidationReport validate_model(const FaultTreeModel& model) {
  ValidationReport report;
  build(model, report);
  return report;
}

FlatTree flatten(const FaultTreeModel& model) {
  ValidationReport report;
  auto tree = build(model, report);
  if (!tree) fail(ErrorCode::structural, report.violations.front().message);
  return std::move(*tree);
}

FaultTreeModel as_model(const FlatTree& tree, double mission_time_hours) {
  FaultTreeModel model;
  model.mission_time_hours = mission_time_hours;
  for (const auto& n : tree.nodes) {
    if (n.is_leaf()) {
      model.basic_events.push_back({n.id, n.name, n.failure_rate_fit, n.mdt_hours});
      continue;
    }
    Gate g;
    g.id = n.id;
    g.kind = n.kind == NodeKind::and_gate ? GateKind::and_gate : GateKind::or_gate;
    for (std::size_t c : n.inputs) g.inputs.push_back(tree.nodes.at(c).id);
    model.gates.push_back(std::move(g));
  }
  model.top = tree.top_node().id;
  return model;
}

}  // namespace depra
