#pragma once

// Dependability project: the traceability chain from stakeholder goals to
// hazards, the weighted dependability properties, the alternatives under
// trade-off with their fault trees, and the FMECA/FMEDA worksheets.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "depra/dpn_engine.hpp"
#include "depra/model.hpp"
#include "depra/risk_tables.hpp"

namespace depra {

inline constexpr std::string_view kSchemaVersion = "1";

struct Goal {
  std::string id;
  std::string text;
  std::string limits;

  bool operator==(const Goal&) const = default;
};

struct Scenario {
  std::string id;
  std::string text;

  bool operator==(const Scenario&) const = default;
};

struct FunctionalRequirement {
  std::string id;
  std::string text;
  std::string scenario;

  bool operator==(const FunctionalRequirement&) const = default;
};

struct Hazard {
  std::string id;
  std::string text;
  std::string requirement;

  bool operator==(const Hazard&) const = default;
};

struct Project {
  std::string schema_version{kSchemaVersion};
  std::string name;
  std::string description;
  std::vector<Goal> goals;
  std::vector<Scenario> scenarios;
  std::vector<FunctionalRequirement> functional_requirements;
  std::vector<Hazard> hazards;
  std::vector<DependabilityProperty> properties;
  std::vector<Alternative> alternatives;
  std::map<std::string, FaultTreeModel> fault_trees;
  std::vector<FmecaEntry> fmeca;
  std::vector<FmedaEntry> fmeda;

  const Alternative* find_alternative(std::string_view id) const;
  Alternative* find_alternative(std::string_view id);
  bool has_property(std::string_view name) const;

  bool operator==(const Project&) const = default;
};

/// All violations across the project: dangling cross references (kind
/// "reference"), worksheet and criteria ranges, and every fault tree's own
/// validation (subjects prefixed with the tree id).
ValidationReport validate_project(const Project& project);

}  // namespace depra
