#pragma once

// Whole-project pipeline: fault tree evaluation per alternative followed by
// the DPN comparison. Shared by the CLI and the HTTP service so both report
// identical numbers.

#include <string>
#include <string_view>
#include <vector>

#include "depra/cft_eval.hpp"
#include "depra/dpn_engine.hpp"
#include "depra/project.hpp"

namespace depra {

struct AlternativeRams {
  std::string id;
  std::string name;
  std::string tree;
  RamsResult top;

  bool operator==(const AlternativeRams&) const = default;
};

struct IncompleteAlternative {
  std::string id;
  std::vector<std::string> missing;  // properties without an evaluation

  bool operator==(const IncompleteAlternative&) const = default;
};

struct AnalysisReport {
  std::vector<AlternativeRams> rams;     // alternatives with a fault tree
  ComparisonReport comparison;           // fully evaluated alternatives
  std::vector<std::string> unevaluated;  // alternatives without any evaluation
  std::vector<IncompleteAlternative> incomplete;

  bool operator==(const AnalysisReport&) const = default;
};

/// Flattened tree of an alternative. Throws Error(not_found) for an unknown
/// alternative and Error(domain) for a qualitative-only one.
FlatTree alternative_tree(const Project& project, std::string_view alternative_id);

TreeResults evaluate_alternative(const Project& project, std::string_view alternative_id);

/// Alternatives evaluated for every property. Those without any evaluation
/// are named in `unevaluated`, partially evaluated ones in `incomplete`.
std::vector<Alternative> evaluated_alternatives(
    const Project& project, std::vector<std::string>* unevaluated = nullptr,
    std::vector<IncompleteAlternative>* incomplete = nullptr);

AnalysisReport analyze_project(const Project& project);

}  // namespace depra
