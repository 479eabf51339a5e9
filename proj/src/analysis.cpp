#include "depra/analysis.hpp"

#include "depra/error.hpp"

namespace depra {

FlatTree alternative_tree(const Project& project, std::string_view alternative_id) {
  const Alternative* alt = project.find_alternative(alternative_id);
  if (!alt) fail(ErrorCode::not_found, "unknown alternative '" + std::string(alternative_id) + "'");
  if (!alt->tree)
    fail(ErrorCode::domain, "alternative '" + alt->id + "' is qualitative-only (no fault tree)");
  auto it = project.fault_trees.find(*alt->tree);
  if (it == project.fault_trees.end())
    fail(ErrorCode::reference, "alternative '" + alt->id + "' references unknown fault tree '" +
                                   *alt->tree + "'");
  return flatten(it->second);
}

TreeResults evaluate_alternative(const Project& project, std::string_view alternative_id) {
  const FlatTree tree = alternative_tree(project, alternative_id);
  const Alternative* alt = project.find_alternative(alternative_id);
  return eval_tree(tree, project.fault_trees.at(*alt->tree).mission_time_hours);
}

std::vector<Alternative> evaluated_alternatives(const Project& project,
                                                std::vector<std::string>* unevaluated,
                                                std::vector<IncompleteAlternative>* incomplete) {
  std::vector<Alternative> out;
  for (const auto& alt : project.alternatives) {
    if (alt.evaluations.empty()) {
      if (unevaluated) unevaluated->push_back(alt.id);
      continue;
    }
    IncompleteAlternative gap{alt.id, {}};
    for (const auto& p : project.properties)
      if (!alt.evaluations.count(p.name)) gap.missing.push_back(p.name);
    if (!gap.missing.empty()) {
      if (incomplete) incomplete->push_back(std::move(gap));
      continue;
    }
    out.push_back(alt);
  }
  return out;
}

AnalysisReport analyze_project(const Project& project) {
  AnalysisReport report;
  for (const auto& alt : project.alternatives) {
    if (!alt.tree) continue;
    const FlatTree tree = alternative_tree(project, alt.id);
    const double mission = project.fault_trees.at(*alt.tree).mission_time_hours;
    report.rams.push_back({alt.id, alt.name, *alt.tree, eval_top(tree, mission)});
  }
  const auto alternatives = evaluated_alternatives(project, &report.unevaluated, &report.incomplete);
  report.comparison = compare_alternatives(alternatives, project.properties);
  return report;
}

}  // namespace depra
