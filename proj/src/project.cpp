#include "depra/project.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "depra/error.hpp"

namespace depra {

const Alternative* Project::find_alternative(std::string_view id) const {
  for (const auto& a : alternatives)
    if (a.id == id) return &a;
  return nullptr;
}

Alternative* Project::find_alternative(std::string_view id) {
  for (auto& a : alternatives)
    if (a.id == id) return &a;
  return nullptr;
}

bool Project::has_property(std::string_view name) const {
  return std::any_of(properties.begin(), properties.end(),
                     [&](const DependabilityProperty& p) { return p.name == name; });
}

namespace {

class ProjectChecker {
 public:
  explicit ProjectChecker(ValidationReport& report) : report_(report) {}

  void violation(std::string kind, std::string subject, std::string message) {
    report_.violations.push_back({std::move(kind), std::move(subject), std::move(message)});
  }

  template <class T>
  std::set<std::string, std::less<>> unique_ids(const std::vector<T>& items, const char* what) {
    std::set<std::string, std::less<>> ids;
    for (const auto& item : items) {
      if (item.id.empty()) violation("invalid_id", "", std::string(what) + " without an id");
      if (!ids.insert(item.id).second)
        violation("duplicate_id", item.id, std::string("duplicate ") + what + " id '" + item.id + "'");
    }
    return ids;
  }

  void reference(const std::string& subject, const std::string& target, const char* what) {
    violation("reference", target,
              subject + " references unknown " + std::string(what) + " '" + target + "'");
  }

  void criteria(const std::string& where, const TradeoffCriteria& c) {
    if (!(c.acceptance >= 0.0 && c.acceptance <= 1.0)) {
      std::ostringstream msg;
      msg << where << ": acceptance must be in [0, 1], got " << c.acceptance;
      violation("acceptance_range", where, msg.str());
    }
    if (!unit_polarity(c.actual.unit))
      violation("unknown_unit", where, where + ": unknown unit tag '" + c.actual.unit + "'");
    if (c.actual.unit != c.expected.unit)
      violation("unit_mismatch", where,
                where + ": actual unit '" + c.actual.unit + "' differs from expected unit '" +
                    c.expected.unit + "'");
    if (c.lower_limit && c.upper_limit && *c.lower_limit > *c.upper_limit)
      violation("limit_order", where, where + ": lower limit exceeds upper limit");
  }

  void rating(const std::string& where, const char* what, int value) {
    if (value < kMinRating || value > kMaxRating)
      violation("rating_range", where,
                where + ": " + what + " rating " + std::to_string(value) + " outside 1..10");
  }

 private:
  ValidationReport& report_;
};

}  // namespace

ValidationReport validate_project(const Project& project) {
  ValidationReport report;
  ProjectChecker check(report);

  if (project.schema_version != kSchemaVersion)
    check.violation("version", project.schema_version,
                    "unsupported schema_version '" + project.schema_version + "'");

  check.unique_ids(project.goals, "goal");
  const auto scenarios = check.unique_ids(project.scenarios, "scenario");
  const auto requirements = check.unique_ids(project.functional_requirements, "requirement");
  check.unique_ids(project.hazards, "hazard");
  const auto alternatives = check.unique_ids(project.alternatives, "alternative");
  check.unique_ids(project.fmeca, "FMECA entry");
  check.unique_ids(project.fmeda, "FMEDA entry");

  for (const auto& r : project.functional_requirements)
    if (!scenarios.count(r.scenario))
      check.reference("requirement '" + r.id + "'", r.scenario, "scenario");
  for (const auto& h : project.hazards)
    if (!requirements.count(h.requirement))
      check.reference("hazard '" + h.id + "'", h.requirement, "requirement");

  std::set<std::string, std::less<>> properties;
  for (const auto& p : project.properties) {
    if (p.name.empty()) check.violation("invalid_id", "", "property without a name");
    if (!properties.insert(p.name).second)
      check.violation("duplicate_id", p.name, "duplicate property '" + p.name + "'");
    if (!(p.weight > 0.0) || !std::isfinite(p.weight))
      check.violation("non_positive_weight", p.name,
                      "weight of property '" + p.name + "' must be > 0");
  }

  for (const auto& a : project.alternatives) {
    if (a.tree && !project.fault_trees.count(*a.tree))
      check.reference("alternative '" + a.id + "'", *a.tree, "fault tree");
    for (const auto& [property, criteria] : a.evaluations) {
      if (!properties.count(property)) {
        check.reference("alternative '" + a.id + "' evaluation", property, "property");
        continue;
      }
      check.criteria(a.id + "/" + property, criteria);
    }
  }

  for (const auto& e : project.fmeca) {
    const std::string where = "FMECA entry '" + e.id + "'";
    check.rating(where, "severity", e.severity);
    check.rating(where, "occurrence", e.occurrence);
    check.rating(where, "detection", e.detection);
    for (const auto& m : e.measures) {
      const std::string mw = where + " measure '" + m.name + "'";
      check.rating(mw, "severity", m.severity);
      check.rating(mw, "occurrence", m.occurrence);
      check.rating(mw, "detection", m.detection);
      for (const auto& alt : m.alternatives)
        if (!alternatives.count(alt)) check.reference(mw, alt, "alternative");
    }
  }

  for (const auto& e : project.fmeda) {
    const std::string where = "FMEDA entry '" + e.id + "'";
    if (!(e.lambda_dangerous_fit >= 0.0) || !(e.lambda_safe_fit >= 0.0))
      check.violation("rate_range", e.id, where + ": failure rates must be >= 0");
    if (!(e.detection_coverage >= 0.0 && e.detection_coverage <= 1.0))
      check.violation("coverage_range", e.id, where + ": detection coverage must be in [0, 1]");
    for (const auto& alt : e.alternatives)
      if (!alternatives.count(alt)) check.reference(where, alt, "alternative");
  }

  for (const auto& [id, model] : project.fault_trees) {
    const ValidationReport tree_report = validate_model(model);
    for (auto issue : tree_report.violations) {
      issue.message = "fault tree '" + id + "': " + issue.message;
      issue.subject = id + ":" + issue.subject;
      report.violations.push_back(std::move(issue));
    }
    for (auto issue : tree_report.warnings) {
      issue.message = "fault tree '" + id + "': " + issue.message;
      issue.subject = id + ":" + issue.subject;
      report.warnings.push_back(std::move(issue));
    }
  }
  return report;
}

}  // namespace depra
