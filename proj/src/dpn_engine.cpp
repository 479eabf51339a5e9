#include "depra/dpn_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "depra/error.hpp"

namespace depra {

namespace {

constexpr double kLevelTolerance = 1e-9;
constexpr double kDecompositionTolerance = 1e-9;
constexpr double kFullAcceptance = 1.0 - 1e-12;

void check_properties(std::span<const DependabilityProperty> properties) {
  if (properties.empty()) fail(ErrorCode::domain, "no dependability properties given");
  std::set<std::string_view> names;
  for (const auto& p : properties) {
    if (p.name.empty()) fail(ErrorCode::domain, "dependability property without a name");
    if (!names.insert(p.name).second)
      fail(ErrorCode::domain, "duplicate dependability property '" + p.name + "'");
    if (!(p.weight > 0.0) || !std::isfinite(p.weight)) {
      std::ostringstream msg;
      msg << "weight of '" << p.name << "' must be a finite value > 0, got " << p.weight;
      fail(ErrorCode::domain, msg.str());
    }
  }
}

void check_acceptance(const std::string& property, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << "acceptance of '" << property << "' must be in [0, 1], got " << x;
    fail(ErrorCode::domain, msg.str());
  }
}

}  // namespace

std::string_view acceptance_label_text(AcceptanceLabel label) {
  switch (label) {
    case AcceptanceLabel::totally_unacceptable: return "totally unacceptable";
    case AcceptanceLabel::almost_unacceptable: return "almost unacceptable";
    case AcceptanceLabel::predominantly_unacceptable: return "predominantly unacceptable";
    case AcceptanceLabel::predominantly_acceptable: return "predominantly acceptable";
    case AcceptanceLabel::almost_acceptable: return "almost acceptable";
    case AcceptanceLabel::totally_acceptable: return "totally acceptable";
  }
  return "";
}

std::optional<AcceptanceLevel> acceptance_level_for(double value) {
  for (const auto& level : kAcceptanceScale)
    if (std::abs(level.value - value) <= kLevelTolerance) return level;
  return std::nullopt;
}

std::optional<Polarity> unit_polarity(std::string_view unit) {
  static constexpr std::array<std::string_view, 5> lower{"fit", "per_hour", "mdt_h",
                                                         "unavailability", "rpn"};
  static constexpr std::array<std::string_view, 6> higher{"mtbf_h", "mttf_h", "availability",
                                                          "sff", "sil", "score"};
  if (std::find(lower.begin(), lower.end(), unit) != lower.end()) return Polarity::lower_is_better;
  if (std::find(higher.begin(), higher.end(), unit) != higher.end())
    return Polarity::higher_is_better;
  return std::nullopt;
}

std::string_view objective_status_text(ObjectiveStatus status) {
  switch (status) {
    case ObjectiveStatus::meets_expected: return "meets_expected";
    case ObjectiveStatus::within_limits: return "within_limits";
    case ObjectiveStatus::violates_upper: return "violates_upper";
    case ObjectiveStatus::violates_lower: return "violates_lower";
    case ObjectiveStatus::no_limits: return "no_limits";
  }
  return "";
}

ObjectiveStatus objective_check(const TradeoffCriteria& c) {
  if (c.actual.unit != c.expected.unit) {
    fail(ErrorCode::domain, "actual value unit '" + c.actual.unit +
                                "' differs from expected value unit '" + c.expected.unit + "'");
  }
  const auto polarity = unit_polarity(c.actual.unit);
  if (!polarity) fail(ErrorCode::domain, "unknown unit tag '" + c.actual.unit + "'");
  if (c.lower_limit && c.upper_limit && *c.lower_limit > *c.upper_limit)
    fail(ErrorCode::domain, "acceptable lower limit exceeds upper limit");

  const double actual = c.actual.value;
  if (c.upper_limit && actual > *c.upper_limit) return ObjectiveStatus::violates_upper;
  if (c.lower_limit && actual < *c.lower_limit) return ObjectiveStatus::violates_lower;
  const bool meets = *polarity == Polarity::lower_is_better ? actual <= c.expected.value
                                                            : actual >= c.expected.value;
  if (meets) return ObjectiveStatus::meets_expected;
  if (c.upper_limit || c.lower_limit) return ObjectiveStatus::within_limits;
  return ObjectiveStatus::no_limits;
}

std::optional<std::string> acceptance_disagreement(const TradeoffCriteria& c) {
  const ObjectiveStatus status = objective_check(c);
  const bool violated =
      status == ObjectiveStatus::violates_upper || status == ObjectiveStatus::violates_lower;
  if (violated && c.acceptance >= kFullAcceptance) {
    return "accepted totally although the actual value " +
           std::string(status == ObjectiveStatus::violates_upper ? "exceeds the upper"
                                                                  : "is below the lower") +
           " acceptable limit";
  }
  if (status == ObjectiveStatus::meets_expected && c.acceptance == 0.0)
    return std::string("rejected totally although the actual value meets the expected value");
  return std::nullopt;
}

std::string_view alternative_kind_text(AlternativeKind kind) {
  return kind == AlternativeKind::design_alternative ? "design_alternative" : "measure";
}

std::optional<AlternativeKind> parse_alternative_kind(std::string_view text) {
  if (text == "design_alternative") return AlternativeKind::design_alternative;
  if (text == "measure") return AlternativeKind::measure;
  return std::nullopt;
}

const Contribution* DpnResult::find(std::string_view property) const {
  for (const auto& c : contributions)
    if (c.property == property) return &c;
  return nullptr;
}

double expected_dpn(std::span<const DependabilityProperty> properties) {
  check_properties(properties);
  double sum = 0.0;
  for (const auto& p : properties) sum += p.weight;
  return sum;
}

DpnResult compute_dpn(const Alternative& alternative,
                      std::span<const DependabilityProperty> properties) {
  check_properties(properties);

  std::vector<std::string> missing;
  for (const auto& p : properties)
    if (!alternative.evaluations.count(p.name)) missing.push_back(p.name);
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    fail(ErrorCode::missing,
         "alternative '" + alternative.id + "' has no evaluation for: " + list);
  }

  DpnResult result;
  for (const auto& p : properties) {
    const double x = alternative.evaluations.at(p.name).acceptance;
    check_acceptance(p.name, x);
    result.contributions.push_back({p.name, p.weight, x, x * p.weight});
    result.total += x * p.weight;
  }
  result.expected_total = expected_dpn(properties);
  return result;
}

ComparisonReport compare_alternatives(std::span<const Alternative> alternatives,
                                      std::span<const DependabilityProperty> properties) {
  ComparisonReport report;
  report.properties.assign(properties.begin(), properties.end());
  report.expected_total = expected_dpn(properties);

  for (const auto& p : properties) report.property_series.push_back({p.name, {}});
  report.actual_series.name = "actual";
  report.expected_series.name = "expected";

  for (const auto& alt : alternatives) {
    AlternativeScore score;
    score.id = alt.id;
    score.name = alt.name;
    score.dpn = compute_dpn(alt, properties);
    score.all_fulfilled = true;
    for (std::size_t i = 0; i < properties.size(); ++i) {
      const bool ok = score.dpn.contributions[i].acceptance >= kFullAcceptance;
      score.fulfilled.push_back(ok);
      score.all_fulfilled = score.all_fulfilled && ok;
      report.property_series[i].values.push_back(score.dpn.contributions[i].value);

      const std::string& name = properties[i].name;
      try {
        if (auto msg = acceptance_disagreement(alt.evaluations.at(name)))
          report.warnings.push_back({"acceptance_disagreement", alt.id + "/" + name,
                                     alt.id + " / " + name + ": " + *msg});
      } catch (const Error& e) {
        report.warnings.push_back({"objective_check", alt.id + "/" + name,
                                   alt.id + " / " + name + ": " + e.what()});
      }
    }
    report.actual_series.values.push_back(score.dpn.total);
    report.expected_series.values.push_back(score.dpn.expected_total);
    report.alternatives.push_back(std::move(score));
  }

  report.ranking.resize(report.alternatives.size());
  std::iota(report.ranking.begin(), report.ranking.end(), std::size_t{0});
  std::stable_sort(report.ranking.begin(), report.ranking.end(), [&](std::size_t a, std::size_t b) {
    return report.alternatives[a].dpn.total > report.alternatives[b].dpn.total;
  });
  return report;
}

std::vector<Conflict> detect_conflicts(const DpnResult& before, const DpnResult& after) {
  const auto& b = before.contributions;
  const auto& a = after.contributions;
  bool same = b.size() == a.size();
  for (std::size_t i = 0; same && i < b.size(); ++i)
    same = b[i].property == a[i].property && b[i].weight == a[i].weight;
  if (!same)
    fail(ErrorCode::domain, "conflict detection needs the same weighted property set on both sides");

  std::vector<Conflict> conflicts;
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (!(a[p].value > b[p].value)) continue;
    for (std::size_t q = 0; q < a.size(); ++q)
      if (a[q].value < b[q].value) conflicts.push_back({a[p].property, a[q].property});
  }
  return conflicts;
}

namespace {

// Property indices by descending weight (stable), with the summed weight of
// everything below each position.
struct Tiers {
  std::vector<std::size_t> order;
  std::vector<double> lower_sum;
};

Tiers make_tiers(std::span<const DependabilityProperty> properties) {
  Tiers t;
  t.order.resize(properties.size());
  std::iota(t.order.begin(), t.order.end(), std::size_t{0});
  std::stable_sort(t.order.begin(), t.order.end(), [&](std::size_t a, std::size_t b) {
    return properties[a].weight > properties[b].weight;
  });
  t.lower_sum.assign(properties.size(), 0.0);
  double acc = 0.0;
  for (std::size_t k = properties.size(); k-- > 0;) {
    t.lower_sum[k] = acc;
    acc += properties[t.order[k]].weight;
  }
  return t;
}

double scale_step() { return kAcceptanceScale[1].value - kAcceptanceScale[0].value; }

}  // namespace

bool decomposition_supported(std::span<const DependabilityProperty> properties) {
  check_properties(properties);
  const Tiers t = make_tiers(properties);
  for (std::size_t k = 0; k < t.order.size(); ++k) {
    const double step = scale_step() * properties[t.order[k]].weight;
    if (!(t.lower_sum[k] + 2 * kDecompositionTolerance < step)) return false;
  }
  return true;
}

std::vector<std::pair<std::string, AcceptanceLevel>> decompose_contributions(
    double total, std::span<const DependabilityProperty> properties) {
  if (!decomposition_supported(properties)) {
    fail(ErrorCode::ambiguous,
         "weights are not separated enough for a unique decomposition of DPN totals");
  }
  const Tiers t = make_tiers(properties);
  std::vector<AcceptanceLevel> levels(properties.size());
  double remaining = total;
  for (std::size_t k = 0; k < t.order.size(); ++k) {
    const double weight = properties[t.order[k]].weight;
    const AcceptanceLevel* match = nullptr;
    for (const auto& level : kAcceptanceScale) {
      const double rest = remaining - level.value * weight;
      if (rest >= -kDecompositionTolerance && rest <= t.lower_sum[k] + kDecompositionTolerance) {
        match = &level;
        break;
      }
    }
    if (!match) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "DPN total " << total << " is not produced by any quantized acceptance vector";
      fail(ErrorCode::inconsistent, msg.str());
    }
    levels[t.order[k]] = *match;
    remaining -= match->value * weight;
  }

  std::vector<std::pair<std::string, AcceptanceLevel>> out;
  for (std::size_t i = 0; i < properties.size(); ++i) out.emplace_back(properties[i].name, levels[i]);
  return out;
}

}  // namespace depra
