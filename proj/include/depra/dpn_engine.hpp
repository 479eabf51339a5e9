#pragma once

// DPN (dependability priority number): a weighted acceptance score per design
// alternative,
//
//     DPN_j = sum_i X_ij * K_i,
//
// where X_ij in [0, 1] is the expert's overall acceptance of property i for
// alternative j and K_i > 0 is the property weight. The weights need not sum
// to one; the best attainable score is sum_i K_i. With weights separated by
// enough orders of magnitude each property occupies its own digits, so a
// total can be read back into per-property acceptance levels.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "depra/model.hpp"

namespace depra {

struct DependabilityProperty {
  std::string name;
  double weight = 1.0;  // K_i

  bool operator==(const DependabilityProperty&) const = default;
};

enum class AcceptanceLabel {
  totally_unacceptable,
  almost_unacceptable,
  predominantly_unacceptable,
  predominantly_acceptable,
  almost_acceptable,
  totally_acceptable,
};

struct AcceptanceLevel {
  double value = 0.0;
  AcceptanceLabel label = AcceptanceLabel::totally_unacceptable;

  bool operator==(const AcceptanceLevel&) const = default;
};

inline constexpr std::array<AcceptanceLevel, 6> kAcceptanceScale{{
    {0.0, AcceptanceLabel::totally_unacceptable},
    {0.2, AcceptanceLabel::almost_unacceptable},
    {0.4, AcceptanceLabel::predominantly_unacceptable},
    {0.6, AcceptanceLabel::predominantly_acceptable},
    {0.8, AcceptanceLabel::almost_acceptable},
    {1.0, AcceptanceLabel::totally_acceptable},
}};

std::string_view acceptance_label_text(AcceptanceLabel label);

/// Scale level matching value to within 1e-9, if any.
std::optional<AcceptanceLevel> acceptance_level_for(double value);

// Subjective trade-off categories.
enum class Benefit { none, better_life_time, better_reliability_availability, reputation, sale_price };
enum class Drawback {
  none, no_certificate, financial_disaster, worse_availability, reputation_damage,
  postponed_finish, increased_purchase_cost,
};
enum class ImprovementCost { none, ignorable, proportional, quite_high, too_high };
enum class TimeToAchieve { none, ignorable, proportional, quite_long, too_long };
enum class FurtherAction { none, redundancy, higher_quality_component, new_component };

template <class E>
struct EnumText;

template <>
struct EnumText<Benefit> {
  static constexpr std::array<std::string_view, 5> names{
      "None", "Better life time", "Better reliability/availability",
      "Potential reputation benefit", "Better sale price"};
};
template <>
struct EnumText<Drawback> {
  static constexpr std::array<std::string_view, 7> names{
      "None", "No certificate", "Financial disaster", "Worse availability",
      "Damage of reputation", "Postponed finish", "Increased purchase cost"};
};
template <>
struct EnumText<ImprovementCost> {
  static constexpr std::array<std::string_view, 5> names{
      "None", "Ignorable", "Proportional", "Quite high", "Too high"};
};
template <>
struct EnumText<TimeToAchieve> {
  static constexpr std::array<std::string_view, 5> names{
      "None", "Ignorable", "Proportional", "Quite long", "Too long"};
};
template <>
struct EnumText<FurtherAction> {
  static constexpr std::array<std::string_view, 4> names{
      "None", "Redundancy", "Higher quality component", "New component"};
};

template <class E>
std::string_view to_text(E value) {
  return EnumText<E>::names.at(static_cast<std::size_t>(value));
}

template <class E>
std::optional<E> from_text(std::string_view text) {
  const auto& names = EnumText<E>::names;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == text) return static_cast<E>(i);
  return std::nullopt;
}

// Unit tags name the quantity kind, which fixes whether smaller or larger
// values are better: fit, per_hour, mdt_h, unavailability and rpn are
// lower-is-better; mtbf_h, mttf_h, availability, sff, sil and score are
// higher-is-better.
enum class Polarity { lower_is_better, higher_is_better };

std::optional<Polarity> unit_polarity(std::string_view unit);

struct Quantity {
  double value = 0.0;
  std::string unit;

  bool operator==(const Quantity&) const = default;
};

struct TradeoffCriteria {
  Quantity actual;
  Quantity expected;
  std::optional<double> upper_limit;
  std::optional<double> lower_limit;
  Benefit benefit = Benefit::none;
  Drawback drawback = Drawback::none;
  ImprovementCost cost = ImprovementCost::none;
  TimeToAchieve time_to_achieve = TimeToAchieve::none;
  FurtherAction further_action = FurtherAction::none;
  double acceptance = 0.0;  // X_ij, entered by the analyst

  bool operator==(const TradeoffCriteria&) const = default;
};

enum class ObjectiveStatus { meets_expected, within_limits, violates_upper, violates_lower, no_limits };

std::string_view objective_status_text(ObjectiveStatus status);

/// Compares the actual value against the limits first, then against the
/// expected value (boundary inclusive), using the unit's polarity.
ObjectiveStatus objective_check(const TradeoffCriteria& criteria);

/// Message when the entered acceptance contradicts the objective check:
/// full acceptance of a limit violation, or zero acceptance of a value that
/// meets its expectation.
std::optional<std::string> acceptance_disagreement(const TradeoffCriteria& criteria);

enum class AlternativeKind { design_alternative, measure };

std::string_view alternative_kind_text(AlternativeKind kind);
std::optional<AlternativeKind> parse_alternative_kind(std::string_view text);

struct Alternative {
  std::string id;
  std::string name;
  AlternativeKind kind = AlternativeKind::measure;
  std::optional<std::string> tree;  // absent: qualitative-only
  std::optional<std::string> sil;   // user-entered label
  std::map<std::string, TradeoffCriteria> evaluations;

  bool operator==(const Alternative&) const = default;
};

struct Contribution {
  std::string property;
  double weight = 0.0;
  double acceptance = 0.0;
  double value = 0.0;  // acceptance * weight

  bool operator==(const Contribution&) const = default;
};

struct DpnResult {
  std::vector<Contribution> contributions;  // property order
  double total = 0.0;
  double expected_total = 0.0;

  const Contribution* find(std::string_view property) const;
  bool operator==(const DpnResult&) const = default;
};

/// Sum of the weights; throws Error(domain) for an empty or invalid set.
double expected_dpn(std::span<const DependabilityProperty> properties);

/// Throws Error(missing) listing every property without an evaluation.
DpnResult compute_dpn(const Alternative& alternative,
                      std::span<const DependabilityProperty> properties);

struct AlternativeScore {
  std::string id;
  std::string name;
  DpnResult dpn;
  std::vector<bool> fulfilled;  // per property: contribution reaches K_i
  bool all_fulfilled = false;

  bool operator==(const AlternativeScore&) const = default;
};

struct ChartSeries {
  std::string name;
  std::vector<double> values;  // one per alternative, input order

  bool operator==(const ChartSeries&) const = default;
};

struct ComparisonReport {
  std::vector<DependabilityProperty> properties;
  double expected_total = 0.0;
  std::vector<AlternativeScore> alternatives;  // input order
  std::vector<std::size_t> ranking;            // best first, ties by input order
  std::vector<ChartSeries> property_series;    // contribution per property
  ChartSeries actual_series;
  ChartSeries expected_series;
  std::vector<Issue> warnings;

  bool operator==(const ComparisonReport&) const = default;
};

ComparisonReport compare_alternatives(std::span<const Alternative> alternatives,
                                      std::span<const DependabilityProperty> properties);

struct Conflict {
  std::string improved;
  std::string worsened;

  bool operator==(const Conflict&) const = default;
};

/// Every (p, q) where p's contribution rose and q's fell between two results
/// over the same weighted property set.
std::vector<Conflict> detect_conflicts(const DpnResult& before, const DpnResult& after);

/// Whether every total over the six-level scale maps back to one X vector:
/// for each weight, the lower weights together must stay below one step.
bool decomposition_supported(std::span<const DependabilityProperty> properties);

/// Recovers the per-property acceptance levels behind a DPN total, matching
/// to 1e-9. Throws Error(ambiguous) when the weights do not separate, and
/// Error(inconsistent) when no quantized vector produces the total.
std::vector<std::pair<std::string, AcceptanceLevel>> decompose_contributions(
    double total, std::span<const DependabilityProperty> properties);

}  // namespace depra
