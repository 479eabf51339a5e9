#pragma once

// FMECA (risk priority numbers) and FMEDA (diagnostic coverage split and
// safe failure fraction) worksheets.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "depra/model.hpp"

namespace depra {

inline constexpr int kMinRating = 1;
inline constexpr int kMaxRating = 10;

/// Product of the three 1..10 ratings; throws Error(domain) on a rating
/// outside that range.
int compute_rpn(int severity, int occurrence, int detection);

struct RatedMeasure {
  std::string name;
  std::vector<std::string> alternatives;
  int severity = 1;
  int occurrence = 1;
  int detection = 1;
  std::optional<std::string> further_action;

  int rpn() const { return compute_rpn(severity, occurrence, detection); }
  bool operator==(const RatedMeasure&) const = default;
};

struct FmecaEntry {
  std::string id;
  std::string function;
  std::string failure_mode;
  int severity = 1;
  int occurrence = 1;
  int detection = 1;
  bool illustrative = false;  // ratings are placeholders, not analysis results
  std::vector<RatedMeasure> measures;

  int rpn() const { return compute_rpn(severity, occurrence, detection); }
  bool operator==(const FmecaEntry&) const = default;
};

struct FmedaSplit {
  double dangerous_detected_fit = 0.0;
  double dangerous_undetected_fit = 0.0;

  bool operator==(const FmedaSplit&) const = default;
};

/// (dc * lambda, lambda - dc * lambda); the parts add back to lambda.
FmedaSplit fmeda_split(double lambda_dangerous_fit, double detection_coverage);

/// (safe + dd) / (safe + dd + du).
double compute_sff(double lambda_safe_fit, double lambda_dd_fit, double lambda_du_fit);

struct FmedaEntry {
  std::string id;
  std::string element;
  std::string measure;
  std::vector<std::string> alternatives;
  double lambda_dangerous_fit = 0.0;
  double detection_coverage = 0.0;
  double lambda_safe_fit = 0.0;

  FmedaSplit split() const { return fmeda_split(lambda_dangerous_fit, detection_coverage); }
  double sff() const;
  bool operator==(const FmedaEntry&) const = default;
};

struct DerivedLeaves {
  BasicEvent undetected;
  BasicEvent detected;
  std::vector<Issue> warnings;  // zero-rate leaves cannot enter a valid tree
};

/// Basic events for the dangerous-undetected and dangerous-detected parts of
/// an FMEDA row, ready to place in a fault tree.
DerivedLeaves derive_cft_leaves(const FmedaEntry& entry, double mdt_hours);

}  // namespace depra
