#include "depra/risk_tables.hpp"

#include <cmath>
#include <sstream>

#include "depra/error.hpp"

namespace depra {

namespace {

void check_rating(const char* what, int value) {
  if (value < kMinRating || value > kMaxRating) {
    std::ostringstream msg;
    msg << what << " rating must be in " << kMinRating << ".." << kMaxRating << ", got " << value;
    fail(ErrorCode::domain, msg.str());
  }
}

void check_rate(const char* what, double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << what << " must be a finite rate >= 0 FIT, got " << value;
    fail(ErrorCode::domain, msg.str());
  }
}

std::string slug(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == ' ' || c == '.' || c == '/') {
      if (!out.empty() && out.back() != '_') out.push_back('_');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

int compute_rpn(int severity, int occurrence, int detection) {
  check_rating("severity", severity);
  check_rating("occurrence", occurrence);
  check_rating("detection", detection);
  return severity * occurrence * detection;
}

FmedaSplit fmeda_split(double lambda_dangerous_fit, double detection_coverage) {
  check_rate("dangerous failure rate", lambda_dangerous_fit);
  if (!(detection_coverage >= 0.0 && detection_coverage <= 1.0)) {
    std::ostringstream msg;
    msg << "detection coverage must be in [0, 1], got " << detection_coverage;
    fail(ErrorCode::domain, msg.str());
  }
  // Take the smaller part as the difference from the larger one: both
  // subtractions are then exact and the parts add back to the input.
  double detected = detection_coverage * lambda_dangerous_fit;
  if (detected < lambda_dangerous_fit / 2) {
    const double undetected = lambda_dangerous_fit - detected;
    detected = lambda_dangerous_fit - undetected;
    return {detected, undetected};
  }
  return {detected, lambda_dangerous_fit - detected};
}

double compute_sff(double lambda_safe_fit, double lambda_dd_fit, double lambda_du_fit) {
  check_rate("safe failure rate", lambda_safe_fit);
  check_rate("dangerous detected failure rate", lambda_dd_fit);
  check_rate("dangerous undetected failure rate", lambda_du_fit);
  const double total = lambda_safe_fit + lambda_dd_fit + lambda_du_fit;
  if (total == 0.0) fail(ErrorCode::domain, "safe failure fraction is undefined for zero rates");
  return (lambda_safe_fit + lambda_dd_fit) / total;
}

double FmedaEntry::sff() const {
  const FmedaSplit s = split();
  return compute_sff(lambda_safe_fit, s.dangerous_detected_fit, s.dangerous_undetected_fit);
}

DerivedLeaves derive_cft_leaves(const FmedaEntry& entry, double mdt_hours) {
  const FmedaSplit s = entry.split();
  const std::string base = slug(entry.element);

  DerivedLeaves leaves;
  leaves.undetected = {base + "_du", entry.element + " dangerous undetected",
                       s.dangerous_undetected_fit, mdt_hours};
  leaves.detected = {base + "_dd", entry.element + " dangerous detected",
                     s.dangerous_detected_fit, mdt_hours};
  for (const BasicEvent* e : {&leaves.undetected, &leaves.detected}) {
    if (e->failure_rate_fit == 0.0) {
      leaves.warnings.push_back({"zero_rate_leaf", e->id,
                                 "basic event '" + e->id +
                                     "' has a zero failure rate and should be left out of the tree"});
    }
  }
  return leaves;
}

}  // namespace depra
