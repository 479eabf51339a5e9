#pragma once

// Project file (UTF-8 JSON, schema_version "1") and result exports.
//
// Rates are stored in FIT, times in hours and availability as a fraction.
// Saving is canonical: object keys sorted, arrays in model order, two-space
// indentation, non-ASCII text written as-is.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "depra/analysis.hpp"
#include "depra/numfmt.hpp"
#include "depra/project.hpp"

namespace depra {

struct SaveOptions {
  int significant_digits = 0;  // 0: shortest exact representation
};

/// Syntax, schema and version only. Errors: parse (with line and column),
/// schema (naming the field path), version.
Project parse_project(std::string_view text);

/// parse_project followed by validate_project. A dangling id raises
/// Error(reference) naming it; other violations raise Error(validation).
Project load_project(std::string_view text);
Project load_project_file(const std::filesystem::path& path);

std::string save_project(const Project& project, const SaveOptions& options = {});
void save_project_file(const std::filesystem::path& path, const Project& project,
                       const SaveOptions& options = {});

std::string read_text_file(const std::filesystem::path& path);

// JSON dialect shared with the HTTP API. Result serializers round reals to
// `digits` significant digits (<= 0 keeps full precision); availability is
// rounded so that its unavailability keeps that many digits.
nlohmann::json project_to_json(const Project& project, int digits = 0);
nlohmann::json criteria_to_json(const TradeoffCriteria& criteria, int digits = 0);
TradeoffCriteria criteria_from_json(const nlohmann::json& j, const std::string& path = "criteria");
nlohmann::json properties_to_json(std::span<const DependabilityProperty> properties, int digits = 0);
std::vector<DependabilityProperty> properties_from_json(const nlohmann::json& j,
                                                        const std::string& path = "properties");

nlohmann::json rams_to_json(const RamsResult& r, int digits = kDefaultSignificantDigits);
nlohmann::json tree_results_to_json(const TreeResults& results,
                                    int digits = kDefaultSignificantDigits);
nlohmann::json dpn_to_json(const DpnResult& dpn, int digits = kDefaultSignificantDigits);
nlohmann::json comparison_to_json(const ComparisonReport& report,
                                  int digits = kDefaultSignificantDigits);
nlohmann::json issues_to_json(const std::vector<Issue>& issues);

/// Rounded availability for display; see above.
double round_availability(double availability, int digits);

/// Three CSV tables separated by an empty line: RAMS per alternative,
/// DPN contributions per alternative, and actual vs expected DPN.
/// RFC 4180 quoting, CRLF line ends, '.' decimal separator.
std::string export_results_csv(const AnalysisReport& results,
                               int digits = kDefaultSignificantDigits);

}  // namespace depra
