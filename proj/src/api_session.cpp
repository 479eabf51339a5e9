#include "depra/api_session.hpp"

#include <charconv>
#include <mutex>
#include <vector>

#include "depra/analysis.hpp"
#include "depra/project_io.hpp"

namespace depra {

using nlohmann::json;

namespace {

ApiResponse json_response(int status, const json& body) {
  return {status, body.dump(2, ' ', false, json::error_handler_t::replace) + "\n", "application/json"};
}

ApiResponse error_response(ErrorCode code, const std::string& message) {
  return json_response(http_status_for(code),
                       {{"error", {{"code", code_name(code)}, {"message", message}}}});
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= path.size()) {
    std::size_t end = path.find('/', start);
    if (end == std::string::npos) end = path.size();
    if (end > start) parts.push_back(path.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

json parse_body(const std::string& body) {
  if (body.empty()) return json::object();
  try {
    json j = json::parse(body);
    if (!j.is_object()) fail(ErrorCode::schema, "request body must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    fail(ErrorCode::parse, std::string("request body: ") + e.what());
  }
}

int digits_from(const ApiRequest& request) {
  auto it = request.query.find("digits");
  if (it == request.query.end()) return kDefaultSignificantDigits;
  int digits = 0;
  const std::string& text = it->second;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), digits);
  if (ec != std::errc{} || ptr != text.data() + text.size() || digits < 0 || digits > 17)
    fail(ErrorCode::usage, "digits must be an integer in 0..17");
  return digits;
}

void check_revision(const json& body, std::uint64_t current) {
  auto it = body.find("revision");
  if (it == body.end() || it->is_null()) return;
  if (!it->is_number_unsigned() && !it->is_number_integer())
    fail(ErrorCode::schema, "revision must be an integer");
  if (it->get<std::int64_t>() != static_cast<std::int64_t>(current)) {
    fail(ErrorCode::conflict, "stale revision " + it->dump() + " (current revision is " +
                                  std::to_string(current) + ")");
  }
}

void require_valid(const Project& candidate) {
  const ValidationReport report = validate_project(candidate);
  for (const auto& v : report.violations)
    if (v.kind == "reference") fail(ErrorCode::reference, v.message);
  if (!report.ok()) fail(ErrorCode::validation, report.violations.front().message);
}

json dpn_report(const Project& project, std::uint64_t revision, int digits) {
  const AnalysisReport report = analyze_project(project);
  json incomplete = json::array();
  for (const auto& i : report.incomplete) incomplete.push_back({{"id", i.id}, {"missing", i.missing}});
  return {{"revision", revision},
          {"comparison", comparison_to_json(report.comparison, digits)},
          {"unevaluated", report.unevaluated},
          {"incomplete", std::move(incomplete)}};
}

json alternative_dpn(const Project& project, const std::string& id, std::uint64_t revision,
                     int digits) {
  const Alternative* alt = project.find_alternative(id);
  if (!alt) fail(ErrorCode::not_found, "unknown alternative '" + id + "'");
  json out = {{"revision", revision}, {"alternative", id}, {"dpn", nullptr}, {"missing", json::array()}};
  for (const auto& p : project.properties)
    if (!alt->evaluations.count(p.name)) out["missing"].push_back(p.name);
  if (out["missing"].empty()) out["dpn"] = dpn_to_json(compute_dpn(*alt, project.properties), digits);
  return out;
}

Alternative& require_alternative(Project& project, const std::string& id) {
  Alternative* alt = project.find_alternative(id);
  if (!alt) fail(ErrorCode::not_found, "unknown alternative '" + id + "'");
  return *alt;
}

}  // namespace

int http_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_found: return 404;
    case ErrorCode::conflict: return 409;
    case ErrorCode::io: return 500;
    default: return 422;
  }
}

ApiSession::ApiSession(Project project, std::filesystem::path file)
    : project_(std::move(project)), file_(std::move(file)) {}

std::uint64_t ApiSession::revision() const {
  std::shared_lock lock(mutex_);
  return revision_;
}

bool ApiSession::dirty() const {
  std::shared_lock lock(mutex_);
  return dirty_;
}

Project ApiSession::snapshot() const {
  std::shared_lock lock(mutex_);
  return project_;
}

ApiSession::State ApiSession::read_state() const {
  std::shared_lock lock(mutex_);
  return {project_, revision_};
}

ApiResponse ApiSession::handle(const ApiRequest& request) {
  try {
    const auto parts = split_path(request.path);
    const std::string& m = request.method;
    if (m == "OPTIONS") return {204, "", "text/plain"};
    const int digits = digits_from(request);

    auto is = [&](std::initializer_list<const char*> shape) {
      if (parts.size() != shape.size()) return false;
      std::size_t i = 0;
      for (const char* s : shape) {
        if (s && parts[i] != s) return false;
        ++i;
      }
      return true;
    };

    bool known = true;
    if (is({"project"})) {
      if (m == "GET") return get_project();
    } else if (is({"dpn"})) {
      if (m == "GET") {
        auto f = request.query.find("format");
        const bool csv = f != request.query.end() && f->second == "csv";
        if (f != request.query.end() && !csv && f->second != "json")
          fail(ErrorCode::usage, "format must be json or csv");
        return get_dpn(csv, digits);
      }
    } else if (is({"alternatives", nullptr, "rams"})) {
      if (m == "GET") return get_rams(parts[1], digits);
    } else if (is({"alternatives", nullptr, "dpn"})) {
      if (m == "GET") return get_alternative_dpn(parts[1], digits);
    } else if (is({"alternatives", nullptr, "evaluations", nullptr})) {
      if (m == "PUT") return put_evaluation(parts[1], parts[3], request.body, digits);
    } else if (is({"properties"})) {
      if (m == "PUT") return put_properties(request.body, digits);
    } else if (is({"whatif"})) {
      if (m == "POST") return post_whatif(request.body, digits);
    } else if (is({"conflicts"})) {
      if (m == "GET") return get_conflicts(request, digits);
    } else if (is({"save"})) {
      if (m == "POST") return post_save(request.body);
    } else {
      known = false;
    }
    if (!known) return error_response(ErrorCode::not_found, "no such endpoint: " + request.path);
    return json_response(405, {{"error",
                                {{"code", "method_not_allowed"},
                                 {"message", m + " is not supported on " + request.path}}}});
  } catch (const Error& e) {
    return error_response(e.code(), e.what());
  } catch (const json::exception& e) {
    return error_response(ErrorCode::schema, e.what());
  } catch (const std::exception& e) {
    return json_response(500, {{"error", {{"code", "internal"}, {"message", e.what()}}}});
  }
}

ApiResponse ApiSession::get_project() const {
  std::shared_lock lock(mutex_);
  return json_response(200, {{"revision", revision_},
                             {"dirty", dirty_},
                             {"project", project_to_json(project_)}});
}

ApiResponse ApiSession::get_rams(const std::string& alternative, int digits) const {
  const State state = read_state();
  const Alternative* alt = state.project.find_alternative(alternative);
  if (!alt) fail(ErrorCode::not_found, "unknown alternative '" + alternative + "'");
  const FlatTree tree = alternative_tree(state.project, alternative);
  const double mission = state.project.fault_trees.at(*alt->tree).mission_time_hours;
  return json_response(200, {{"revision", state.revision},
                             {"alternative", alternative},
                             {"tree", *alt->tree},
                             {"top", tree.top_node().id},
                             {"results", tree_results_to_json(eval_tree(tree, mission), digits)}});
}

ApiResponse ApiSession::get_alternative_dpn(const std::string& alternative, int digits) const {
  const State state = read_state();
  return json_response(200, alternative_dpn(state.project, alternative, state.revision, digits));
}

ApiResponse ApiSession::get_dpn(bool csv, int digits) const {
  const State state = read_state();
  if (csv) return {200, export_results_csv(analyze_project(state.project), digits), "text/csv"};
  return json_response(200, dpn_report(state.project, state.revision, digits));
}

ApiResponse ApiSession::get_conflicts(const ApiRequest& request, int digits) const {
  auto from = request.query.find("from");
  auto to = request.query.find("to");
  if (from == request.query.end() || to == request.query.end())
    fail(ErrorCode::usage, "both 'from' and 'to' query parameters are required");
  const State state = read_state();
  const Alternative* a = state.project.find_alternative(from->second);
  if (!a) fail(ErrorCode::not_found, "unknown alternative '" + from->second + "'");
  const Alternative* b = state.project.find_alternative(to->second);
  if (!b) fail(ErrorCode::not_found, "unknown alternative '" + to->second + "'");
  const DpnResult before = compute_dpn(*a, state.project.properties);
  const DpnResult after = compute_dpn(*b, state.project.properties);
  json conflicts = json::array();
  for (const auto& c : detect_conflicts(before, after))
    conflicts.push_back({{"improved", c.improved}, {"worsened", c.worsened}});
  return json_response(200, {{"revision", state.revision},
                             {"from", {{"id", a->id}, {"dpn", dpn_to_json(before, digits)}}},
                             {"to", {{"id", b->id}, {"dpn", dpn_to_json(after, digits)}}},
                             {"conflicts", std::move(conflicts)}});
}

ApiResponse ApiSession::put_evaluation(const std::string& alternative, const std::string& property,
                                       const std::string& body, int digits) {
  const json request = parse_body(body);
  std::unique_lock lock(mutex_);
  check_revision(request, revision_);
  Project candidate = project_;
  Alternative& alt = require_alternative(candidate, alternative);
  if (!candidate.has_property(property))
    fail(ErrorCode::not_found, "unknown property '" + property + "'");
  auto it = request.find("criteria");
  if (it == request.end()) fail(ErrorCode::schema, "request body: missing field 'criteria'");
  alt.evaluations[property] = criteria_from_json(*it, "criteria");
  require_valid(candidate);

  project_ = std::move(candidate);
  ++revision_;
  dirty_ = true;
  return json_response(200, alternative_dpn(project_, alternative, revision_, digits));
}

ApiResponse ApiSession::put_properties(const std::string& body, int digits) {
  const json request = parse_body(body);
  std::unique_lock lock(mutex_);
  check_revision(request, revision_);
  auto it = request.find("properties");
  if (it == request.end()) fail(ErrorCode::schema, "request body: missing field 'properties'");
  Project candidate = project_;
  candidate.properties = properties_from_json(*it, "properties");
  if (candidate.properties.empty()) fail(ErrorCode::domain, "at least one property is required");
  require_valid(candidate);
  json response = dpn_report(candidate, revision_ + 1, digits);

  project_ = std::move(candidate);
  ++revision_;
  dirty_ = true;
  return json_response(200, response);
}

ApiResponse ApiSession::post_whatif(const std::string& body, int digits) const {
  const json request = parse_body(body);
  State state = read_state();
  Project& p = state.project;

  if (auto props = request.find("properties"); props != request.end() && !props->is_null()) {
    p.properties = properties_from_json(*props, "properties");
    if (p.properties.empty()) fail(ErrorCode::domain, "at least one property is required");
  }
  if (auto overrides = request.find("overrides"); overrides != request.end() && !overrides->is_null()) {
    if (!overrides->is_array()) fail(ErrorCode::schema, "overrides: expected an array");
    std::size_t i = 0;
    for (const auto& o : *overrides) {
      const std::string path = "overrides[" + std::to_string(i++) + "]";
      if (!o.is_object() || !o.contains("alternative") || !o.contains("property"))
        fail(ErrorCode::schema, path + ": expected {alternative, property, criteria | acceptance}");
      Alternative& alt = require_alternative(p, o.at("alternative").get<std::string>());
      const std::string property = o.at("property").get<std::string>();
      if (!p.has_property(property)) fail(ErrorCode::not_found, "unknown property '" + property + "'");
      if (o.contains("criteria")) {
        alt.evaluations[property] = criteria_from_json(o.at("criteria"), path + ".criteria");
      } else if (o.contains("acceptance")) {
        auto ev = alt.evaluations.find(property);
        if (ev == alt.evaluations.end())
          fail(ErrorCode::missing, path + ": alternative '" + alt.id + "' has no evaluation for '" +
                                       property + "' to adjust");
        ev->second.acceptance = o.at("acceptance").get<double>();
      } else {
        fail(ErrorCode::schema, path + ": needs 'criteria' or 'acceptance'");
      }
    }
  }
  require_valid(p);
  return json_response(200, dpn_report(p, state.revision, digits));
}

ApiResponse ApiSession::post_save(const std::string& body) {
  const json request = parse_body(body);
  std::unique_lock lock(mutex_);
  check_revision(request, revision_);
  if (file_.empty()) fail(ErrorCode::io, "this session has no project file to save to");
  save_project_file(file_, project_);
  dirty_ = false;
  return json_response(200, {{"revision", revision_}, {"dirty", false}, {"file", file_.string()}});
}

}  // namespace depra
