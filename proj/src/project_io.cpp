#include "depra/project_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "depra/error.hpp"

namespace depra {

using nlohmann::json;

namespace {

// ---- reading ---------------------------------------------------------------

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  fail(ErrorCode::schema, path + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, std::string("missing field '") + key + "'");
  return *it;
}

const json* optional_field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  return &*it;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<int>();
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) schema_error(path, "expected true or false");
  return j.get<bool>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

const json& as_object(const json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  return j;
}

std::string get_string(const json& obj, const char* key, const std::string& path) {
  return as_string(field(obj, key, path), path + "." + key);
}

std::string get_string_or(const json& obj, const char* key, const std::string& path,
                          std::string fallback = {}) {
  const json* j = optional_field(obj, key, path);
  return j ? as_string(*j, path + "." + key) : fallback;
}

double get_number(const json& obj, const char* key, const std::string& path) {
  return as_number(field(obj, key, path), path + "." + key);
}

std::optional<double> get_optional_number(const json& obj, const char* key, const std::string& path) {
  const json* j = optional_field(obj, key, path);
  if (!j) return std::nullopt;
  return as_number(*j, path + "." + key);
}

std::vector<std::string> get_strings(const json& obj, const char* key, const std::string& path) {
  std::vector<std::string> out;
  const json* j = optional_field(obj, key, path);
  if (!j) return out;
  const std::string p = path + "." + key;
  std::size_t i = 0;
  for (const auto& item : as_array(*j, p)) out.push_back(as_string(item, p + "[" + std::to_string(i++) + "]"));
  return out;
}

std::map<std::string, std::string> get_string_map(const json& obj, const char* key,
                                                  const std::string& path) {
  std::map<std::string, std::string> out;
  const json* j = optional_field(obj, key, path);
  if (!j) return out;
  const std::string p = path + "." + key;
  for (const auto& [k, v] : as_object(*j, p).items()) out.emplace(k, as_string(v, p + "." + k));
  return out;
}

template <class F>
void for_each_item(const json& obj, const char* key, const std::string& path, F&& f) {
  const json* j = optional_field(obj, key, path);
  if (!j) return;
  const std::string p = path + "." + key;
  std::size_t i = 0;
  for (const auto& item : as_array(*j, p)) {
    f(item, p + "[" + std::to_string(i) + "]");
    ++i;
  }
}

template <class E>
E get_enum(const json& obj, const char* key, const std::string& path) {
  const json* j = optional_field(obj, key, path);
  if (!j) return E{};
  const std::string text = as_string(*j, path + "." + key);
  auto value = from_text<E>(text);
  if (!value) {
    std::string allowed;
    for (auto n : EnumText<E>::names) allowed += (allowed.empty() ? "" : ", ") + std::string(n);
    schema_error(path + "." + key, "unknown value '" + text + "' (expected one of: " + allowed + ")");
  }
  return *value;
}

BasicEvent read_event(const json& j, const std::string& path) {
  BasicEvent e;
  e.id = get_string(j, "id", path);
  e.name = get_string_or(j, "name", path);
  e.failure_rate_fit = get_number(j, "failure_rate_fit", path);
  e.mdt_hours = get_number(j, "mdt_hours", path);
  return e;
}

Gate read_gate(const json& j, const std::string& path) {
  Gate g;
  g.id = get_string(j, "id", path);
  const std::string kind = get_string(j, "kind", path);
  auto parsed = parse_gate_kind(kind);
  if (!parsed) schema_error(path + ".kind", "unknown gate kind '" + kind + "' (expected AND or OR)");
  g.kind = *parsed;
  g.inputs = get_strings(j, "inputs", path);
  return g;
}

ComponentInstance read_instance(const json& j, const std::string& path) {
  ComponentInstance inst;
  inst.id = get_string(j, "id", path);
  inst.definition = get_string(j, "definition", path);
  inst.inputs = get_string_map(j, "inputs", path);
  return inst;
}

template <class Body>
void read_body(const json& j, const std::string& path, Body& body) {
  for_each_item(j, "basic_events", path,
                [&](const json& item, const std::string& p) { body.basic_events.push_back(read_event(item, p)); });
  for_each_item(j, "gates", path,
                [&](const json& item, const std::string& p) { body.gates.push_back(read_gate(item, p)); });
  for_each_item(j, "instances", path, [&](const json& item, const std::string& p) {
    body.instances.push_back(read_instance(item, p));
  });
}

FaultTreeModel read_tree(const json& j, const std::string& path) {
  as_object(j, path);
  FaultTreeModel m;
  for_each_item(j, "components", path, [&](const json& item, const std::string& p) {
    ComponentDefinition d;
    d.id = get_string(item, "id", p);
    d.name = get_string_or(item, "name", p);
    d.inports = get_strings(item, "inports", p);
    d.unused_inports = get_strings(item, "unused_inports", p);
    d.outports = get_string_map(item, "outports", p);
    read_body(item, p, d);
    m.components.push_back(std::move(d));
  });
  read_body(j, path, m);
  m.top = get_string(j, "top", path);
  m.mission_time_hours =
      get_optional_number(j, "mission_time_hours", path).value_or(kDefaultMissionTimeHours);
  return m;
}

RatedMeasure read_measure(const json& j, const std::string& path) {
  RatedMeasure m;
  m.name = get_string(j, "name", path);
  m.alternatives = get_strings(j, "alternatives", path);
  m.severity = as_int(field(j, "severity", path), path + ".severity");
  m.occurrence = as_int(field(j, "occurrence", path), path + ".occurrence");
  m.detection = as_int(field(j, "detection", path), path + ".detection");
  if (const json* fa = optional_field(j, "further_action", path))
    m.further_action = as_string(*fa, path + ".further_action");
  return m;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// ---- writing ---------------------------------------------------------------

json number(double value, int digits) { return round_significant(value, digits); }

json event_json(const BasicEvent& e, int digits) {
  return {{"id", e.id},
          {"name", e.name},
          {"failure_rate_fit", number(e.failure_rate_fit, digits)},
          {"mdt_hours", number(e.mdt_hours, digits)}};
}

template <class Body>
void write_body(json& out, const Body& body, int digits) {
  out["basic_events"] = json::array();
  for (const auto& e : body.basic_events) out["basic_events"].push_back(event_json(e, digits));
  out["gates"] = json::array();
  for (const auto& g : body.gates)
    out["gates"].push_back({{"id", g.id}, {"kind", gate_kind_name(g.kind)}, {"inputs", g.inputs}});
  out["instances"] = json::array();
  for (const auto& i : body.instances)
    out["instances"].push_back({{"id", i.id}, {"definition", i.definition}, {"inputs", i.inputs}});
}

json tree_json(const FaultTreeModel& m, int digits) {
  json out = json::object();
  out["components"] = json::array();
  for (const auto& d : m.components) {
    json c = {{"id", d.id},
              {"name", d.name},
              {"inports", d.inports},
              {"unused_inports", d.unused_inports},
              {"outports", d.outports}};
    write_body(c, d, digits);
    out["components"].push_back(std::move(c));
  }
  write_body(out, m, digits);
  out["top"] = m.top;
  out["mission_time_hours"] = number(m.mission_time_hours, digits);
  return out;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}

void csv_row(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_field(cells[i]);
  }
  out += "\r\n";
}

}  // namespace

Project parse_project(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    fail(ErrorCode::parse, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                               ": " + what);
  }
  const std::string root = "$";
  as_object(doc, root);

  Project p;
  p.schema_version = get_string(doc, "schema_version", root);
  if (p.schema_version != kSchemaVersion)
    fail(ErrorCode::version, "unsupported schema_version '" + p.schema_version + "' (expected '" +
                                 std::string(kSchemaVersion) + "')");
  p.name = get_string_or(doc, "name", root);
  p.description = get_string_or(doc, "description", root);

  for_each_item(doc, "goals", root, [&](const json& j, const std::string& path) {
    p.goals.push_back({get_string(j, "id", path), get_string_or(j, "text", path),
                       get_string_or(j, "limits", path)});
  });
  for_each_item(doc, "scenarios", root, [&](const json& j, const std::string& path) {
    p.scenarios.push_back({get_string(j, "id", path), get_string_or(j, "text", path)});
  });
  for_each_item(doc, "functional_requirements", root, [&](const json& j, const std::string& path) {
    p.functional_requirements.push_back(
        {get_string(j, "id", path), get_string_or(j, "text", path), get_string(j, "scenario", path)});
  });
  for_each_item(doc, "hazards", root, [&](const json& j, const std::string& path) {
    p.hazards.push_back(
        {get_string(j, "id", path), get_string_or(j, "text", path), get_string(j, "requirement", path)});
  });
  if (const json* props = optional_field(doc, "properties", root))
    p.properties = properties_from_json(*props, "$.properties");

  for_each_item(doc, "alternatives", root, [&](const json& j, const std::string& path) {
    Alternative a;
    a.id = get_string(j, "id", path);
    a.name = get_string_or(j, "name", path, a.id);
    const std::string kind = get_string_or(j, "kind", path, "measure");
    auto parsed = parse_alternative_kind(kind);
    if (!parsed)
      schema_error(path + ".kind", "unknown kind '" + kind + "' (expected design_alternative or measure)");
    a.kind = *parsed;
    if (const json* t = optional_field(j, "tree", path)) a.tree = as_string(*t, path + ".tree");
    if (const json* s = optional_field(j, "sil", path)) a.sil = as_string(*s, path + ".sil");
    if (const json* ev = optional_field(j, "evaluations", path)) {
      for (const auto& [prop, c] : as_object(*ev, path + ".evaluations").items())
        a.evaluations.emplace(prop, criteria_from_json(c, path + ".evaluations." + prop));
    }
    p.alternatives.push_back(std::move(a));
  });

  if (const json* trees = optional_field(doc, "fault_trees", root)) {
    for (const auto& [id, t] : as_object(*trees, "$.fault_trees").items())
      p.fault_trees.emplace(id, read_tree(t, "$.fault_trees." + id));
  }

  for_each_item(doc, "fmeca", root, [&](const json& j, const std::string& path) {
    FmecaEntry e;
    e.id = get_string(j, "id", path);
    e.function = get_string_or(j, "function", path);
    e.failure_mode = get_string_or(j, "failure_mode", path);
    e.severity = as_int(field(j, "severity", path), path + ".severity");
    e.occurrence = as_int(field(j, "occurrence", path), path + ".occurrence");
    e.detection = as_int(field(j, "detection", path), path + ".detection");
    if (const json* il = optional_field(j, "illustrative", path)) e.illustrative = as_bool(*il, path + ".illustrative");
    for_each_item(j, "measures", path,
                  [&](const json& m, const std::string& mp) { e.measures.push_back(read_measure(m, mp)); });
    p.fmeca.push_back(std::move(e));
  });

  for_each_item(doc, "fmeda", root, [&](const json& j, const std::string& path) {
    FmedaEntry e;
    e.id = get_string(j, "id", path);
    e.element = get_string_or(j, "element", path);
    e.measure = get_string_or(j, "measure", path);
    e.alternatives = get_strings(j, "alternatives", path);
    e.lambda_dangerous_fit = get_number(j, "lambda_dangerous_fit", path);
    e.detection_coverage = get_number(j, "detection_coverage", path);
    e.lambda_safe_fit = get_optional_number(j, "lambda_safe_fit", path).value_or(0.0);
    p.fmeda.push_back(std::move(e));
  });
  return p;
}

Project load_project(std::string_view text) {
  Project p = parse_project(text);
  const ValidationReport report = validate_project(p);
  for (const auto& v : report.violations)
    if (v.kind == "reference") fail(ErrorCode::reference, v.message);
  if (!report.ok()) {
    std::string msg = report.violations.front().message;
    if (report.violations.size() > 1)
      msg += " (and " + std::to_string(report.violations.size() - 1) + " more)";
    fail(ErrorCode::validation, msg);
  }
  return p;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Project load_project_file(const std::filesystem::path& path) {
  return load_project(read_text_file(path));
}

json criteria_to_json(const TradeoffCriteria& c, int digits) {
  json out = {
      {"actual", {{"value", number(c.actual.value, digits)}, {"unit", c.actual.unit}}},
      {"expected", {{"value", number(c.expected.value, digits)}, {"unit", c.expected.unit}}},
      {"benefit", to_text(c.benefit)},
      {"drawback", to_text(c.drawback)},
      {"cost", to_text(c.cost)},
      {"time_to_achieve", to_text(c.time_to_achieve)},
      {"further_action", to_text(c.further_action)},
      {"acceptance", number(c.acceptance, digits)},
  };
  if (c.upper_limit) out["upper_limit"] = number(*c.upper_limit, digits);
  if (c.lower_limit) out["lower_limit"] = number(*c.lower_limit, digits);
  return out;
}

TradeoffCriteria criteria_from_json(const json& j, const std::string& path) {
  as_object(j, path);
  TradeoffCriteria c;
  const json& actual = field(j, "actual", path);
  c.actual = {get_number(actual, "value", path + ".actual"), get_string(actual, "unit", path + ".actual")};
  const json& expected = field(j, "expected", path);
  c.expected = {get_number(expected, "value", path + ".expected"),
                get_string(expected, "unit", path + ".expected")};
  c.upper_limit = get_optional_number(j, "upper_limit", path);
  c.lower_limit = get_optional_number(j, "lower_limit", path);
  c.benefit = get_enum<Benefit>(j, "benefit", path);
  c.drawback = get_enum<Drawback>(j, "drawback", path);
  c.cost = get_enum<ImprovementCost>(j, "cost", path);
  c.time_to_achieve = get_enum<TimeToAchieve>(j, "time_to_achieve", path);
  c.further_action = get_enum<FurtherAction>(j, "further_action", path);
  c.acceptance = get_number(j, "acceptance", path);
  return c;
}

json properties_to_json(std::span<const DependabilityProperty> properties, int digits) {
  json out = json::array();
  for (const auto& p : properties) out.push_back({{"name", p.name}, {"weight", number(p.weight, digits)}});
  return out;
}

std::vector<DependabilityProperty> properties_from_json(const json& j, const std::string& path) {
  std::vector<DependabilityProperty> out;
  std::size_t i = 0;
  for (const auto& item : as_array(j, path)) {
    const std::string p = path + "[" + std::to_string(i++) + "]";
    out.push_back({get_string(item, "name", p), get_number(item, "weight", p)});
  }
  return out;
}

json project_to_json(const Project& p, int digits) {
  json out = json::object();
  out["schema_version"] = p.schema_version;
  out["name"] = p.name;
  out["description"] = p.description;

  out["goals"] = json::array();
  for (const auto& g : p.goals) out["goals"].push_back({{"id", g.id}, {"text", g.text}, {"limits", g.limits}});
  out["scenarios"] = json::array();
  for (const auto& s : p.scenarios) out["scenarios"].push_back({{"id", s.id}, {"text", s.text}});
  out["functional_requirements"] = json::array();
  for (const auto& r : p.functional_requirements)
    out["functional_requirements"].push_back({{"id", r.id}, {"text", r.text}, {"scenario", r.scenario}});
  out["hazards"] = json::array();
  for (const auto& h : p.hazards)
    out["hazards"].push_back({{"id", h.id}, {"text", h.text}, {"requirement", h.requirement}});

  out["properties"] = properties_to_json(p.properties, digits);

  out["alternatives"] = json::array();
  for (const auto& a : p.alternatives) {
    json alt = {{"id", a.id}, {"name", a.name}, {"kind", alternative_kind_text(a.kind)}};
    if (a.tree) alt["tree"] = *a.tree;
    if (a.sil) alt["sil"] = *a.sil;
    alt["evaluations"] = json::object();
    for (const auto& [prop, c] : a.evaluations) alt["evaluations"][prop] = criteria_to_json(c, digits);
    out["alternatives"].push_back(std::move(alt));
  }

  out["fault_trees"] = json::object();
  for (const auto& [id, m] : p.fault_trees) out["fault_trees"][id] = tree_json(m, digits);

  out["fmeca"] = json::array();
  for (const auto& e : p.fmeca) {
    json entry = {{"id", e.id},
                  {"function", e.function},
                  {"failure_mode", e.failure_mode},
                  {"severity", e.severity},
                  {"occurrence", e.occurrence},
                  {"detection", e.detection},
                  {"illustrative", e.illustrative},
                  {"measures", json::array()}};
    for (const auto& m : e.measures) {
      json mj = {{"name", m.name},
                 {"alternatives", m.alternatives},
                 {"severity", m.severity},
                 {"occurrence", m.occurrence},
                 {"detection", m.detection}};
      if (m.further_action) mj["further_action"] = *m.further_action;
      entry["measures"].push_back(std::move(mj));
    }
    out["fmeca"].push_back(std::move(entry));
  }

  out["fmeda"] = json::array();
  for (const auto& e : p.fmeda) {
    out["fmeda"].push_back({{"id", e.id},
                            {"element", e.element},
                            {"measure", e.measure},
                            {"alternatives", e.alternatives},
                            {"lambda_dangerous_fit", number(e.lambda_dangerous_fit, digits)},
                            {"detection_coverage", number(e.detection_coverage, digits)},
                            {"lambda_safe_fit", number(e.lambda_safe_fit, digits)}});
  }
  return out;
}

std::string save_project(const Project& project, const SaveOptions& options) {
  return project_to_json(project, options.significant_digits)
             .dump(2, ' ', false, json::error_handler_t::strict) +
         "\n";
}

void save_project_file(const std::filesystem::path& path, const Project& project,
                       const SaveOptions& options) {
  const std::string text = save_project(project, options);
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::io, "cannot write '" + tmp.string() + "'");
    out << text;
    if (!out.flush()) fail(ErrorCode::io, "cannot write '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail(ErrorCode::io, "cannot replace '" + path.string() + "': " + ec.message());
}

double round_availability(double availability, int digits) {
  if (digits <= 0 || !std::isfinite(availability) || availability >= 1.0 || availability <= 0.0)
    return availability;
  const double unavailability = 1.0 - availability;
  const int exponent = static_cast<int>(std::floor(std::log10(unavailability)));
  const int decimals = std::max(digits, digits - 1 - exponent);
  if (decimals > 17) return availability;
  const double scale = std::pow(10.0, decimals);
  return std::round(availability * scale) / scale;
}

json rams_to_json(const RamsResult& r, int digits) {
  auto num = [&](double v) -> json {
    if (!std::isfinite(v)) return format_number(v);
    return number(v, digits);
  };
  return {{"lambda_per_hour", num(r.lambda_per_hour)},
          {"fit", num(r.fit)},
          {"mtbf_hours", num(r.mtbf_hours)},
          {"mttf_hours", num(r.mttf_hours)},
          {"mdt_hours", num(r.mdt_hours)},
          {"availability", round_availability(r.availability, digits)},
          {"unavailability", num(r.unavailability)},
          {"mission_time_hours", num(r.mission_time_hours)},
          {"mission_unreliability", num(r.mission_unreliability)},
          {"failure_frequency_per_hour", num(r.failure_frequency())}};
}

json tree_results_to_json(const TreeResults& results, int digits) {
  json out = json::object();
  for (const auto& [id, r] : results) out[id] = rams_to_json(r, digits);
  return out;
}

json dpn_to_json(const DpnResult& dpn, int digits) {
  json contributions = json::array();
  for (const auto& c : dpn.contributions) {
    contributions.push_back({{"property", c.property},
                             {"weight", number(c.weight, digits)},
                             {"acceptance", number(c.acceptance, digits)},
                             {"value", number(c.value, digits)}});
  }
  return {{"contributions", std::move(contributions)},
          {"total", number(dpn.total, digits)},
          {"expected_total", number(dpn.expected_total, digits)}};
}

json issues_to_json(const std::vector<Issue>& issues) {
  json out = json::array();
  for (const auto& i : issues) out.push_back({{"kind", i.kind}, {"subject", i.subject}, {"message", i.message}});
  return out;
}

json comparison_to_json(const ComparisonReport& report, int digits) {
  json alternatives = json::array();
  for (const auto& a : report.alternatives) {
    alternatives.push_back({{"id", a.id},
                            {"name", a.name},
                            {"dpn", dpn_to_json(a.dpn, digits)},
                            {"fulfilled", a.fulfilled},
                            {"all_fulfilled", a.all_fulfilled}});
  }
  json ranking = json::array();
  for (std::size_t i : report.ranking) ranking.push_back(report.alternatives[i].id);

  auto series = [&](const ChartSeries& s) {
    json values = json::array();
    for (double v : s.values) values.push_back(number(v, digits));
    return json{{"name", s.name}, {"values", std::move(values)}};
  };
  json by_property = json::array();
  for (const auto& s : report.property_series) by_property.push_back(series(s));

  return {{"properties", properties_to_json(report.properties, digits)},
          {"expected_total", number(report.expected_total, digits)},
          {"alternatives", std::move(alternatives)},
          {"ranking", std::move(ranking)},
          {"charts",
           {{"by_property", std::move(by_property)},
            {"actual", series(report.actual_series)},
            {"expected", series(report.expected_series)}}},
          {"warnings", issues_to_json(report.warnings)}};
}

std::string export_results_csv(const AnalysisReport& results, int digits) {
  auto num = [&](double v) { return format_number(round_significant(v, digits), digits); };
  std::string out;

  std::vector<std::string> header{"Result"};
  for (const auto& r : results.rams) header.push_back(r.name);
  csv_row(out, header);
  if (!results.rams.empty()) {
    struct Row {
      const char* label;
      double RamsResult::*field;
    };
    const Row rows[] = {
        {"Unavailability", &RamsResult::unavailability},
        {"MTBF (h)", &RamsResult::mtbf_hours},
        {"Failure rate lambda (1/h)", &RamsResult::lambda_per_hour},
        {"FIT", &RamsResult::fit},
        {"MDT (h)", &RamsResult::mdt_hours},
        {"MTTF (h)", &RamsResult::mttf_hours},
        {"Mission time (h)", &RamsResult::mission_time_hours},
        {"Mission unreliability", &RamsResult::mission_unreliability},
    };
    std::vector<std::string> availability{"Availability"};
    for (const auto& r : results.rams)
      availability.push_back(format_number(round_availability(r.top.availability, digits), 0));
    csv_row(out, availability);
    for (const auto& row : rows) {
      std::vector<std::string> cells{row.label};
      for (const auto& r : results.rams) cells.push_back(num(r.top.*row.field));
      csv_row(out, cells);
    }
  }
  out += "\r\n";

  const ComparisonReport& cmp = results.comparison;
  header = {"Statistic"};
  for (const auto& a : cmp.alternatives) header.push_back(a.name);
  csv_row(out, header);
  if (!cmp.alternatives.empty()) {
    for (std::size_t i = 0; i < cmp.properties.size(); ++i) {
      std::vector<std::string> cells{cmp.properties[i].name};
      for (const auto& a : cmp.alternatives) cells.push_back(num(a.dpn.contributions[i].value));
      csv_row(out, cells);
    }
    std::vector<std::string> totals{"DPN"};
    for (const auto& a : cmp.alternatives) totals.push_back(num(a.dpn.total));
    csv_row(out, totals);
  }
  out += "\r\n";

  csv_row(out, {"Alternative", "Actual DPN", "Expected DPN"});
  for (const auto& a : cmp.alternatives)
    csv_row(out, {a.name, num(a.dpn.total), num(a.dpn.expected_total)});
  return out;
}

}  // namespace depra
