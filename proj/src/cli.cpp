#include "depra/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "depra/analysis.hpp"
#include "depra/api_session.hpp"
#include "depra/error.hpp"
#include "depra/http_server.hpp"
#include "depra/mc_oracle.hpp"
#include "depra/project_io.hpp"

namespace depra {

namespace {

using Table = std::vector<std::vector<std::string>>;

// First column left-aligned, the rest right-aligned.
void print_table(std::ostream& out, const Table& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string pad(width[i] - row[i].size(), ' ');
      if (i == 0) line += row[i] + pad;
      else line += "  " + pad + row[i];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

struct Formatter {
  int digits = kDefaultSignificantDigits;

  std::string operator()(double v) const { return format_number(round_significant(v, digits), digits); }
  std::string availability(double a) const { return format_number(round_availability(a, digits), 0); }
};

void print_rams(std::ostream& out, const RamsResult& r, const Formatter& f, const std::string& indent) {
  out << indent << "lambda = " << f(r.lambda_per_hour) << " /h\n"
      << indent << "FIT = " << f(r.fit) << '\n'
      << indent << "MTBF = " << f(r.mtbf_hours) << " h\n"
      << indent << "MTTF = " << f(r.mttf_hours) << " h\n"
      << indent << "MDT = " << f(r.mdt_hours) << " h\n"
      << indent << "A = " << f.availability(r.availability) << '\n'
      << indent << "U = " << f(r.unavailability) << '\n'
      << indent << "mission time = " << f(r.mission_time_hours) << " h\n"
      << indent << "mission unreliability = " << f(r.mission_unreliability) << '\n'
      << indent << "failure frequency = " << f(r.failure_frequency()) << " /h\n";
}

void print_warnings(std::ostream& err, const std::vector<Issue>& warnings) {
  for (const auto& w : warnings) err << "warning[" << w.kind << "]: " << w.message << '\n';
}

int cmd_validate(const std::string& file, std::ostream& out, std::ostream& err) {
  const Project p = parse_project(read_text_file(file));
  const ValidationReport report = validate_project(p);
  print_warnings(err, report.warnings);
  if (!report.ok()) {
    for (const auto& v : report.violations)
      err << "error[" << (v.kind == "reference" ? "reference" : "validation") << "]: " << v.message
          << '\n';
    out << "invalid: " << report.violations.size() << " violation"
        << (report.violations.size() == 1 ? "" : "s") << '\n';
    return 1;
  }
  if (!p.properties.empty()) print_warnings(err, analyze_project(p).comparison.warnings);
  out << "valid: " << (p.name.empty() ? file : p.name) << " (" << p.alternatives.size()
      << " alternatives, " << p.properties.size() << " properties, " << p.fault_trees.size()
      << " fault trees)\n";
  return 0;
}

int cmd_eval(const std::string& file, const std::string& alternative, bool all_nodes, int digits,
             std::ostream& out) {
  const Project p = load_project_file(file);
  const Formatter f{digits};
  bool first = true;
  for (const auto& alt : p.alternatives) {
    if (!alternative.empty() && alt.id != alternative) continue;
    if (!alt.tree) {
      if (!alternative.empty()) alternative_tree(p, alt.id);  // reports qualitative-only
      continue;
    }
    const FlatTree tree = alternative_tree(p, alt.id);
    const double mission = p.fault_trees.at(*alt.tree).mission_time_hours;
    const TreeResults results = eval_tree(tree, mission);
    if (!first) out << '\n';
    first = false;
    out << alt.id << ": " << alt.name << '\n'
        << "  tree: " << *alt.tree << " (top: " << tree.top_node().id << ")\n";
    print_rams(out, results.at(tree.top_node().id), f, "  ");
    if (all_nodes) {
      Table rows{{"  node", "kind", "FIT", "MDT (h)", "U"}};
      for (const auto& node : tree.nodes) {
        const RamsResult& r = results.at(node.id);
        const char* kind = node.kind == NodeKind::basic_event ? "event"
                           : node.kind == NodeKind::and_gate  ? "AND"
                                                              : "OR";
        rows.push_back({"  " + node.id, kind, f(r.fit), f(r.mdt_hours), f(r.unavailability)});
      }
      print_table(out, rows);
    }
  }
  if (!alternative.empty() && first) fail(ErrorCode::not_found, "unknown alternative '" + alternative + "'");
  return 0;
}

int cmd_fmeda(const std::string& file, int digits, std::ostream& out) {
  const Project p = load_project_file(file);
  const Formatter f{digits};

  out << "FMECA\n";
  Table fmeca{{"entry", "failure mode", "S", "O", "D", "RPN", "further action"}};
  for (const auto& e : p.fmeca) {
    fmeca.push_back({e.id + (e.illustrative ? " (illustrative)" : ""), e.failure_mode,
                     std::to_string(e.severity), std::to_string(e.occurrence),
                     std::to_string(e.detection), std::to_string(e.rpn()), ""});
    for (const auto& m : e.measures) {
      fmeca.push_back({"  " + m.name, "", std::to_string(m.severity), std::to_string(m.occurrence),
                       std::to_string(m.detection), std::to_string(m.rpn()),
                       m.further_action.value_or("")});
    }
  }
  print_table(out, fmeca);

  out << "\nFMEDA\n";
  Table fmeda{{"entry", "element", "measure", "lambda_D (FIT)", "DC", "lambda_DD (FIT)",
               "lambda_DU (FIT)", "SFF"}};
  for (const auto& e : p.fmeda) {
    const FmedaSplit s = e.split();
    std::string sff = "n/a";
    if (e.lambda_safe_fit + e.lambda_dangerous_fit > 0.0) sff = f(e.sff());
    fmeda.push_back({e.id, e.element, e.measure, f(e.lambda_dangerous_fit), f(e.detection_coverage),
                     f(s.dangerous_detected_fit), f(s.dangerous_undetected_fit), sff});
  }
  print_table(out, fmeda);
  return 0;
}

void report_excluded(const AnalysisReport& report, std::ostream& err) {
  if (!report.unevaluated.empty()) {
    std::string list;
    for (const auto& id : report.unevaluated) list += (list.empty() ? "" : ", ") + id;
    err << "note: not evaluated, excluded from the comparison: " << list << '\n';
  }
}

void require_complete(const AnalysisReport& report) {
  if (report.incomplete.empty()) return;
  const auto& gap = report.incomplete.front();
  std::string list;
  for (const auto& m : gap.missing) list += (list.empty() ? "" : ", ") + m;
  fail(ErrorCode::missing, "alternative '" + gap.id + "' has no evaluation for: " + list);
}

void print_dpn_table(const ComparisonReport& cmp, const Formatter& f, std::ostream& out) {
  Table rows{{"Statistic"}};
  for (const auto& a : cmp.alternatives) rows[0].push_back(a.name);
  for (std::size_t i = 0; i < cmp.properties.size(); ++i) {
    std::vector<std::string> row{cmp.properties[i].name};
    for (const auto& a : cmp.alternatives) row.push_back(f(a.dpn.contributions[i].value));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> totals{"DPN"};
  for (const auto& a : cmp.alternatives) totals.push_back(f(a.dpn.total));
  rows.push_back(std::move(totals));
  print_table(out, rows);
}

std::string ranking_text(const ComparisonReport& cmp) {
  std::string text;
  for (std::size_t i : cmp.ranking) text += (text.empty() ? "" : " > ") + cmp.alternatives[i].id;
  return text;
}

int cmd_dpn(const std::string& file, int digits, std::ostream& out, std::ostream& err) {
  const Project p = load_project_file(file);
  const AnalysisReport report = analyze_project(p);
  require_complete(report);
  report_excluded(report, err);
  print_warnings(err, report.comparison.warnings);
  const Formatter f{digits};
  out << "Expected DPN: " << f(report.comparison.expected_total) << '\n'
      << "Ranking: " << ranking_text(report.comparison) << "\n\n";
  print_dpn_table(report.comparison, f, out);
  return 0;
}

int cmd_compare(const std::string& file, const std::string& csv_path, int digits, std::ostream& out,
                std::ostream& err) {
  const Project p = load_project_file(file);
  const AnalysisReport report = analyze_project(p);
  require_complete(report);
  report_excluded(report, err);
  print_warnings(err, report.comparison.warnings);
  const Formatter f{digits};

  Table rams{{"Result"}};
  for (const auto& r : report.rams) rams[0].push_back(r.id);
  auto add = [&](const char* label, auto value) {
    std::vector<std::string> row{label};
    for (const auto& r : report.rams) row.push_back(value(r.top));
    rams.push_back(std::move(row));
  };
  add("Availability", [&](const RamsResult& r) { return f.availability(r.availability); });
  add("Unavailability", [&](const RamsResult& r) { return f(r.unavailability); });
  add("MTBF (h)", [&](const RamsResult& r) { return f(r.mtbf_hours); });
  add("Failure rate (1/h)", [&](const RamsResult& r) { return f(r.lambda_per_hour); });
  add("FIT", [&](const RamsResult& r) { return f(r.fit); });
  add("MDT (h)", [&](const RamsResult& r) { return f(r.mdt_hours); });
  print_table(out, rams);
  out << '\n';

  const ComparisonReport& cmp = report.comparison;
  Table ranking{{"Rank", "Alternative", "Actual DPN", "Expected DPN", "All fulfilled"}};
  std::size_t rank = 1;
  for (std::size_t i : cmp.ranking) {
    const auto& a = cmp.alternatives[i];
    ranking.push_back({std::to_string(rank++), a.name, f(a.dpn.total), f(a.dpn.expected_total),
                       a.all_fulfilled ? "yes" : "no"});
  }
  print_table(out, ranking);

  if (!csv_path.empty()) {
    const std::string csv = export_results_csv(report, digits);
    if (csv_path == "-") {
      out << '\n' << csv;
    } else {
      std::ofstream file_out(csv_path, std::ios::binary | std::ios::trunc);
      if (!file_out || !(file_out << csv)) fail(ErrorCode::io, "cannot write '" + csv_path + "'");
    }
  }
  return 0;
}

int cmd_simulate(const std::string& file, const std::string& alternative, double horizon,
                 std::uint64_t seed, std::size_t replications, double k_sigma, bool check,
                 int digits, std::ostream& out) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) fail(ErrorCode::usage, "--horizon must be > 0");
  if (replications < 2) fail(ErrorCode::usage, "--replications must be at least 2");
  if (!(k_sigma > 0.0)) fail(ErrorCode::usage, "--k-sigma must be > 0");
  const Project p = load_project_file(file);
  const FlatTree tree = alternative_tree(p, alternative);
  const OracleReport r = compare_to_analytic(tree, horizon, seed, k_sigma, SimOptions{replications});
  const Formatter f{digits};
  const SimEstimate& e = r.estimate;

  out << "alternative: " << alternative << '\n'
      << "horizon: " << f(horizon) << " h x " << e.samples << " replications, seed " << seed << '\n'
      << "leaf transitions: " << e.leaf_events << '\n'
      << "U analytic = " << f(r.analytic.unavailability) << '\n'
      << "U simulated = " << f(e.unavailability_hat) << " +/- " << f(e.unavailability_stderr) << '\n'
      << "failure frequency analytic = " << f(r.analytic.failure_frequency()) << " /h\n"
      << "failure frequency simulated = " << f(e.failure_frequency_hat) << " +/- "
      << f(e.failure_frequency_stderr) << " /h\n";
  if (e.no_events) out << "note: no transitions observed; increase --horizon\n";
  out << "verdict: " << (r.pass ? "PASS" : "FAIL") << " (|U analytic - U simulated| = "
      << f(r.deviation) << ", limit " << f(k_sigma * e.unavailability_stderr) << ")\n";
  if (check && !r.pass)
    fail(ErrorCode::inconsistent, "simulation disagrees with the analytic unavailability");
  return 0;
}

int cmd_serve(const std::string& file, const std::string& host, int port, const std::string& origin,
              std::ostream& out) {
  if (port < 0 || port > 65535) fail(ErrorCode::usage, "--port must be in 0..65535");
  ApiSession session(load_project_file(file), file);
  HttpServer server(session, origin);
  const int bound = server.bind(host, port);
  out << "serving " << file << " on http://" << host << ":" << bound << std::endl;
  server.listen();
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dependability analysis of design alternatives", "depra"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::string file, alternative, csv_path, host = "127.0.0.1", origin = "*";
  bool all_nodes = false, full_precision = false, check = false;
  double horizon = 0.0, k_sigma = 3.0;
  std::uint64_t seed = 0;
  std::size_t replications = SimOptions{}.replications;
  int port = 8080;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Project file")->required();
  };
  auto add_precision = [&](CLI::App* sub) {
    sub->add_flag("--full-precision", full_precision, "Print reals with every significant digit");
  };

  CLI::App* validate = app.add_subcommand("validate", "Check a project file");
  add_file(validate);

  CLI::App* eval = app.add_subcommand("eval", "Steady-state RAMS figures per alternative");
  add_file(eval);
  eval->add_option("--alternative", alternative, "Only this alternative");
  eval->add_flag("--all-nodes", all_nodes, "Also list every node of the fault tree");
  add_precision(eval);

  CLI::App* fmeda = app.add_subcommand("fmeda", "FMECA and FMEDA worksheets");
  add_file(fmeda);
  add_precision(fmeda);

  CLI::App* dpn = app.add_subcommand("dpn", "DPN contributions and totals");
  add_file(dpn);
  add_precision(dpn);

  CLI::App* compare = app.add_subcommand("compare", "Compare alternatives");
  add_file(compare);
  compare->add_option("--csv", csv_path, "Also write the result tables as CSV ('-' for stdout)");
  add_precision(compare);

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo check of an alternative's tree");
  add_file(simulate);
  simulate->add_option("--alternative", alternative, "Alternative to simulate")->required();
  simulate->add_option("--horizon", horizon, "Simulated hours per replication")->required();
  simulate->add_option("--seed", seed, "Random seed")->required();
  simulate->add_option("--replications", replications, "Independent replications")
      ->capture_default_str();
  simulate->add_option("--k-sigma", k_sigma, "Acceptance band in standard errors")
      ->capture_default_str();
  simulate->add_flag("--check", check, "Exit with status 1 when outside the band");
  add_precision(simulate);

  CLI::App* serve = app.add_subcommand("serve", "Serve the HTTP API for a project");
  add_file(serve);
  serve->add_option("--port", port, "TCP port (default 8080, or DEPRA_PORT)")->envname("DEPRA_PORT");
  serve->add_option("--host", host, "Listen address")->capture_default_str();
  serve->add_option("--allow-origin", origin, "CORS allowed origin")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error[" << code_name(ErrorCode::usage) << "]: " << e.what() << '\n';
    return 2;
  }

  const int digits = full_precision ? 0 : kDefaultSignificantDigits;
  try {
    if (validate->parsed()) return cmd_validate(file, out, err);
    if (eval->parsed()) return cmd_eval(file, alternative, all_nodes, digits, out);
    if (fmeda->parsed()) return cmd_fmeda(file, digits, out);
    if (dpn->parsed()) return cmd_dpn(file, digits, out, err);
    if (compare->parsed()) return cmd_compare(file, csv_path, digits, out, err);
    if (simulate->parsed())
      return cmd_simulate(file, alternative, horizon, seed, replications, k_sigma, check, digits, out);
    if (serve->parsed()) return cmd_serve(file, host, port, origin, out);
  } catch (const Error& e) {
    err << "error[" << code_name(e.code()) << "]: " << e.what() << '\n';
    return e.code() == ErrorCode::usage ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace depra
