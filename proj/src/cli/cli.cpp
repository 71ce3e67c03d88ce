#include "portrail/cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "portrail/analytics/analyses.hpp"
#include "portrail/core/types.hpp"
#include "portrail/metrics/kpi.hpp"
#include "portrail/scenarios/calibration.hpp"
#include "portrail/scenarios/io.hpp"
#include "portrail/scenarios/presets.hpp"
#include "portrail/scenarios/resolve.hpp"
#include "portrail/scenarios/run.hpp"

namespace portrail::cli
{
namespace
{
struct RunFlags
{
  std::string scenario;
  std::optional<std::uint64_t> seed;
  std::optional<int> days;
};

void add_run_flags(CLI::App* cmd, RunFlags& f)
{
  cmd->add_option("--scenario", f.scenario, "preset name or scenario JSON file")->required();
  cmd->add_option("--seed", f.seed, "override the scenario seed");
  cmd->add_option("--days", f.days, "override the horizon in days");
}

scenarios::ScenarioConfig load(const RunFlags& f)
{
  scenarios::ScenarioConfig s = scenarios::load_scenario_ref(f.scenario);
  if (f.seed) s.seed = *f.seed;
  if (f.days) s.horizon_days = *f.days;
  return scenarios::resolve(std::move(s));
}

void print_summary(std::ostream& out, const metrics::KpiReport& r)
{
  out << std::fixed << std::setprecision(2);
  out << "scenario        " << r.scenario << "\n"
      << "trains/day      " << r.trains_per_day << "\n"
      << "annual TEU      " << std::setprecision(0) << r.annual_teu << "\n"
      << std::setprecision(2) << "lifting %       " << r.pct_lifting << "\n"
      << "shunting %      " << r.pct_shunting << "\n"
      << "single line     " << r.single_line_trips_per_day << " trips/day ("
      << r.single_line_utilisation_pct << "%)\n";
  for (const auto& t : r.terminals) {
    if (t.services == 0) continue;
    out << "  " << std::left << std::setw(14) << t.terminal << std::right << " utilisation "
        << t.utilisation << ", " << t.services << " services\n";
  }
  out.unsetf(std::ios::floatfield);
}

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_simulate(const RunFlags& f, const std::string& out_path, const std::string& trace_path,
                 std::ostream& out)
{
  const auto scenario = load(f);
  const auto result = scenarios::run(scenario);
  if (!out_path.empty()) {
    metrics::write_file(out_path, metrics::report_to_json(result.report).dump(2) + "\n");
  }
  if (!trace_path.empty()) metrics::write_file(trace_path, metrics::trace_to_csv(result.trace));
  print_summary(out, result.report);
  return kExitOk;
}

int cmd_export_trace(const RunFlags& f, const std::string& out_path, std::ostream& out)
{
  const auto trace = scenarios::simulate(load(f));
  metrics::write_file(out_path, metrics::trace_to_csv(trace));
  out << "wrote " << trace.events.size() << " trace rows to " << out_path << "\n";
  return kExitOk;
}

int cmd_sweep(const RunFlags& f, const std::string& param, const std::string& values_spec,
              const std::string& out_dir, int jobs, std::ostream& out)
{
  const auto base = load(f);
  const auto values = scenarios::parse_values(values_spec);
  const auto reports = scenarios::sweep(base, param, values, jobs);

  std::ostringstream table;
  table << param << ",annual_teu,trains_per_day,pct_lifting\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    table << values[i] << ',' << std::fixed << std::setprecision(1) << reports[i].annual_teu << ','
          << std::setprecision(4) << reports[i].trains_per_day << ',' << reports[i].pct_lifting << "\n";
  }
  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto path = std::filesystem::path(out_dir) / ("report_" + param + "_" + values[i] + ".json");
      metrics::write_file(path.string(), metrics::report_to_json(reports[i]).dump(2) + "\n");
    }
    metrics::write_file((std::filesystem::path(out_dir) / "summary.csv").string(), table.str());
  }
  out << table.str();
  return kExitOk;
}

int cmd_calibrate(double per_day, double lifting_pct, int terminals, int lifts, bool stock,
                  const std::string& out_path, std::ostream& out)
{
  nlohmann::json j;
  if (stock) {
    const auto c = scenarios::default_calibration(scenarios::Timings{});
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [name, cal] : c.terminals) {
      t[name] = {{"max_lift_rate", cal.max_lift_rate},
                 {"shunt_in_min", cal.shunt_in_min},
                 {"shunt_out_min", cal.shunt_out_min}};
    }
    j = {{"terminals", t},
         {"inspection_min_per_100m", c.inspection_min_per_100m},
         {"derivation_note", c.derivation_note}};
  } else {
    const scenarios::ObservedRow row{per_day, lifting_pct, terminals, lifts};
    const auto s = scenarios::solve_cycle(row);
    const auto c = scenarios::calibrate(row);
    j = {{"cycle_min", s.cycle_min},
         {"lifting_min", s.lifting_min},
         {"shunt_min", s.shunt_min},
         {"rate_per_hr", s.rate_per_hr},
         {"max_lift_rate", c.terminals.begin()->second.max_lift_rate},
         {"shunt_in_min", c.terminals.begin()->second.shunt_in_min},
         {"shunt_out_min", c.terminals.begin()->second.shunt_out_min}};
  }
  const std::string text = j.dump(2) + "\n";
  if (!out_path.empty()) metrics::write_file(out_path, text);
  out << text;
  return kExitOk;
}

struct AnalyzeFlags
{
  std::string dop;
  std::string movements;
  std::string lifts;
  std::string out;
  bool lenient = false;
  int bin_min = 60;
  std::optional<double> horizon_days;
  std::vector<std::string> offsets;
};

int cmd_analyze(const AnalyzeFlags& f, std::ostream& out, std::ostream& err)
{
  analytics::AnalyticsOptions opts;
  opts.bin_min = f.bin_min;
  if (f.horizon_days) {
    if (!(*f.horizon_days > 0.0)) throw ConfigError("--horizon-days must be > 0");
    opts.horizon_min = *f.horizon_days * kMinutesPerDay;
  }
  for (const auto& o : f.offsets) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw ConfigError("--offset expects TERMINAL=METRES, got " + o);
    try {
      opts.circuit_offsets_m[o.substr(0, eq)] = std::stod(o.substr(eq + 1));
    } catch (const std::exception&) {
      throw ConfigError("--offset expects TERMINAL=METRES, got " + o);
    }
  }

  analytics::ParseContext ctx;
  ctx.lenient = f.lenient;
  std::istringstream dop_in(read_file(f.dop));
  auto records = analytics::read_dop_csv(dop_in, f.dop, ctx);
  if (!f.movements.empty()) {
    std::istringstream mv_in(read_file(f.movements));
    analytics::read_movements_csv(mv_in, f.movements, records, ctx);
  }
  std::vector<analytics::LiftRecord> lifts;
  if (!f.lifts.empty()) {
    std::istringstream lift_in(read_file(f.lifts));
    lifts = analytics::read_lift_csv(lift_in, f.lifts, ctx);
  }

  nlohmann::json report = analytics::analyze_all(records, lifts, opts);
  nlohmann::json issues = nlohmann::json::array();
  for (const auto& i : ctx.issues) {
    issues.push_back({{"file", i.file}, {"line", i.line}, {"message", i.message}});
    err << "warning: " << i.file << ":" << i.line << ": " << i.message << "\n";
  }
  report["data_quality"] = {{"issues", issues},
                            {"skipped_rows", ctx.skipped_rows},
                            {"bad_timestamps", ctx.bad_timestamps}};
  const std::string text = report.dump(2) + "\n";
  if (!f.out.empty()) {
    metrics::write_file(f.out, text);
    out << "wrote analytics report to " << f.out << "\n";
  } else {
    out << text;
  }
  return kExitOk;
}
}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Port rail corridor simulator and analytics", "portrail"};
  app.require_subcommand(1);

  RunFlags sim_flags;
  std::string sim_out, sim_trace;
  auto* simulate = app.add_subcommand("simulate", "run one scenario and report KPIs");
  add_run_flags(simulate, sim_flags);
  simulate->add_option("--out", sim_out, "report JSON path");
  simulate->add_option("--trace", sim_trace, "trace CSV path");

  RunFlags sweep_flags;
  std::string sweep_param, sweep_values, sweep_out;
  int jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "run a scenario over a list of parameter values");
  add_run_flags(sweep, sweep_flags);
  sweep->add_option("--param", sweep_param, "parameter to vary")->required();
  sweep->add_option("--values", sweep_values, "LO..HI or comma-separated values")->required();
  sweep->add_option("--out", sweep_out, "directory for per-value reports and summary.csv");
  sweep->add_option("--jobs", jobs, "concurrent runs")->check(CLI::Range(1, 256));

  double per_day = 0.0, lifting_pct = 0.0;
  int terminals = 0, lifts = 124;
  bool stock = false;
  std::string cal_out;
  auto* calibrate = app.add_subcommand("calibrate", "solve lift rates and shunt budgets from an observed row");
  calibrate->add_option("--trains-per-day", per_day);
  calibrate->add_option("--lifting-pct", lifting_pct);
  calibrate->add_option("--terminals", terminals);
  calibrate->add_option("--lifts-per-train", lifts);
  calibrate->add_flag("--stock", stock, "print the built-in per-terminal calibration");
  calibrate->add_option("--out", cal_out, "output JSON path");

  AnalyzeFlags af;
  auto* analyze = app.add_subcommand("analyze", "descriptive analytics over DOP and lift CSV files");
  analyze->add_option("--dop", af.dop, "DOP CSV")->required();
  analyze->add_option("--movements", af.movements, "movement CSV");
  analyze->add_option("--lifts", af.lifts, "lift CSV");
  analyze->add_option("--out", af.out, "report JSON path");
  analyze->add_flag("--lenient", af.lenient, "skip bad rows instead of failing");
  analyze->add_option("--bin-min", af.bin_min, "time-of-day histogram bin (minutes)");
  analyze->add_option("--horizon-days", af.horizon_days, "utilisation horizon (default: observed span)");
  analyze->add_option("--offset", af.offsets, "track-circuit offset TERMINAL=METRES (repeatable)")
      ->check(CLI::Validator(
          [](std::string& v) {
            return v.find('=') == std::string::npos ? std::string("expected TERMINAL=METRES") : std::string();
          },
          "TERMINAL=METRES"));

  RunFlags trace_flags;
  std::string trace_out;
  auto* export_trace = app.add_subcommand("export-trace", "run a scenario and write its trace CSV");
  add_run_flags(export_trace, trace_flags);
  export_trace->add_option("--out", trace_out, "trace CSV path")->required();

  auto* list = app.add_subcommand("list-presets", "list the built-in scenarios");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(sim_flags, sim_out, sim_trace, out);
    if (sweep->parsed()) return cmd_sweep(sweep_flags, sweep_param, sweep_values, sweep_out, jobs, out);
    if (calibrate->parsed()) {
      if (!stock && (calibrate->count("--trains-per-day") == 0 || calibrate->count("--lifting-pct") == 0 ||
                     calibrate->count("--terminals") == 0)) {
        err << "usage error: calibrate needs --trains-per-day, --lifting-pct and --terminals (or --stock)\n";
        return kExitUsage;
      }
      return cmd_calibrate(per_day, lifting_pct, terminals, lifts, stock, cal_out, out);
    }
    if (analyze->parsed()) return cmd_analyze(af, out, err);
    if (export_trace->parsed()) return cmd_export_trace(trace_flags, trace_out, out);
    if (list->parsed()) {
      for (const auto& p : scenarios::list_presets()) {
        out << std::left << std::setw(28) << p.name << p.description << "\n";
      }
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace portrail::cli
