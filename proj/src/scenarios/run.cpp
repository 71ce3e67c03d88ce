#include "portrail/scenarios/run.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <thread>

#include "portrail/corridor/network.hpp"
#include "portrail/ops/port_model.hpp"
#include "portrail/scenarios/io.hpp"
#include "portrail/scenarios/resolve.hpp"

namespace portrail::scenarios
{
namespace
{
int to_int(const std::string& parameter, const std::string& value)
{
  int out = 0;
  const auto* end = value.data() + value.size();
  auto [p, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || p != end) {
    throw ConfigError(parameter + ": \"" + value + "\" is not an integer");
  }
  return out;
}

double to_double(const std::string& parameter, const std::string& value)
{
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(parameter + ": \"" + value + "\" is not a number");
  }
}
}  // namespace

sim::EventTrace simulate(const ScenarioConfig& scenario)
{
  const corridor::CorridorNetwork network = corridor::build_network(scenario);
  sim::EventTrace trace = ops::run_simulation(scenario, network);
  trace.meta.scenario_echo = echo(scenario).dump();
  return trace;
}

RunResult run(const ScenarioConfig& scenario)
{
  RunResult r;
  r.trace = simulate(scenario);
  r.report = metrics::compute_report(r.trace);
  return r;
}

std::vector<std::string> sweepable_parameters()
{
  return {"rake_wagons",          "lift_mode",   "lift_rate_scale", "single_track_capacity",
          "cooks_river_capacity", "staging_depth", "headway_min",   "seed"};
}

ScenarioConfig with_parameter(const ScenarioConfig& base, const std::string& parameter,
                              const std::string& value)
{
  ScenarioConfig s = base;
  if (parameter == "rake_wagons") {
    s.rakes.wagons = to_int(parameter, value);
    s.rakes.rake_900m = false;
  } else if (parameter == "lift_mode") {
    auto m = lift_mode_from_string(value);
    if (!m) throw ConfigError("lift_mode: unknown value \"" + value + "\"");
    s.lift_mode = *m;
  } else if (parameter == "lift_rate_scale") {
    s.lift_rate_scale = to_double(parameter, value);
  } else if (parameter == "single_track_capacity") {
    s.capacities.single_track = to_int(parameter, value);
  } else if (parameter == "cooks_river_capacity") {
    s.capacities.cooks_river = to_int(parameter, value);
  } else if (parameter == "staging_depth") {
    s.capacities.staging_depth = to_int(parameter, value);
  } else if (parameter == "headway_min") {
    s.overrides.headway = stochastics::Distribution::constant(to_double(parameter, value));
  } else if (parameter == "seed") {
    s.seed = static_cast<std::uint64_t>(to_int(parameter, value));
  } else {
    std::string list;
    for (const auto& p : sweepable_parameters()) list += (list.empty() ? "" : ", ") + p;
    throw ConfigError("parameter \"" + parameter + "\" is not sweepable (choose from " + list + ")");
  }
  return resolve(std::move(s));
}

std::vector<std::string> parse_values(const std::string& spec)
{
  std::vector<std::string> out;
  const auto dots = spec.find("..");
  if (dots != std::string::npos) {
    const int lo = to_int("range", spec.substr(0, dots));
    const int hi = to_int("range", spec.substr(dots + 2));
    if (hi < lo) throw ConfigError("empty range " + spec);
    for (int v = lo; v <= hi; ++v) out.push_back(std::to_string(v));
    return out;
  }
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto comma = spec.find(',', start);
    std::string item = spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw ConfigError("empty value in list \"" + spec + "\"");
    out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<metrics::KpiReport> sweep(const ScenarioConfig& base, const std::string& parameter,
                                      const std::vector<std::string>& values, int jobs)
{
  // Resolve every point first so a bad value fails before any run starts.
  std::vector<ScenarioConfig> points;
  for (const auto& v : values) points.push_back(with_parameter(base, parameter, v));
  for (std::size_t i = 0; i < points.size(); ++i) {
    points[i].name = base.name + "[" + parameter + "=" + values[i] + "]";
  }

  std::vector<metrics::KpiReport> reports(points.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= points.size()) return;
      try {
        reports[i] = run(points[i]).report;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int n = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(points.size(), 1)));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return reports;
}

}  // namespace portrail::scenarios
