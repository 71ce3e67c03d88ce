// Acceptance checks: one PASS/FAIL line per criterion with the measured
// values and pinned tolerances. Exit status is non-zero if any check fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "analytics_oracle.hpp"
#include "invariants.hpp"
#include "portrail/analytics/analyses.hpp"
#include "portrail/analytics/records.hpp"
#include "portrail/corridor/yard.hpp"
#include "portrail/metrics/kpi.hpp"
#include "portrail/scenarios/presets.hpp"
#include "portrail/scenarios/resolve.hpp"
#include "portrail/scenarios/run.hpp"
#include "random_scenario.hpp"
#include "yard_oracle.hpp"

using namespace portrail;

namespace
{
struct Outcome
{
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what)
  {
    pass = pass && ok;
    detail << (ok ? "" : "[x] ") << what << "; ";
  }
};

bool within_rel(double value, double target, double rel)
{
  return std::abs(value - target) <= rel * std::abs(target);
}

bool within_abs(double value, double target, double tol)
{
  return std::abs(value - target) <= tol;
}

std::string fmt(const char* f, double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

struct Timed
{
  scenarios::RunResult result;
  double seconds = 0.0;
};

Timed timed_run(const scenarios::ScenarioConfig& s)
{
  const auto t0 = std::chrono::steady_clock::now();
  Timed t{scenarios::run(s), 0.0};
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

scenarios::ScenarioConfig resolved_preset(const std::string& name)
{
  return scenarios::resolve(scenarios::preset(name));
}

double terminal_teu(const metrics::KpiReport& r, const std::string& name)
{
  for (const auto& t : r.terminals) {
    if (t.terminal == name) return t.teu;
  }
  return 0.0;
}

Outcome ac1()
{
  Outcome o;
  const auto a = timed_run(resolved_preset("peak_as_is"));
  const auto b = timed_run(resolved_preset("peak_soon_to_be"));
  o.require(within_abs(a.result.report.trains_per_day, 16.0, 0.5),
            "as_is trains/day " + fmt("%.3f", a.result.report.trains_per_day) + " (16 +- 0.5)");
  o.require(within_rel(a.result.report.annual_teu, 1.121e6, 0.02),
            "as_is TEU " + fmt("%.0f", a.result.report.annual_teu) + " (1.121M +- 2%)");
  o.require(within_abs(b.result.report.trains_per_day, 25.4, 0.8),
            "soon_to_be trains/day " + fmt("%.3f", b.result.report.trains_per_day) + " (25.4 +- 0.8)");
  o.require(within_rel(b.result.report.annual_teu, 1.780e6, 0.02),
            "soon_to_be TEU " + fmt("%.0f", b.result.report.annual_teu) + " (1.780M +- 2%)");
  o.require(a.seconds < 10.0 && b.seconds < 10.0,
            "runtime " + fmt("%.2f", a.seconds) + "s / " + fmt("%.2f", b.seconds) + "s (< 10 s)");
  return o;
}

Outcome ac2()
{
  Outcome o;
  const auto a = scenarios::run(resolved_preset("peak_as_is")).report;
  const auto b = scenarios::run(resolved_preset("peak_soon_to_be")).report;
  o.require(within_abs(a.pct_lifting, 85.8, 2.0) && within_abs(a.pct_shunting, 14.2, 2.0),
            "as_is lifting/shunting " + fmt("%.2f", a.pct_lifting) + "/" + fmt("%.2f", a.pct_shunting) +
                " (85.8/14.2 +- 2)");
  o.require(within_abs(b.pct_lifting, 86.5, 2.0) && within_abs(b.pct_shunting, 13.5, 2.0),
            "soon_to_be lifting/shunting " + fmt("%.2f", b.pct_lifting) + "/" + fmt("%.2f", b.pct_shunting) +
                " (86.5/13.5 +- 2)");
  return o;
}

Outcome ac3()
{
  Outcome o;
  const auto base = resolved_preset("rake_sweep");
  const auto values = scenarios::parse_values("17..32");
  const auto reports = scenarios::sweep(base, "rake_wagons", values, 4);
  std::size_t best = 0;
  for (std::size_t i = 1; i < reports.size(); ++i) {
    if (reports[i].annual_teu > reports[best].annual_teu) best = i;
  }
  o.require(values[best] == "32", "TEU maximised at " + values[best] + " wagons (32)");
  const double second = reports[reports.size() - 2].annual_teu;
  o.detail << "TEU@32 " << fmt("%.0f", reports.back().annual_teu) << " vs @31 " << fmt("%.0f", second) << "; ";
  const double d17 = terminal_teu(reports.front(), "DPWorld");
  const double d32 = terminal_teu(reports.back(), "DPWorld");
  const double gap = std::abs(d32 - d17) / d32;
  o.require(gap < 0.01, "DPWorld 17-vs-32 wagon TEU gap " + fmt("%.3f", 100 * gap) + "% (< 1%)");
  o.require(within_abs(reports.front().trains_per_day, 30.0, 2.0),
            "trains/day @17 " + fmt("%.2f", reports.front().trains_per_day) + " (30 +- 2)");
  o.require(within_abs(reports.back().trains_per_day, 16.0, 2.0),
            "trains/day @32 " + fmt("%.2f", reports.back().trains_per_day) + " (16 +- 2)");
  return o;
}

Outcome ac4()
{
  Outcome o;
  const double base = scenarios::run(resolved_preset("peak_as_is")).report.annual_teu;
  const double ext = scenarios::run(resolved_preset("peak_dpw_extended")).report.annual_teu;
  const double gain = 100.0 * (ext - base) / base;
  o.require(within_abs(gain, 0.4, 0.3), "extension gain " + fmt("%.3f", gain) + "% (0.4 +- 0.3 pts)");
  return o;
}

Outcome ac5()
{
  Outcome o;
  const double central = scenarios::run(resolved_preset("peak_centralized")).report.annual_teu;
  const double consistent = scenarios::run(resolved_preset("peak_soon_to_be_consistent")).report.annual_teu;
  o.require(within_rel(central, 2.052e6, 0.02), "centralized TEU " + fmt("%.0f", central) + " (2.052M +- 2%)");
  o.require(within_rel(consistent, 1.97e6, 0.02),
            "consistent-rate TEU " + fmt("%.0f", consistent) + " (~1.97M, +- 2%)");
  const double gap = 100.0 * (central - consistent) / central;
  o.require(within_abs(gap, 4.0, 1.0), "gap " + fmt("%.2f", gap) + "% (4 +- 1 pts)");
  return o;
}

Outcome ac6()
{
  Outcome o;
  for (const auto& [trips, pct] : std::vector<std::pair<double, int>>{{16, 44}, {7, 19}, {14, 39}}) {
    const int got = metrics::single_line_utilisation_pct(trips);
    o.require(got == pct, fmt("%.0f", trips) + " trips/day -> " + std::to_string(got) + "% (" +
                              std::to_string(pct) + "%)");
  }
  std::ifstream dop(std::string(PORTRAIL_FIXTURE_DIR) + "/profile_dop.csv");
  analytics::ParseContext ctx;
  const auto records = analytics::read_dop_csv(dop, "profile_dop.csv", ctx);
  const auto line = analytics::single_line(records);
  o.require(line.utilisation_pct == 44, "fixture with " + fmt("%.1f", line.trips_per_day) +
                                            " arrivals/day -> " + std::to_string(line.utilisation_pct) + "%");
  return o;
}

Outcome ac7()
{
  Outcome o;
  const auto base = resolved_preset("peak_as_is");
  const double constant = scenarios::run(base).report.annual_teu;

  // (a) mean-preserving variable laws for every stevedore.
  using D = stochastics::Distribution;
  const std::vector<std::pair<std::string, std::function<D(double)>>> laws{
      {"uniform", [](double r) { return D::uniform(0.6 * r, 1.4 * r); }},
      {"triangular", [](double r) { return D::triangular(0.7 * r, r, 1.3 * r); }},
      {"normal", [](double r) { return D::normal(r, 0.15 * r, 0.4 * r, 1.6 * r); }},
      {"unchanged-shape", [](double r) {
         auto pts = scenarios::unchanged_rate_shape();
         for (double& p : pts) p *= r;
         return D::empirical(pts);
       }}};
  for (const auto& [label, law] : laws) {
    auto s = scenarios::preset("peak_as_is");
    for (const auto& [name, cal] : base.calibration.terminals) {
      if (name == "Patrick" || name == "DPWorld") s.overrides.lift_rate[name] = law(0.8 * cal.max_lift_rate);
    }
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      s.seed = seed;
      worst = std::max(worst, scenarios::run(scenarios::resolve(s)).report.annual_teu);
    }
    o.require(worst <= constant, "(a) " + label + " max TEU " + fmt("%.0f", worst) + " <= constant " +
                                     fmt("%.0f", constant));
  }

  // (b) a lower mean rate strictly lowers TEU, constant and variable.
  for (const char* name : {"peak_as_is", "unchanged_as_is"}) {
    double prev = 1e300;
    bool strict = true;
    for (double k : {1.0, 0.95, 0.9, 0.8}) {
      auto s = scenarios::preset(name);
      s.lift_rate_scale = k;
      const double teu = scenarios::run(scenarios::resolve(s)).report.annual_teu;
      strict = strict && teu < prev;
      prev = teu;
    }
    o.require(strict, std::string("(b) ") + name + " TEU strictly falls with the rate scale");
  }

  // (c) tuned variable-rate presets, a calibration result.
  const auto ua = scenarios::run(resolved_preset("unchanged_as_is")).report;
  const auto us = scenarios::run(resolved_preset("unchanged_soon_to_be")).report;
  o.require(within_rel(ua.annual_teu, 0.919e6, 0.05),
            "(c) unchanged_as_is TEU " + fmt("%.0f", ua.annual_teu) + " (0.919M +- 5%)");
  o.require(within_rel(us.annual_teu, 1.493e6, 0.05),
            "(c) unchanged_soon_to_be TEU " + fmt("%.0f", us.annual_teu) + " (1.493M +- 5%)");
  o.require(within_rel(ua.trains_per_day, 13.11, 0.05),
            "(c) unchanged_as_is trains/day " + fmt("%.2f", ua.trains_per_day) + " (13.11 +- 5%)");
  o.require(within_rel(us.trains_per_day, 21.3, 0.05),
            "(c) unchanged_soon_to_be trains/day " + fmt("%.2f", us.trains_per_day) + " (21.3 +- 5%)");
  return o;
}

Outcome ac8()
{
  Outcome o;
  std::mt19937_64 rng(20240601);
  int violations = 0, nondeterministic = 0, failed = 0;
  std::string first;
  for (int i = 0; i < 100; ++i) {
    try {
      const auto s = testing::random_scenario(rng, 30);
      const auto trace = scenarios::simulate(s);
      const auto v = testing::check_all(trace);
      violations += static_cast<int>(v.size());
      if (!v.empty() && first.empty()) first = "scenario " + std::to_string(i) + ": " + v.front();
      if (metrics::trace_to_csv(scenarios::simulate(s)) != metrics::trace_to_csv(trace)) ++nondeterministic;
    } catch (const std::exception& e) {
      ++failed;
      if (first.empty()) first = "scenario " + std::to_string(i) + " threw: " + e.what();
    }
  }
  o.require(failed == 0, std::to_string(failed) + " runs aborted");
  o.require(violations == 0, std::to_string(violations) + " invariant violations");
  o.require(nondeterministic == 0, std::to_string(nondeterministic) + " non-deterministic reruns");
  if (!first.empty()) o.detail << "first: " << first << "; ";
  return o;
}

Outcome ac9()
{
  Outcome o;
  const std::string dir = PORTRAIL_FIXTURE_DIR;
  for (const std::string prefix : {"basic", "profile"}) {
    analytics::ParseContext ctx;
    std::ifstream d(dir + "/" + prefix + "_dop.csv"), m(dir + "/" + prefix + "_movements.csv"),
        l(dir + "/" + prefix + "_lifts.csv");
    auto dop = analytics::read_dop_csv(d, prefix, ctx);
    analytics::read_movements_csv(m, prefix, dop, ctx);
    const auto lifts = analytics::read_lift_csv(l, prefix, ctx);
    const std::map<std::string, double> offsets{{"DPWorld", 300.0}, {"Patrick", 0.0}};
    const auto oracle = testing::compute_oracle(dir + "/" + prefix + "_dop.csv", dir + "/" + prefix + "_movements.csv",
                                                dir + "/" + prefix + "_lifts.csv", 60, offsets);
    const auto sim = analytics::simultaneous_trains(dop);
    const auto wd = analytics::arrivals_by_weekday(dop);
    bool weekdays = true;
    for (int i = 0; i < 7; ++i) {
      weekdays = weekdays && wd.by_weekday[i].total == oracle.weekday_total[i] &&
                 wd.by_weekday[i].days == oracle.weekday_days[i];
    }
    const auto shunts = analytics::shunt_times(dop, lifts, offsets);
    bool shunt_ok = shunts.unmatched_lifts == oracle.unmatched_lifts;
    for (const auto& s : shunts.by_terminal) {
      shunt_ok = shunt_ok && std::abs(s.mean_corrected_in - oracle.mean_corrected_in.at(s.terminal)) < 1e-9 &&
                 std::abs(s.mean_corrected_out - oracle.mean_corrected_out.at(s.terminal)) < 1e-9;
    }
    const double horizon = analytics::observed_horizon_min(dop);
    const auto split = analytics::terminal_time_split(lifts, dop, horizon);
    bool split_ok = horizon == oracle.horizon_min;
    for (const auto& s : split.by_terminal) {
      split_ok = split_ok && s.servicing_min == oracle.servicing_min.at(s.terminal) &&
                 s.lifting_min == oracle.lifting_min.at(s.terminal);
    }
    o.require(sim.histogram == oracle.histogram && sim.slot_histogram == oracle.slot_histogram,
              prefix + " simultaneity");
    o.require(weekdays, prefix + " weekday profile");
    o.require(analytics::arrival_histogram(dop, 60).counts == oracle.arrival_bins &&
                  analytics::departure_histogram(dop, 60).counts == oracle.departure_bins,
              prefix + " time-of-day histograms");
    o.require(analytics::single_line(dop).trips_per_day == oracle.trips_per_day, prefix + " single-line trips");
    o.require(shunt_ok, prefix + " corrected shunts");
    o.require(split_ok, prefix + " terminal time split");
  }
  const auto c = analytics::shunt_correction(8.0, 300.0);
  o.require(c.minutes == 5.0 && !c.clamped, "8 min raw - 300 m offset = " + fmt("%.17g", c.minutes) + " min");
  return o;
}

Outcome ac10()
{
  Outcome o;
  const std::vector<double> roads(4, 1300.0);
  const std::vector<double> lengths{350.0, 650.0, 700.0};
  std::map<std::vector<int>, bool> memo;  // counts per length -> feasible
  const auto feasible = [&](const std::vector<int>& counts) {
    auto it = memo.find(counts);
    if (it != memo.end()) return it->second;
    std::vector<double> trains;
    for (std::size_t k = 0; k < counts.size(); ++k) trains.insert(trains.end(), counts[k], lengths[k]);
    return memo[counts] = testing::packing_feasible(trains, roads);
  };
  std::uint64_t sequences = 0, mismatches = 0;
  // Depth-first over every sequence; rejected trains are simply not admitted.
  std::function<void(corridor::YardState&, std::vector<int>&, int)> explore =
      [&](corridor::YardState& yard, std::vector<int>& counts, int depth) {
        ++sequences;
        if (depth == 10) return;
        for (std::size_t k = 0; k < lengths.size(); ++k) {
          corridor::YardState next = yard;
          ++counts[k];
          const bool expect = feasible(counts);
          const bool got = corridor::yard_admit(next, depth, lengths[k]);
          if (got != expect) ++mismatches;
          if (!got) --counts[k];
          explore(next, counts, depth + 1);
          if (got) --counts[k];
        }
      };
  corridor::YardState empty(corridor::YardSpec{"BotanyYard", roads});
  std::vector<int> counts(3, 0);
  explore(empty, counts, 0);
  o.require(mismatches == 0, std::to_string(sequences) + " sequences, " + std::to_string(mismatches) +
                                 " disagreements with the packing oracle");

  corridor::YardState shorts(corridor::YardSpec{"BotanyYard", roads});
  int admitted = 0;
  for (TrainId id = 0; id < 9; ++id) admitted += corridor::yard_admit(shorts, id, 650.0) ? 1 : 0;
  o.require(admitted == 8, std::to_string(admitted) + " trains of 650 m fit (8)");
  corridor::YardState longs(corridor::YardSpec{"BotanyYard", roads});
  admitted = 0;
  for (TrainId id = 0; id < 5; ++id) admitted += corridor::yard_admit(longs, id, 700.0) ? 1 : 0;
  o.require(admitted == 4, std::to_string(admitted) + " trains of 700 m fit (4)");
  return o;
}
}  // namespace

int main()
{
  const std::vector<std::pair<const char*, Outcome (*)()>> checks{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}};
  int failures = 0;
  for (const auto& [name, check] : checks) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "threw: " << e.what();
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s %s %s\n", name, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
