#include "portrail/scenarios/resolve.hpp"

#include <cmath>
#include <numeric>

#include "portrail/corridor/network.hpp"
#include "portrail/ops/train.hpp"
#include "portrail/scenarios/calibration.hpp"

namespace portrail::scenarios
{
namespace
{
void require(bool ok, const std::string& what)
{
  if (!ok) throw ConfigError(what);
}

bool finite_nonneg(double v)
{
  return std::isfinite(v) && v >= 0.0;
}

template <typename T>
void check_terminal_keys(const std::map<std::string, T>& m, const corridor::CorridorNetwork& net,
                         const char* what)
{
  for (const auto& [name, _] : m) {
    require(net.find_terminal(name) != nullptr,
            std::string(what) + " names terminal " + name + ", absent from variant " +
                std::string(to_string(net.variant)));
  }
}
}  // namespace

void validate_inputs(const ScenarioConfig& s)
{
  require(s.horizon_days >= 1, "horizon_days must be >= 1");
  require(s.warmup_days >= 0, "warmup_days must be >= 0");
  require(s.rakes.wagons >= 1 && s.rakes.wagons <= ops::kMaxStandardWagons,
          "rakes.wagons must be within 1..32 (a 650m rake holds at most 32 wagons)");
  require(s.rakes.long_fraction >= 0.0 && s.rakes.long_fraction <= 1.0,
          "rakes.long_fraction must be within [0, 1]");
  require(finite_nonneg(s.mix.dedicated) && finite_nonneg(s.mix.split) &&
              finite_nonneg(s.mix.non_stevedore),
          "train_mix weights must be >= 0");
  require(s.mix.dedicated + s.mix.split + s.mix.non_stevedore > 0.0,
          "train_mix weights must not all be zero");
  require(s.load_factor > 0.0 && s.load_factor <= 1.0, "loads.load_factor must be within (0, 1]");
  require(s.lift_rate_scale > 0.0 && std::isfinite(s.lift_rate_scale), "lift_rate_scale must be > 0");
  require(s.unchanged_rate_scale > 0.0 && std::isfinite(s.unchanged_rate_scale),
          "unchanged_rate_scale must be > 0");

  const Timings& t = s.timings;
  require(finite_nonneg(t.corridor_travel_min) && finite_nonneg(t.single_track_traverse_min) &&
              finite_nonneg(t.runaround_min) && finite_nonneg(t.propel_min_per_100m) &&
              finite_nonneg(t.locomotive_length_m),
          "timings must be finite and >= 0");
  require(!t.inspection_min_per_100m || finite_nonneg(*t.inspection_min_per_100m),
          "timings.inspection_min_per_100m must be >= 0");

  const Capacities& c = s.capacities;
  require(!c.single_track || *c.single_track >= 1, "capacities.single_track must be >= 1");
  require(c.cooks_river >= 1, "capacities.cooks_river must be >= 1");
  require(c.arrival_roads >= 1 && c.departure_roads >= 1,
          "capacities needs at least one arrival and one departure road");
  require(c.road_length_m > 0.0, "capacities.road_length_m must be > 0");
  require(c.staging_depth >= 1, "capacities.staging_depth must be >= 1");

  if (s.arrival_mode == ArrivalMode::schedule) {
    require(!s.timetable.empty(), "schedule arrivals need a timetable");
  } else {
    require(s.timetable.empty(), "a timetable is only allowed with schedule arrivals");
  }

  if (s.peak) {
    require(s.mix.split == 0.0 && s.mix.non_stevedore == 0.0,
            "peak scenarios run dedicated shuttles only");
    require(s.arrival_mode == ArrivalMode::dynamic, "peak scenarios dispatch dynamically");
    require(s.staging == StagingPolicy::botany_yard, "peak scenarios stage in Botany Yard");
    require(s.rakes.long_fraction == 0.0, "peak scenarios run homogeneous rakes");
    require(s.load_factor == 1.0, "peak trains arrive full and leave fully backloaded");
    require(!s.overrides.placement_delay ||
                (s.overrides.placement_delay->lower() == 0.0 &&
                 s.overrides.placement_delay->upper() == 0.0),
            "peak scenarios have no placement delay");
    require(!s.overrides.container_variance ||
                (s.overrides.container_variance->lower() == 0.0 &&
                 s.overrides.container_variance->upper() == 0.0),
            "peak scenarios have no container variance");
    for (const auto& [name, ov] : s.terminal_overrides) {
      require(!ov.operating_hours || ov.operating_hours->always_open(),
              "peak scenarios keep terminals open 24/7");
    }
  }
}

std::vector<double> unchanged_rate_shape()
{
  constexpr int kPoints = 41;
  const auto tri = stochastics::Distribution::triangular(0.45, 1.2, 1.35);
  std::vector<double> out;
  for (int i = 0; i < kPoints; ++i) out.push_back(tri.quantile((i + 0.5) / kPoints));
  const double mean = std::accumulate(out.begin(), out.end(), 0.0) / kPoints;
  for (double& v : out) v /= mean;
  return out;
}

ScenarioConfig resolve(ScenarioConfig s)
{
  validate_inputs(s);
  const corridor::CorridorNetwork net = corridor::build_network(s);

  s.calibration = s.calibration_override ? *s.calibration_override
                                         : default_calibration(s.timings);
  if (s.consistent_rates) {
    const auto best = s.calibration.terminals.find(kBestTerminal);
    require(best != s.calibration.terminals.end(),
            "consistent_rates needs a calibration for the best terminal");
    const TerminalCalibration copy = best->second;
    for (const auto& spec : net.terminals) {
      if (spec.kind == TerminalKind::stevedore && spec.name != "Central") {
        s.calibration.terminals[spec.name] = copy;
      }
    }
  }

  stochastics::DistributionRegistry reg;
  const std::vector<double> shape = unchanged_rate_shape();
  for (const auto& spec : net.terminals) {
    const auto it = s.calibration.terminals.find(spec.name);
    require(it != s.calibration.terminals.end(), "no calibration for terminal " + spec.name);
    const TerminalCalibration& cal = it->second;
    require(cal.max_lift_rate > 0.0, spec.name + ": max_lift_rate must be > 0");
    require(cal.shunt_in_min >= 0.0 && cal.shunt_out_min >= 0.0,
            spec.name + ": calibrated shunts must be >= 0");

    stochastics::TerminalDistributions td;
    switch (s.lift_mode) {
      case LiftMode::constant_80pct:
        td.lift_rate = stochastics::Distribution::constant(0.8 * cal.max_lift_rate);
        break;
      case LiftMode::constant_custom:
        td.lift_rate = stochastics::Distribution::constant(cal.max_lift_rate);
        break;
      case LiftMode::unchanged_empirical: {
        std::vector<double> pts;
        for (double v : shape) pts.push_back(v * 0.8 * cal.max_lift_rate * s.unchanged_rate_scale);
        td.lift_rate = stochastics::Distribution::empirical(std::move(pts));
        break;
      }
    }
    if (s.lift_rate_scale != 1.0) td.lift_rate = stochastics::scale(td.lift_rate, s.lift_rate_scale);
    td.shunt_in = stochastics::Distribution::constant(cal.shunt_in_min);
    td.shunt_out = stochastics::Distribution::constant(cal.shunt_out_min);
    reg.terminals[spec.name] = td;
  }

  const auto& ov = s.overrides;
  check_terminal_keys(ov.lift_rate, net, "distributions.lift_rate");
  check_terminal_keys(ov.shunt_in, net, "distributions.shunt_in");
  check_terminal_keys(ov.shunt_out, net, "distributions.shunt_out");
  check_terminal_keys(ov.rate_law, net, "distributions.rate_law");
  for (const auto& [n, d] : ov.lift_rate) reg.terminals[n].lift_rate = d;
  for (const auto& [n, d] : ov.shunt_in) reg.terminals[n].shunt_in = d;
  for (const auto& [n, d] : ov.shunt_out) reg.terminals[n].shunt_out = d;
  for (const auto& [n, law] : ov.rate_law) {
    require(law.min_rate > 0.0, n + ": rate_law.min_rate must be > 0");
    reg.terminals[n].rate_law = law;
  }

  if (!s.peak) reg.container_variance = stochastics::Distribution::uniform(-0.1, 0.1);
  if (ov.container_variance) reg.container_variance = *ov.container_variance;
  if (ov.placement_delay) reg.placement_delay = *ov.placement_delay;
  if (ov.headway) reg.headway = *ov.headway;
  if (ov.interarrival) reg.interarrival = *ov.interarrival;
  if (ov.locomotive_return) reg.locomotive_return = *ov.locomotive_return;
  require(reg.container_variance.lower() >= -1.0, "container_variance must stay above -1");

  reg.validate(net.terminal_names());
  s.distributions = std::move(reg);
  return s;
}

}  // namespace portrail::scenarios
