#include "random_scenario.hpp"

#include <string>
#include <vector>

#include "portrail/corridor/network.hpp"
#include "portrail/scenarios/resolve.hpp"

namespace portrail::testing
{
namespace
{
int pick(std::mt19937_64& rng, int lo, int hi)
{
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double real(std::mt19937_64& rng, double lo, double hi)
{
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p = 0.5)
{
  return std::bernoulli_distribution(p)(rng);
}
}  // namespace

scenarios::ScenarioConfig random_scenario(std::mt19937_64& rng, int horizon_days)
{
  using namespace scenarios;
  ScenarioConfig s;
  s.name = "random";
  s.variant = static_cast<Variant>(pick(rng, 0, 4));
  s.lift_mode = static_cast<LiftMode>(pick(rng, 0, 1));
  s.horizon_days = horizon_days;
  s.warmup_days = pick(rng, 0, 7);
  s.seed = rng();
  s.rakes.wagons = pick(rng, 17, 32);
  if (coin(rng, 0.3)) s.rakes.long_fraction = real(rng, 0.0, 0.5);
  s.lift_rate_scale = real(rng, 0.7, 1.3);
  s.capacities.cooks_river = pick(rng, 1, 4);
  s.capacities.arrival_roads = pick(rng, 1, 3);
  s.capacities.departure_roads = pick(rng, 1, 3);
  s.capacities.staging_depth = pick(rng, 1, 3);
  if (coin(rng, 0.3)) s.capacities.single_track = pick(rng, 1, 2);
  s.policies.callup = coin(rng) ? CallupPolicy::fifo : CallupPolicy::planned_order;
  s.policies.split = coin(rng) ? LocoPolicy::propel_onward : LocoPolicy::wait_outside;
  s.staging = coin(rng) ? StagingPolicy::botany_yard : StagingPolicy::enfield;

  const int mode = pick(rng, 0, 2);
  if (mode == 0) {
    s.arrival_mode = ArrivalMode::dynamic;
    s.mix = {1.0, coin(rng) ? real(rng, 0.0, 0.5) : 0.0, 0.0};
    if (s.variant == Variant::centralized) s.mix.split = 0.0;
  } else {
    s.mix = {real(rng, 0.1, 1.0), real(rng, 0.0, 0.5), real(rng, 0.0, 0.3)};
    if (s.variant == Variant::centralized) s.mix.split = 0.0;
    s.load_factor = real(rng, 0.6, 1.0);
    s.overrides.placement_delay = stochastics::Distribution::uniform(0.0, real(rng, 0.0, 15.0));
    s.overrides.container_variance = stochastics::Distribution::uniform(-0.1, 0.1);
    if (mode == 1) {
      s.arrival_mode = ArrivalMode::distribution;
      const double lo = real(rng, 30.0, 90.0);
      s.overrides.interarrival = stochastics::Distribution::triangular(lo, lo * 1.5, lo * 3.0);
    } else {
      s.arrival_mode = ArrivalMode::schedule;
      const auto net = corridor::default_terminals(s.variant);
      std::vector<std::string> stevedores, parks;
      for (const auto& t : net) {
        (t.kind == TerminalKind::stevedore ? stevedores : parks).push_back(t.name);
      }
      double t = 0.0;
      const double end = horizon_days * kMinutesPerDay;
      while (true) {
        t += real(rng, 40.0, 180.0);
        if (t >= end) break;
        TimetableEntry e;
        e.time_min = t;
        if (coin(rng, 0.2)) {
          e.itinerary = {parks[pick(rng, 0, static_cast<int>(parks.size()) - 1)]};
        } else {
          e.itinerary = {stevedores[pick(rng, 0, static_cast<int>(stevedores.size()) - 1)]};
          if (stevedores.size() > 1 && coin(rng, 0.3)) {
            std::string second;
            do {
              second = stevedores[pick(rng, 0, static_cast<int>(stevedores.size()) - 1)];
            } while (second == e.itinerary.front());
            e.itinerary.push_back(second);
          }
        }
        if (coin(rng, 0.2)) e.wagons = pick(rng, 10, 32);
        if (coin(rng, 0.2)) e.departure_min = t + real(rng, 120.0, 600.0);
        s.timetable.push_back(e);
      }
    }
  }
  if (coin(rng, 0.2) && s.variant != Variant::centralized) {
    TerminalOverride o;
    o.operating_hours = OperatingHours{360.0, 1320.0};
    s.terminal_overrides["Patrick"] = o;
  }
  return resolve(s);
}

}  // namespace portrail::testing
