#include "portrail/scenarios/presets.hpp"

#include <algorithm>
#include <functional>

namespace portrail::scenarios
{
namespace
{
ScenarioConfig peak(const std::string& name, Variant variant)
{
  ScenarioConfig s;
  s.name = name;
  s.variant = variant;
  s.lift_mode = LiftMode::constant_80pct;
  s.peak = true;
  s.rakes.wagons = 32;
  s.arrival_mode = ArrivalMode::dynamic;
  s.staging = StagingPolicy::botany_yard;
  s.horizon_days = 365;
  s.warmup_days = 7;
  s.seed = 1;
  return s;
}

ScenarioConfig unchanged(const std::string& name, Variant variant)
{
  ScenarioConfig s = peak(name, variant);
  s.lift_mode = LiftMode::unchanged_empirical;
  s.unchanged_rate_scale = kUnchangedRateScale;
  return s;
}

ScenarioConfig replay_mixed()
{
  ScenarioConfig s;
  s.name = "replay_mixed";
  s.variant = Variant::as_is;
  s.lift_mode = LiftMode::unchanged_empirical;
  s.unchanged_rate_scale = kUnchangedRateScale;
  s.mix = TrainMix{0.6, 0.25, 0.15};
  s.arrival_mode = ArrivalMode::distribution;
  s.staging = StagingPolicy::enfield;
  s.horizon_days = 90;
  s.overrides.interarrival = stochastics::Distribution::triangular(60.0, 130.0, 240.0);
  s.overrides.placement_delay = stochastics::Distribution::uniform(0.0, 10.0);
  return s;
}

struct Entry
{
  const char* name;
  const char* description;
  std::function<ScenarioConfig()> make;
};

const std::vector<Entry>& registry()
{
  static const std::vector<Entry> entries = {
      {"peak_as_is", "two stevedores, 650m shuttles, constant 80% lift rates",
       [] { return peak("peak_as_is", Variant::as_is); }},
      {"peak_soon_to_be", "three stevedores, 650m shuttles, constant 80% lift rates",
       [] { return peak("peak_soon_to_be", Variant::soon_to_be); }},
      {"peak_soon_to_be_consistent", "three stevedores all at the best terminal's rates",
       [] {
         auto s = peak("peak_soon_to_be_consistent", Variant::soon_to_be);
         s.consistent_rates = true;
         return s;
       }},
      {"peak_centralized", "one 3x900m terminal, 136 TEU rakes, locomotive stays attached",
       [] {
         auto s = peak("peak_centralized", Variant::centralized);
         s.rakes.rake_900m = true;
         return s;
       }},
      {"peak_dpw_extended", "as_is with DPWorld sidings extended to 650m",
       [] { return peak("peak_dpw_extended", Variant::dpw_extended); }},
      {"unchanged_as_is", "as_is with variable lift rates at current performance",
       [] { return unchanged("unchanged_as_is", Variant::as_is); }},
      {"unchanged_soon_to_be", "soon_to_be with variable lift rates at current performance",
       [] { return unchanged("unchanged_soon_to_be", Variant::soon_to_be); }},
      {"rake_sweep", "peak_as_is baseline for rake-length sweeps",
       [] { return peak("rake_sweep", Variant::as_is); }},
      {"replay_mixed", "mixed dedicated/split/empty-park traffic with random arrivals",
       [] { return replay_mixed(); }},
  };
  return entries;
}
}  // namespace

std::vector<PresetInfo> list_presets()
{
  std::vector<PresetInfo> out;
  for (const auto& e : registry()) out.push_back(PresetInfo{e.name, e.description});
  return out;
}

bool is_preset(const std::string& name)
{
  const auto& r = registry();
  return std::any_of(r.begin(), r.end(), [&](const Entry& e) { return name == e.name; });
}

ScenarioConfig preset(const std::string& name)
{
  for (const auto& e : registry()) {
    if (name == e.name) return e.make();
  }
  throw ConfigError("unknown preset " + name);
}

}  // namespace portrail::scenarios
