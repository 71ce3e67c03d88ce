#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "portrail/core/types.hpp"
#include "portrail/stochastics/registry.hpp"

namespace portrail::scenarios
{
enum class Variant
{
  as_is,
  soon_to_be,
  centralized,
  dpw_extended,
  single_track_duplicated,
};

enum class LiftMode
{
  constant_80pct,
  unchanged_empirical,
  constant_custom,
};

enum class StagingPolicy
{
  botany_yard,
  enfield,
};

enum class ArrivalMode
{
  dynamic,       // dispatch from Enfield whenever a terminal's pipeline has room
  distribution,  // interarrival times drawn from a distribution
  schedule,      // fixed timetable
};

enum class CallupPolicy
{
  fifo,
  planned_order,  // staged trains are called up in planned-arrival order
};

enum class LocoPolicy
{
  wait_outside,
  propel_onward,  // the locomotive leaves during servicing and must return
};

struct RakeConfig
{
  int wagons = 32;
  bool rake_900m = false;      // every rake is the 900m / 136 TEU preset
  double long_fraction = 0.0;  // share of trains given the 900m rake instead

  bool operator==(const RakeConfig&) const = default;
};

struct TrainMix
{
  double dedicated = 1.0;
  double split = 0.0;
  double non_stevedore = 0.0;

  bool operator==(const TrainMix&) const = default;
};

struct TimetableEntry
{
  double time_min = 0.0;
  std::vector<std::string> itinerary;
  std::optional<TrainCategory> category;
  std::optional<int> wagons;
  std::optional<double> departure_min;

  bool operator==(const TimetableEntry&) const = default;
};

struct Timings
{
  double corridor_travel_min = 25.0;
  double single_track_traverse_min = 6.0;
  double runaround_min = 15.0;
  double propel_min_per_100m = 1.0;
  std::optional<double> inspection_min_per_100m;  // defaults to the calibration's value
  double locomotive_length_m = 0.0;

  bool operator==(const Timings&) const = default;
};

struct Capacities
{
  std::optional<int> single_track;  // defaults by variant (1, or 2 when duplicated)
  int cooks_river = 3;
  int arrival_roads = 2;
  int departure_roads = 2;
  double road_length_m = 1300.0;
  int staging_depth = 1;  // staged trains per unit of terminal service capacity

  bool operator==(const Capacities&) const = default;
};

struct OperatingHours
{
  double open_min = 0.0;
  double close_min = kMinutesPerDay;

  bool always_open() const noexcept { return open_min <= 0.0 && close_min >= kMinutesPerDay; }
  bool operator==(const OperatingHours&) const = default;
};

struct TerminalOverride
{
  std::optional<int> siding_count;
  std::optional<double> siding_length_m;
  std::optional<double> requires_split_above_m;
  std::optional<double> split_overhead_min;
  std::optional<int> service_capacity;
  std::optional<OperatingHours> operating_hours;

  bool operator==(const TerminalOverride&) const = default;
};

struct Policies
{
  CallupPolicy callup = CallupPolicy::fifo;
  LocoPolicy dedicated = LocoPolicy::wait_outside;
  LocoPolicy split = LocoPolicy::propel_onward;
  LocoPolicy non_stevedore = LocoPolicy::wait_outside;

  bool operator==(const Policies&) const = default;
};

struct DistributionOverrides
{
  std::map<std::string, stochastics::Distribution> lift_rate;
  std::map<std::string, stochastics::Distribution> shunt_in;
  std::map<std::string, stochastics::Distribution> shunt_out;
  std::map<std::string, stochastics::RateLaw> rate_law;
  std::optional<stochastics::Distribution> container_variance;
  std::optional<stochastics::Distribution> placement_delay;
  std::optional<stochastics::Distribution> headway;
  std::optional<stochastics::Distribution> interarrival;
  std::optional<stochastics::Distribution> locomotive_return;

  bool operator==(const DistributionOverrides&) const = default;
};

struct TerminalCalibration
{
  double max_lift_rate = 0.0;  // lifts per hour; peak runs use 80% of it
  double shunt_in_min = 0.0;   // fixed part, excluding length-dependent propel time
  double shunt_out_min = 0.0;

  bool operator==(const TerminalCalibration&) const = default;
};

struct CalibrationSet
{
  std::map<std::string, TerminalCalibration> terminals;
  double inspection_min_per_100m = 0.0;
  std::string derivation_note;

  bool operator==(const CalibrationSet&) const = default;
};

// Full parameterisation of one run. The input fields mirror the scenario
// document; `calibration` and `distributions` are derived by resolve().
struct ScenarioConfig
{
  std::string name = "custom";
  Variant variant = Variant::as_is;
  LiftMode lift_mode = LiftMode::constant_80pct;
  bool peak = false;
  bool consistent_rates = false;
  double lift_rate_scale = 1.0;
  RakeConfig rakes;
  TrainMix mix;
  ArrivalMode arrival_mode = ArrivalMode::dynamic;
  StagingPolicy staging = StagingPolicy::botany_yard;
  std::vector<TimetableEntry> timetable;
  int horizon_days = 365;
  int warmup_days = 7;
  std::uint64_t seed = 1;
  double load_factor = 1.0;
  double unchanged_rate_scale = 1.0;  // multiplies the stock empirical lift-rate samples
  Timings timings;
  Capacities capacities;
  Policies policies;
  std::map<std::string, TerminalOverride> terminal_overrides;
  DistributionOverrides overrides;
  std::optional<CalibrationSet> calibration_override;

  CalibrationSet calibration;
  stochastics::DistributionRegistry distributions;

  bool operator==(const ScenarioConfig&) const = default;
};

std::string_view to_string(Variant v) noexcept;
std::string_view to_string(LiftMode m) noexcept;
std::string_view to_string(StagingPolicy p) noexcept;
std::string_view to_string(ArrivalMode m) noexcept;
std::string_view to_string(CallupPolicy p) noexcept;
std::string_view to_string(LocoPolicy p) noexcept;

std::optional<Variant> variant_from_string(std::string_view s) noexcept;
std::optional<LiftMode> lift_mode_from_string(std::string_view s) noexcept;
std::optional<StagingPolicy> staging_from_string(std::string_view s) noexcept;
std::optional<ArrivalMode> arrival_mode_from_string(std::string_view s) noexcept;
std::optional<CallupPolicy> callup_from_string(std::string_view s) noexcept;
std::optional<LocoPolicy> loco_from_string(std::string_view s) noexcept;

}  // namespace portrail::scenarios
