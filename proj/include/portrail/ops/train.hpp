#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "portrail/core/types.hpp"
#include "portrail/scenarios/config.hpp"

namespace portrail::ops
{
inline constexpr double kWagonLengthM = 20.3;
inline constexpr double kTeuPerWagon = 3.0;
inline constexpr int kMaxStandardWagons = 32;
inline constexpr double kLongRakeLengthM = 900.0;
inline constexpr double kLongRakeTeu = 136.0;
inline constexpr int kLongRakeWagons = 44;
// TEU moved per crane lift, from a 136 TEU rake needing 88 lifts.
inline constexpr double kDefaultTeuPerLift = 136.0 / 88.0;

enum class LifecycleState
{
  en_route_in,
  staged_awaiting_runaround,
  runaround,
  staged_awaiting_callup,
  shunting_in,
  placed_lifting,
  awaiting_callout,
  shunting_out,
  staged_awaiting_departure,
  departed,
};

std::string_view to_string(LifecycleState s) noexcept;

// Legal moves of the servicing state machine. Multi-visit trains loop from
// shunting_out back to staged_awaiting_callup; trains bound for a terminal
// outside the port skip the yard and run-around.
bool transition_allowed(LifecycleState from, LifecycleState to) noexcept;

struct Visit
{
  std::string terminal;
  double import_teu = 0.0;
  double export_teu = 0.0;
};

struct Rake
{
  int wagons = 0;
  double length_m = 0.0;  // including the locomotive
  double teu_capacity = 0.0;
};

// A rake of `wagons` standard wagons behind a locomotive of the given length.
Rake standard_rake(int wagons, double locomotive_length_m = 0.0);
// The 900m / 136 TEU long rake.
Rake long_rake();

// round(teu / teu_per_lift); 96 TEU -> 62, 136 TEU -> 88.
int lifts_required(double teu, double teu_per_lift = kDefaultTeuPerLift);

struct Train
{
  TrainId id = kNoTrain;
  TrainCategory category = TrainCategory::dedicated;
  Rake rake;
  double planned_import_teu = 0.0;
  double actual_import_teu = 0.0;
  double planned_export_teu = 0.0;
  double actual_export_teu = 0.0;
  std::vector<Visit> itinerary;
  std::size_t next_visit = 0;
  double planned_arrival = 0.0;
  std::optional<double> scheduled_departure;
  scenarios::LocoPolicy loco = scenarios::LocoPolicy::wait_outside;
  LifecycleState state = LifecycleState::en_route_in;

  // Moves to `to`, throwing LifecycleError on an illegal transition.
  void advance(LifecycleState to);
  bool on_final_visit() const noexcept { return next_visit + 1 >= itinerary.size(); }
  const Visit& current_visit() const { return itinerary.at(next_visit); }
};

// Checks the per-category itinerary rules; throws ConfigError.
void validate_itinerary(TrainCategory category, const std::vector<std::string>& terminals,
                        const std::vector<std::string>& stevedores);

}  // namespace portrail::ops
