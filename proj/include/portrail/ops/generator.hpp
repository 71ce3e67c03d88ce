#pragma once

#include <optional>
#include <string>
#include <vector>

#include "portrail/corridor/network.hpp"
#include "portrail/ops/train.hpp"
#include "portrail/scenarios/config.hpp"
#include "portrail/stochastics/rng.hpp"

namespace portrail::ops
{
struct PlannedArrival
{
  double time = 0.0;  // minutes, arrival at Enfield
  TrainCategory category = TrainCategory::dedicated;
  std::vector<std::string> itinerary;
  std::optional<int> wagons;
  std::optional<double> departure;
};

// Builds Train entities: rake choice, loads and container variance, and
// itineraries drawn from the scenario's train mix.
class TrainFactory
{
 public:
  TrainFactory(const scenarios::ScenarioConfig& scenario, const corridor::CorridorNetwork& network,
               stochastics::StreamSet& streams);

  Train make(TrainId id, const PlannedArrival& plan);

  TrainCategory draw_category();
  // Itinerary for a category; `first` pins the first stevedore.
  std::vector<std::string> draw_itinerary(TrainCategory category,
                                          const std::optional<std::string>& first = std::nullopt);

 private:
  double actual_teu(double planned, double capacity);

  const scenarios::ScenarioConfig& scenario_;
  const corridor::CorridorNetwork& network_;
  stochastics::StreamSet& streams_;
  std::vector<std::string> stevedores_;
  std::vector<std::string> parks_;
};

// Infers the category of a timetabled itinerary from its stevedore count.
TrainCategory infer_category(const std::vector<std::string>& itinerary,
                             const corridor::CorridorNetwork& network);

// Checks timetable entries against the network; throws ConfigError naming
// the offending entry.
void validate_timetable(const std::vector<scenarios::TimetableEntry>& timetable,
                        const corridor::CorridorNetwork& network);

// Arrival stream for the schedule and distribution modes, covering
// [0, horizon_min). Dynamic mode dispatches on demand inside the port model
// and yields an empty list here.
std::vector<PlannedArrival> generate_trains(const scenarios::ScenarioConfig& scenario,
                                            const corridor::CorridorNetwork& network,
                                            TrainFactory& factory,
                                            stochastics::StreamSet& streams, double horizon_min);

}  // namespace portrail::ops
