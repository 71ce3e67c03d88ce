#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "portrail/core/types.hpp"
#include "portrail/sim/event.hpp"

namespace portrail::sim
{
struct TraceEvent
{
  double time = 0.0;
  std::uint64_t sequence = 0;
  EventKind kind = EventKind::internal;
  TrainId train = kNoTrain;
  LocationId location = kNoLocation;
  // Live occupancy of `location` right after a resource grant/release;
  // -1 for rows that are not resource bookkeeping.
  std::int32_t occupancy = -1;
};

enum class LocationKind : std::uint8_t
{
  source,
  staging,
  track,
  yard,
  terminal,
};

struct LocationInfo
{
  std::string name;
  LocationKind kind = LocationKind::staging;
  // Capacity expressed in the resource's own units: trains for count-based
  // resources, half-road slots for yards. Zero means unbounded.
  int capacity_units = 0;
  bool stevedore = false;
};

struct VisitRecord
{
  LocationId terminal = kNoLocation;
  double import_teu = 0.0;
  double export_teu = 0.0;
};

struct TrainRecord
{
  TrainId id = kNoTrain;
  TrainCategory category = TrainCategory::dedicated;
  int wagon_count = 0;
  double length_m = 0.0;
  double teu_capacity = 0.0;
  double planned_import_teu = 0.0;
  double actual_import_teu = 0.0;
  double planned_export_teu = 0.0;
  double actual_export_teu = 0.0;
  std::vector<VisitRecord> itinerary;
};

struct RunMetadata
{
  std::string scenario_name;
  std::string scenario_echo;  // JSON text of the effective scenario
  std::uint64_t seed = 0;
  int horizon_days = 0;
  int warmup_days = 0;
  std::vector<LocationInfo> locations;
  std::uint64_t resampled_durations = 0;
};

// Time-ordered record of one run. Rows are appended in processing order, so
// the sequence is strictly increasing and time never decreases.
struct EventTrace
{
  std::vector<TraceEvent> events;
  std::vector<TrainRecord> trains;
  RunMetadata meta;

  double horizon_minutes() const noexcept { return meta.horizon_days * kMinutesPerDay; }
  LocationId find_location(std::string_view name) const noexcept;
};

}  // namespace portrail::sim
