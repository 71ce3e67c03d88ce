#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "portrail/core/types.hpp"

namespace portrail::sim
{
enum class EventKind : std::uint8_t
{
  arrival,            // train appears at the Enfield source
  reach_cooks_river,
  track_in_start,
  track_in_end,
  yard_arrival,
  runaround_start,
  runaround_complete,
  call_up,
  shunt_in_complete,  // train placed, servicing may begin
  lift_start,
  lift_complete,
  call_out,
  exit_complete,      // train back out of the terminal
  departure,          // train leaves the port area
  track_out_start,
  track_out_end,
  exit,               // train back at the Enfield sink
  resource_request,
  resource_grant,
  resource_release,
  internal,           // kernel continuation, never traced
};

std::string_view to_string(EventKind k) noexcept;
std::optional<EventKind> event_kind_from_string(std::string_view s) noexcept;

struct Event
{
  double time = 0.0;
  std::uint64_t sequence = 0;
  EventKind kind = EventKind::internal;
  TrainId subject = kNoTrain;
  LocationId location = kNoLocation;
};

// Total order used by the future-event list.
inline bool fires_before(const Event& a, const Event& b) noexcept
{
  if (a.time != b.time) return a.time < b.time;
  return a.sequence < b.sequence;
}

}  // namespace portrail::sim
