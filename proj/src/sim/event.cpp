#include "portrail/sim/event.hpp"

#include <array>
#include <utility>

namespace portrail::sim
{
namespace
{
constexpr std::array<std::pair<EventKind, std::string_view>, 21> kNames{{
    {EventKind::arrival, "arrival"},
    {EventKind::reach_cooks_river, "reach_cooks_river"},
    {EventKind::track_in_start, "track_in_start"},
    {EventKind::track_in_end, "track_in_end"},
    {EventKind::yard_arrival, "yard_arrival"},
    {EventKind::runaround_start, "runaround_start"},
    {EventKind::runaround_complete, "runaround_complete"},
    {EventKind::call_up, "call_up"},
    {EventKind::shunt_in_complete, "shunt_in_complete"},
    {EventKind::lift_start, "lift_start"},
    {EventKind::lift_complete, "lift_complete"},
    {EventKind::call_out, "call_out"},
    {EventKind::exit_complete, "exit_complete"},
    {EventKind::departure, "departure"},
    {EventKind::track_out_start, "track_out_start"},
    {EventKind::track_out_end, "track_out_end"},
    {EventKind::exit, "exit"},
    {EventKind::resource_request, "resource_request"},
    {EventKind::resource_grant, "resource_grant"},
    {EventKind::resource_release, "resource_release"},
    {EventKind::internal, "internal"},
}};
}  // namespace

std::string_view to_string(EventKind k) noexcept
{
  for (const auto& [kind, name] : kNames) {
    if (kind == k) return name;
  }
  return "internal";
}

std::optional<EventKind> event_kind_from_string(std::string_view s) noexcept
{
  for (const auto& [kind, name] : kNames) {
    if (name == s) return kind;
  }
  return std::nullopt;
}

}  // namespace portrail::sim
