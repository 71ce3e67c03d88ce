#pragma once

#include "portrail/corridor/network.hpp"
#include "portrail/scenarios/config.hpp"
#include "portrail/sim/trace.hpp"

namespace portrail::ops
{
// Location names used in traces beyond the terminals themselves.
inline constexpr const char* kArrivalRoads = "BotanyYard/arrival";
inline constexpr const char* kDepartureRoads = "BotanyYard/departure";

// Runs one simulation of a resolved scenario over its horizon and returns
// the full trace. Every train movement passes through the lifecycle state
// machine; an illegal transition aborts with LifecycleError.
//
// Flow per train: Enfield -> Cook's River (reserved before the corridor
// run) -> arrival road -> single track -> run-around -> terminal visits ->
// departure road -> single track -> Enfield. Terminals outside the port are
// served straight from Cook's River. Resources are always requested in that
// order and the terminal is let go before a further visit is requested, so
// no cycle of waiting trains can form.
sim::EventTrace run_simulation(const scenarios::ScenarioConfig& scenario,
                               const corridor::CorridorNetwork& network);

}  // namespace portrail::ops
