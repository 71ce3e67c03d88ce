#include "portrail/corridor/network.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace portrail::corridor
{
namespace
{
TerminalSpec terminal(std::string name, TerminalKind kind, int sidings, double siding_len)
{
  TerminalSpec t;
  t.name = std::move(name);
  t.kind = kind;
  t.siding_count = sidings;
  t.siding_length_m = siding_len;
  t.requires_split_above_m = siding_len;
  return t;
}
}  // namespace

const TerminalSpec* CorridorNetwork::find_terminal(const std::string& name) const noexcept
{
  for (const auto& t : terminals) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

std::vector<std::string> CorridorNetwork::terminal_names() const
{
  std::vector<std::string> out;
  for (const auto& t : terminals) out.push_back(t.name);
  return out;
}

std::vector<std::string> CorridorNetwork::stevedore_names() const
{
  std::vector<std::string> out;
  for (const auto& t : terminals) {
    if (t.kind == TerminalKind::stevedore) out.push_back(t.name);
  }
  return out;
}

YardSpec CorridorNetwork::arrival_roads() const
{
  YardSpec y{botany_yard.name + "/arrival", {}};
  y.roads.assign(botany_yard.roads.begin(), botany_yard.roads.begin() + arrival_road_count);
  return y;
}

YardSpec CorridorNetwork::departure_roads() const
{
  YardSpec y{botany_yard.name + "/departure", {}};
  y.roads.assign(botany_yard.roads.begin() + arrival_road_count, botany_yard.roads.end());
  return y;
}

bool CorridorNetwork::reachable(const std::string& from, const std::string& to) const
{
  std::set<std::string> seen{from};
  std::deque<std::string> frontier{from};
  while (!frontier.empty()) {
    const std::string node = frontier.front();
    frontier.pop_front();
    if (node == to) return true;
    for (const auto& [a, b] : adjacency) {
      if (a == node && seen.insert(b).second) frontier.push_back(b);
    }
  }
  return false;
}

std::vector<TerminalSpec> default_terminals(scenarios::Variant variant)
{
  using scenarios::Variant;
  std::vector<TerminalSpec> out;

  TerminalSpec patrick = terminal("Patrick", TerminalKind::stevedore, 2, 650.0);
  TerminalSpec dpworld = terminal("DPWorld", TerminalKind::stevedore, 3, 350.0);
  TerminalSpec hph = terminal("HPH", TerminalKind::stevedore, 2, 650.0);
  TerminalSpec haulage = terminal("SydneyHaulage", TerminalKind::empty_park, 2, 650.0);
  TerminalSpec mcs = terminal("MCS", TerminalKind::empty_park, 2, 650.0);
  mcs.inside_port = false;

  switch (variant) {
    case Variant::as_is:
    case Variant::single_track_duplicated:
      out = {patrick, dpworld};
      break;
    case Variant::dpw_extended:
      dpworld.siding_length_m = 650.0;
      dpworld.requires_split_above_m = 650.0;
      out = {patrick, dpworld};
      break;
    case Variant::soon_to_be:
      out = {patrick, dpworld, hph};
      break;
    case Variant::centralized: {
      TerminalSpec central = terminal("Central", TerminalKind::stevedore, 3, 900.0);
      central.service_capacity = 3;
      central.locomotive_stays_attached = true;
      out = {central};
      break;
    }
  }
  out.push_back(haulage);
  out.push_back(mcs);
  return out;
}

CorridorNetwork build_network(const scenarios::ScenarioConfig& scenario)
{
  using scenarios::Variant;
  CorridorNetwork net;
  net.variant = scenario.variant;
  net.cooks_river_capacity = scenario.capacities.cooks_river;
  net.arrival_road_count = scenario.capacities.arrival_roads;
  net.botany_yard.name = kBotanyYard;
  const int roads = scenario.capacities.arrival_roads + scenario.capacities.departure_roads;
  net.botany_yard.roads.assign(static_cast<std::size_t>(std::max(roads, 0)),
                               scenario.capacities.road_length_m);
  net.single_track_capacity = scenario.capacities.single_track.value_or(
      scenario.variant == Variant::single_track_duplicated ? 2 : 1);
  net.terminals = default_terminals(scenario.variant);

  for (const auto& [name, ov] : scenario.terminal_overrides) {
    auto it = std::find_if(net.terminals.begin(), net.terminals.end(),
                           [&](const TerminalSpec& t) { return t.name == name; });
    if (it == net.terminals.end()) {
      throw ConfigError("terminal override for " + name + " conflicts with variant " +
                        std::string(to_string(scenario.variant)) + " (no such terminal)");
    }
    if (ov.siding_count) it->siding_count = *ov.siding_count;
    if (ov.siding_length_m) {
      it->siding_length_m = *ov.siding_length_m;
      if (!ov.requires_split_above_m) it->requires_split_above_m = *ov.siding_length_m;
    }
    if (ov.requires_split_above_m) it->requires_split_above_m = *ov.requires_split_above_m;
    if (ov.split_overhead_min) it->split_overhead_min = *ov.split_overhead_min;
    if (ov.service_capacity) it->service_capacity = *ov.service_capacity;
    if (ov.operating_hours) it->hours = *ov.operating_hours;
  }

  net.adjacency.emplace_back(kEnfield, kCooksRiver);
  net.adjacency.emplace_back(kCooksRiver, kEnfield);
  net.adjacency.emplace_back(kCooksRiver, kSingleTrack);
  net.adjacency.emplace_back(kSingleTrack, kCooksRiver);
  net.adjacency.emplace_back(kSingleTrack, kBotanyYard);
  net.adjacency.emplace_back(kBotanyYard, kSingleTrack);
  for (const auto& t : net.terminals) {
    const char* hub = t.inside_port ? kBotanyYard : kCooksRiver;
    net.adjacency.emplace_back(hub, t.name);
    net.adjacency.emplace_back(t.name, hub);
  }

  validate(net);
  return net;
}

void validate(const CorridorNetwork& net)
{
  if (net.cooks_river_capacity < 1) throw ConfigError("Cook's River capacity must be >= 1");
  if (net.single_track_capacity < 1) throw ConfigError("single-track capacity must be >= 1");
  if (net.arrival_road_count < 1 ||
      net.arrival_road_count >= static_cast<int>(net.botany_yard.roads.size())) {
    throw ConfigError("Botany Yard needs at least one arrival road and one departure road");
  }
  std::set<std::string> names;
  for (const auto& t : net.terminals) {
    if (!names.insert(t.name).second) throw ConfigError("duplicate terminal " + t.name);
    if (t.siding_count < 1) throw ConfigError(t.name + ": siding_count must be >= 1");
    if (!(t.siding_length_m > 0.0)) throw ConfigError(t.name + ": siding length must be positive");
    if (t.requires_split_above_m > t.siding_length_m) {
      throw ConfigError(t.name + ": split threshold exceeds the siding length");
    }
    if (t.split_overhead_min < 0.0) throw ConfigError(t.name + ": negative split overhead");
    if (t.service_capacity < 1) throw ConfigError(t.name + ": service_capacity must be >= 1");
    if (t.hours.open_min < 0.0 || t.hours.close_min > kMinutesPerDay ||
        t.hours.open_min >= t.hours.close_min) {
      throw ConfigError(t.name + ": operating hours must satisfy 0 <= open < close <= 1440");
    }
    if (!net.reachable(kEnfield, t.name)) {
      throw ConfigError(t.name + " is not reachable from " + kEnfield);
    }
  }
}

}  // namespace portrail::corridor
