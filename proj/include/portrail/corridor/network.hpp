#pragma once

#include <string>
#include <utility>
#include <vector>

#include "portrail/corridor/yard.hpp"
#include "portrail/scenarios/config.hpp"

namespace portrail::corridor
{
inline constexpr const char* kEnfield = "Enfield";
inline constexpr const char* kCooksRiver = "CooksRiver";
inline constexpr const char* kSingleTrack = "SingleTrack";
inline constexpr const char* kBotanyYard = "BotanyYard";

struct TerminalSpec
{
  std::string name;
  TerminalKind kind = TerminalKind::stevedore;
  int siding_count = 1;
  double siding_length_m = 650.0;
  // Rakes longer than this are split across sidings before servicing.
  double requires_split_above_m = 650.0;
  double split_overhead_min = 1.0;
  int service_capacity = 1;
  scenarios::OperatingHours hours;
  // Reached through the single-track section (everything but MCS).
  bool inside_port = true;
  // Streamlined interface: the locomotive stays coupled during servicing,
  // so there is no detach, reattach, inspection or locomotive return.
  bool locomotive_stays_attached = false;

  bool needs_split(double train_length_m) const noexcept
  {
    return train_length_m > requires_split_above_m;
  }
};

// The Enfield-Botany queue network: Enfield source/sink, Cook's River
// staging, the single-track section, Botany Yard, and the terminals.
struct CorridorNetwork
{
  scenarios::Variant variant = scenarios::Variant::as_is;
  int cooks_river_capacity = 3;
  YardSpec botany_yard;
  int arrival_road_count = 2;  // the first roads of botany_yard; the rest are departure roads
  int single_track_capacity = 1;
  std::vector<TerminalSpec> terminals;
  std::vector<std::pair<std::string, std::string>> adjacency;

  const TerminalSpec* find_terminal(const std::string& name) const noexcept;
  std::vector<std::string> terminal_names() const;
  std::vector<std::string> stevedore_names() const;
  YardSpec arrival_roads() const;
  YardSpec departure_roads() const;
  bool reachable(const std::string& from, const std::string& to) const;
};

// Terminal line-up for a variant before any overrides.
std::vector<TerminalSpec> default_terminals(scenarios::Variant variant);

// Builds and validates the network for a scenario. Throws ConfigError on
// overrides that name terminals absent from the variant or that break a
// terminal invariant.
CorridorNetwork build_network(const scenarios::ScenarioConfig& scenario);

void validate(const CorridorNetwork& network);

}  // namespace portrail::corridor
