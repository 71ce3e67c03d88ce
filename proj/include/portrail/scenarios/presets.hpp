#pragma once

#include <string>
#include <vector>

#include "portrail/scenarios/config.hpp"

namespace portrail::scenarios
{
// Multiplier on the unchanged lift-rate shape, tuned once so the unchanged
// presets land near their reference volumes. A calibration constant, not a
// measured quantity; see tools/tune_unchanged.cpp.
inline constexpr double kUnchangedRateScale = 0.841;

struct PresetInfo
{
  std::string name;
  std::string description;
};

std::vector<PresetInfo> list_presets();
bool is_preset(const std::string& name);

// Input fields of a named preset (unresolved). Throws ConfigError for an
// unknown name.
ScenarioConfig preset(const std::string& name);

}  // namespace portrail::scenarios
