#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "portrail/scenarios/config.hpp"

namespace portrail::scenarios
{
// Parses and resolves a scenario document. Either "preset" names a base
// preset whose fields the remaining keys override, or the document must
// supply variant, lift_mode, horizon_days and seed. Unknown keys, bad
// values and variant/override conflicts raise ConfigError. An "effective"
// key (as written by echo) is accepted and ignored.
ScenarioConfig load_scenario(const nlohmann::json& doc);
ScenarioConfig load_scenario_text(std::string_view text);
ScenarioConfig load_scenario_file(const std::filesystem::path& path);

// A preset name or a path to a scenario document.
ScenarioConfig load_scenario_ref(const std::string& name_or_path);

// Full document of the scenario's inputs plus an "effective" block with the
// resolved calibration and distributions. load_scenario(echo(s)) == s.
nlohmann::json echo(const ScenarioConfig& scenario);

nlohmann::json distribution_to_json(const stochastics::Distribution& d);
stochastics::Distribution distribution_from_json(const nlohmann::json& j, const std::string& where);

}  // namespace portrail::scenarios
