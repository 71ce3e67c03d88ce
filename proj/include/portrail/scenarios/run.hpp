#pragma once

#include <string>
#include <vector>

#include "portrail/metrics/kpi.hpp"
#include "portrail/scenarios/config.hpp"
#include "portrail/sim/trace.hpp"

namespace portrail::scenarios
{
// Runs a resolved scenario and stamps the trace with the scenario echo.
sim::EventTrace simulate(const ScenarioConfig& scenario);

struct RunResult
{
  sim::EventTrace trace;
  metrics::KpiReport report;
};
RunResult run(const ScenarioConfig& scenario);

std::vector<std::string> sweepable_parameters();

// Copy of `base` with one parameter set from its textual value, re-resolved.
// Throws ConfigError for a non-sweepable parameter or a bad value.
ScenarioConfig with_parameter(const ScenarioConfig& base, const std::string& parameter,
                              const std::string& value);

// "17..32" (inclusive integer range) or a comma-separated list.
std::vector<std::string> parse_values(const std::string& spec);

// One independent run per value, at most `jobs` at a time; reports follow
// the order of `values`.
std::vector<metrics::KpiReport> sweep(const ScenarioConfig& base, const std::string& parameter,
                                      const std::vector<std::string>& values, int jobs = 1);

}  // namespace portrail::scenarios
