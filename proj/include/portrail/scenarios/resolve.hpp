#pragma once

#include <vector>

#include "portrail/scenarios/config.hpp"

namespace portrail::scenarios
{
// Range and consistency checks on the input fields; throws ConfigError.
void validate_inputs(const ScenarioConfig& scenario);

// Validates the inputs, builds the network to catch variant/override
// conflicts, and derives `calibration` and `distributions`.
ScenarioConfig resolve(ScenarioConfig scenario);

// Unit-mean lift-rate shape used for unchanged (variable-rate) terminals:
// evenly spaced quantiles of a left-skewed triangular law, renormalised.
std::vector<double> unchanged_rate_shape();

}  // namespace portrail::scenarios
