#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "portrail/stochastics/distribution.hpp"

namespace portrail::stochastics
{
// Lift rate that grows (or shrinks) with the size of the job:
// rate = intercept + slope * lifts, floored at `min_rate`.
struct RateLaw
{
  double intercept = 0.0;
  double slope = 0.0;
  double min_rate = 1.0;

  double rate_for(double lifts) const noexcept;
  bool operator==(const RateLaw&) const = default;
};

struct TerminalDistributions
{
  Distribution lift_rate;  // lifts per hour
  Distribution shunt_in;   // minutes, fixed part of the propel-in move
  Distribution shunt_out;  // minutes, fixed part of the propel-out move
  std::optional<RateLaw> rate_law;

  bool operator==(const TerminalDistributions&) const = default;
};

struct DistributionRegistry
{
  std::map<std::string, TerminalDistributions> terminals;
  // Relative deviation of actual from planned TEU per direction.
  Distribution container_variance = Distribution::constant(0.0);
  Distribution placement_delay = Distribution::constant(0.0);
  Distribution headway = Distribution::constant(10.0);
  Distribution interarrival = Distribution::constant(60.0);
  Distribution locomotive_return = Distribution::constant(5.0);

  const TerminalDistributions& terminal(const std::string& name) const;
  // Throws ConfigError naming the first terminal without entries.
  void validate(const std::vector<std::string>& terminal_names) const;

  bool operator==(const DistributionRegistry&) const = default;
};

}  // namespace portrail::stochastics
