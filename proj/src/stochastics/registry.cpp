#include "portrail/stochastics/registry.hpp"

#include <algorithm>

#include "portrail/core/types.hpp"

namespace portrail::stochastics
{
double RateLaw::rate_for(double lifts) const noexcept
{
  return std::max(min_rate, intercept + slope * lifts);
}

const TerminalDistributions& DistributionRegistry::terminal(const std::string& name) const
{
  auto it = terminals.find(name);
  if (it == terminals.end()) throw ConfigError("no distributions registered for terminal " + name);
  return it->second;
}

void DistributionRegistry::validate(const std::vector<std::string>& terminal_names) const
{
  for (const auto& name : terminal_names) {
    if (!terminals.contains(name)) {
      throw ConfigError("distribution registry lacks lift-rate/shunt entries for terminal " + name);
    }
  }
}

}  // namespace portrail::stochastics
