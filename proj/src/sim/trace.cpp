#include "portrail/sim/trace.hpp"

namespace portrail::sim
{
LocationId EventTrace::find_location(std::string_view name) const noexcept
{
  for (std::size_t i = 0; i < meta.locations.size(); ++i) {
    if (meta.locations[i].name == name) return static_cast<LocationId>(i);
  }
  return kNoLocation;
}

}  // namespace portrail::sim
