#include "portrail/core/types.hpp"

namespace portrail
{
std::string_view to_string(TrainCategory c) noexcept
{
  switch (c) {
    case TrainCategory::dedicated: return "dedicated";
    case TrainCategory::split: return "split";
    case TrainCategory::non_stevedore: return "non_stevedore";
  }
  return "unknown";
}

std::optional<TrainCategory> train_category_from_string(std::string_view s) noexcept
{
  if (s == "dedicated") return TrainCategory::dedicated;
  if (s == "split") return TrainCategory::split;
  if (s == "non_stevedore") return TrainCategory::non_stevedore;
  return std::nullopt;
}

std::string_view to_string(TerminalKind k) noexcept
{
  return k == TerminalKind::stevedore ? "stevedore" : "empty_park";
}

}  // namespace portrail
