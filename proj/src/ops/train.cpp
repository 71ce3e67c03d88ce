#include "portrail/ops/train.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>

namespace portrail::ops
{
std::string_view to_string(LifecycleState s) noexcept
{
  switch (s) {
    case LifecycleState::en_route_in: return "en_route_in";
    case LifecycleState::staged_awaiting_runaround: return "staged_awaiting_runaround";
    case LifecycleState::runaround: return "runaround";
    case LifecycleState::staged_awaiting_callup: return "staged_awaiting_callup";
    case LifecycleState::shunting_in: return "shunting_in";
    case LifecycleState::placed_lifting: return "placed_lifting";
    case LifecycleState::awaiting_callout: return "awaiting_callout";
    case LifecycleState::shunting_out: return "shunting_out";
    case LifecycleState::staged_awaiting_departure: return "staged_awaiting_departure";
    case LifecycleState::departed: return "departed";
  }
  return "unknown";
}

bool transition_allowed(LifecycleState from, LifecycleState to) noexcept
{
  using S = LifecycleState;
  switch (from) {
    case S::en_route_in:
      return to == S::staged_awaiting_runaround || to == S::staged_awaiting_callup;
    case S::staged_awaiting_runaround: return to == S::runaround;
    case S::runaround: return to == S::staged_awaiting_callup;
    case S::staged_awaiting_callup: return to == S::shunting_in;
    case S::shunting_in: return to == S::placed_lifting;
    case S::placed_lifting: return to == S::awaiting_callout;
    case S::awaiting_callout: return to == S::shunting_out;
    case S::shunting_out:
      return to == S::staged_awaiting_callup || to == S::staged_awaiting_departure;
    case S::staged_awaiting_departure: return to == S::departed;
    case S::departed: return false;
  }
  return false;
}

void Train::advance(LifecycleState to)
{
  if (!transition_allowed(state, to)) {
    std::ostringstream msg;
    msg << "train " << id << ": illegal transition " << to_string(state) << " -> "
        << to_string(to);
    throw LifecycleError(msg.str());
  }
  state = to;
}

Rake standard_rake(int wagons, double locomotive_length_m)
{
  if (wagons < 1) throw ConfigError("a rake needs at least one wagon");
  return Rake{wagons, locomotive_length_m + wagons * kWagonLengthM, wagons * kTeuPerWagon};
}

Rake long_rake()
{
  return Rake{kLongRakeWagons, kLongRakeLengthM, kLongRakeTeu};
}

int lifts_required(double teu, double teu_per_lift)
{
  if (teu < 0.0) throw ConfigError("negative TEU");
  if (!(teu_per_lift > 0.0)) throw ConfigError("TEU per lift must be positive");
  return static_cast<int>(std::lround(teu / teu_per_lift));
}

void validate_itinerary(TrainCategory category, const std::vector<std::string>& terminals,
                        const std::vector<std::string>& stevedores)
{
  const auto is_stevedore = [&](const std::string& t) {
    return std::find(stevedores.begin(), stevedores.end(), t) != stevedores.end();
  };
  const auto count = std::count_if(terminals.begin(), terminals.end(), is_stevedore);
  switch (category) {
    case TrainCategory::dedicated:
      if (count != 1) throw ConfigError("a dedicated train visits exactly one stevedore");
      break;
    case TrainCategory::split:
      if (count != 2) throw ConfigError("a split train visits exactly two stevedores");
      {
        std::vector<std::string> visited;
        std::copy_if(terminals.begin(), terminals.end(), std::back_inserter(visited), is_stevedore);
        if (visited[0] == visited[1]) throw ConfigError("a split train visits two different stevedores");
      }
      break;
    case TrainCategory::non_stevedore:
      if (count != 0) throw ConfigError("a non-stevedore train visits no stevedore");
      break;
  }
  if (terminals.empty()) throw ConfigError("empty itinerary");
}

}  // namespace portrail::ops
