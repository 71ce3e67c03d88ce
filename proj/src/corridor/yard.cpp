#include "portrail/corridor/yard.hpp"

#include <algorithm>
#include <sstream>

namespace portrail::corridor
{
int slots_needed(double road_length_m, double train_length_m) noexcept
{
  if (train_length_m <= 0.5 * road_length_m) return 1;
  if (train_length_m <= road_length_m) return 2;
  return 0;
}

YardState::YardState(YardSpec spec) : spec_(std::move(spec))
{
  if (spec_.roads.empty()) throw ConfigError("yard " + spec_.name + " has no roads");
  for (double len : spec_.roads) {
    if (!(len > 0.0)) throw ConfigError("yard " + spec_.name + " has a non-positive road length");
    roads_.push_back(Road{len, {}, 0});
  }
}

std::optional<int> YardState::choose_road(double train_length_m) const
{
  // Complete a half-used road first so empty roads stay free for long trains.
  for (std::size_t i = 0; i < roads_.size(); ++i) {
    const Road& r = roads_[i];
    if (r.used == 1 && slots_needed(r.length_m, train_length_m) == 1) return static_cast<int>(i);
  }
  std::optional<int> best;
  for (std::size_t i = 0; i < roads_.size(); ++i) {
    const Road& r = roads_[i];
    if (r.used != 0 || slots_needed(r.length_m, train_length_m) == 0) continue;
    if (!best || r.length_m < roads_[*best].length_m) best = static_cast<int>(i);
  }
  return best;
}

bool YardState::can_admit(double train_length_m) const
{
  return train_length_m > 0.0 && choose_road(train_length_m).has_value();
}

bool YardState::can_ever_admit(double train_length_m) const
{
  return std::any_of(roads_.begin(), roads_.end(), [&](const Road& r) {
    return slots_needed(r.length_m, train_length_m) > 0;
  });
}

std::optional<int> YardState::admit(TrainId train, double train_length_m)
{
  if (!(train_length_m > 0.0)) return std::nullopt;
  auto road = choose_road(train_length_m);
  if (!road) return std::nullopt;
  Road& r = roads_[*road];
  const int slots = slots_needed(r.length_m, train_length_m);
  r.trains.push_back(Placement{train, slots});
  r.used += slots;
  return road;
}

void YardState::release(TrainId train)
{
  for (Road& r : roads_) {
    auto it = std::find_if(r.trains.begin(), r.trains.end(),
                           [train](const Placement& p) { return p.train == train; });
    if (it != r.trains.end()) {
      r.used -= it->slots;
      r.trains.erase(it);
      return;
    }
  }
  std::ostringstream msg;
  msg << "train " << train << " is not staged in " << spec_.name;
  throw LifecycleError(msg.str());
}

int YardState::used_slots() const noexcept
{
  int n = 0;
  for (const Road& r : roads_) n += r.used;
  return n;
}

std::size_t YardState::train_count() const noexcept
{
  std::size_t n = 0;
  for (const Road& r : roads_) n += r.trains.size();
  return n;
}

bool yard_admit(YardState& yard, TrainId train, double train_length_m)
{
  return yard.admit(train, train_length_m).has_value();
}

void YardPolicy::admit(TrainId train, double length_m)
{
  if (!state_.admit(train, length_m)) {
    throw LifecycleError("yard admitted a train that does not fit");
  }
}

}  // namespace portrail::corridor
