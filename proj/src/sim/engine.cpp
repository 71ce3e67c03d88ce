#include "portrail/sim/engine.hpp"

#include <algorithm>
#include <sstream>

namespace portrail::sim
{
std::uint64_t Simulator::schedule(double time, EventKind kind, TrainId subject,
                                  LocationId location, Action action)
{
  if (!(time >= now_)) {
    std::ostringstream msg;
    msg << "event " << to_string(kind) << " for train " << subject << " scheduled at t=" << time
        << " but the clock is already at t=" << now_;
    throw LifecycleError(msg.str());
  }
  Pending p{Event{time, next_sequence_++, kind, subject, location}, std::move(action)};
  queue_.push_back(std::move(p));
  std::push_heap(queue_.begin(), queue_.end(), Later{});
  return queue_.back().event.sequence;
}

void Simulator::record(EventKind kind, TrainId train, LocationId location, std::int32_t occupancy)
{
  trace_.push_back(TraceEvent{now_, next_row_++, kind, train, location, occupancy});
}

std::size_t Simulator::run(double until)
{
  std::size_t count = 0;
  while (!queue_.empty() && queue_.front().event.time <= until) {
    std::pop_heap(queue_.begin(), queue_.end(), Later{});
    Pending p = std::move(queue_.back());
    queue_.pop_back();
    if (started_ && !fires_before(last_, p.event)) {
      throw LifecycleError("future-event list produced an out-of-order event");
    }
    started_ = true;
    last_ = p.event;
    now_ = p.event.time;
    ++processed_;
    ++count;
    if (p.action) p.action();
  }
  return count;
}

}  // namespace portrail::sim
