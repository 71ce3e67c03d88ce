#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "portrail/sim/event.hpp"
#include "portrail/sim/trace.hpp"

namespace portrail::sim
{
// Deterministic event kernel: a clock, a future-event list ordered by
// (time, insertion sequence), and the trace rows produced while running.
class Simulator
{
 public:
  using Action = std::function<void()>;

  double now() const noexcept { return now_; }

  // Throws LifecycleError when `time` precedes the clock.
  std::uint64_t schedule(double time, EventKind kind, TrainId subject, LocationId location,
                         Action action);
  std::uint64_t schedule_after(double delay, EventKind kind, TrainId subject,
                               LocationId location, Action action)
  {
    return schedule(now_ + delay, kind, subject, location, std::move(action));
  }

  // Appends a trace row stamped with the current clock.
  void record(EventKind kind, TrainId train, LocationId location, std::int32_t occupancy = -1);

  // Processes every pending event with time <= until, in (time, sequence)
  // order. Returns the number of events processed by this call.
  std::size_t run(double until);

  bool idle() const noexcept { return queue_.empty(); }
  std::size_t pending() const noexcept { return queue_.size(); }
  std::uint64_t processed() const noexcept { return processed_; }
  const Event& last_processed() const noexcept { return last_; }

  const std::vector<TraceEvent>& trace() const noexcept { return trace_; }
  std::vector<TraceEvent> take_trace() noexcept { return std::move(trace_); }

 private:
  struct Pending
  {
    Event event;
    Action action;
  };
  struct Later
  {
    bool operator()(const Pending& a, const Pending& b) const noexcept
    {
      return fires_before(b.event, a.event);
    }
  };

  double now_ = 0.0;
  std::uint64_t next_sequence_ = 0;
  std::uint64_t next_row_ = 0;
  std::uint64_t processed_ = 0;
  Event last_{};
  bool started_ = false;
  std::vector<Pending> queue_;  // binary heap under Later
  std::vector<TraceEvent> trace_;
};

}  // namespace portrail::sim
