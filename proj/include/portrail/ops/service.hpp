#pragma once

#include <cstdint>
#include <string>

#include "portrail/corridor/network.hpp"
#include "portrail/scenarios/config.hpp"
#include "portrail/stochastics/rng.hpp"

namespace portrail::ops
{
// One terminal visit's sampled activity durations, in minutes.
struct ServiceJob
{
  TrainId train = kNoTrain;
  std::string terminal;
  int lifts_required = 0;
  double shunt_in = 0.0;
  double split_overhead = 0.0;
  double placement_delay = 0.0;
  double lifting = 0.0;
  double shunt_out = 0.0;
  double lift_rate = 0.0;  // lifts per hour used for `lifting`
};

// Sum of the job's components. Throws LifecycleError when the job's split
// overhead disagrees with the terminal's split rule for `train_length_m`.
double service_duration(const ServiceJob& job, const corridor::TerminalSpec& terminal,
                        double train_length_m);

// Draws service jobs from a resolved scenario's distributions. Negative
// durations and non-positive rates are redrawn; every redraw is counted.
class ServiceSampler
{
 public:
  ServiceSampler(const scenarios::ScenarioConfig& scenario, stochastics::StreamSet& streams);

  ServiceJob plan(TrainId train, const corridor::TerminalSpec& terminal, double train_length_m,
                  int lifts, bool locomotive_propels_onward);

  // Non-negative duration draw; after 100 failed redraws the value is clamped to 0.
  double duration(const stochastics::Distribution& d, stochastics::RandomStream& rng);
  double rate(const stochastics::Distribution& d, stochastics::RandomStream& rng);

  std::uint64_t resampled() const noexcept { return resampled_; }

 private:
  const scenarios::ScenarioConfig& scenario_;
  stochastics::StreamSet& streams_;
  double inspection_min_per_100m_;
  std::uint64_t resampled_ = 0;
};

}  // namespace portrail::ops
