#include "portrail/ops/service.hpp"

#include <cmath>
#include <sstream>

namespace portrail::ops
{
namespace
{
constexpr int kMaxRedraws = 100;
}

double service_duration(const ServiceJob& job, const corridor::TerminalSpec& terminal,
                        double train_length_m)
{
  const bool split = terminal.needs_split(train_length_m);
  if ((job.split_overhead > 0.0) && !split) {
    std::ostringstream msg;
    msg << "split overhead on a " << train_length_m << " m train at " << terminal.name
        << " that needs no split";
    throw LifecycleError(msg.str());
  }
  return job.shunt_in + job.split_overhead + job.placement_delay + job.lifting + job.shunt_out;
}

ServiceSampler::ServiceSampler(const scenarios::ScenarioConfig& scenario,
                               stochastics::StreamSet& streams)
    : scenario_(scenario),
      streams_(streams),
      inspection_min_per_100m_(scenario.timings.inspection_min_per_100m.value_or(
          scenario.calibration.inspection_min_per_100m))
{
}

double ServiceSampler::duration(const stochastics::Distribution& d,
                                stochastics::RandomStream& rng)
{
  double v = d.sample(rng);
  for (int i = 0; v < 0.0 && i < kMaxRedraws; ++i) {
    ++resampled_;
    v = d.sample(rng);
  }
  return v < 0.0 ? 0.0 : v;
}

double ServiceSampler::rate(const stochastics::Distribution& d, stochastics::RandomStream& rng)
{
  double v = d.sample(rng);
  for (int i = 0; !(v > 0.0) && i < kMaxRedraws; ++i) {
    ++resampled_;
    v = d.sample(rng);
  }
  if (!(v > 0.0)) throw ConfigError("lift-rate distribution never yields a positive rate");
  return v;
}

ServiceJob ServiceSampler::plan(TrainId train, const corridor::TerminalSpec& terminal,
                                double train_length_m, int lifts, bool locomotive_propels_onward)
{
  const auto& dists = scenario_.distributions.terminal(terminal.name);
  const std::string& t = terminal.name;
  const double hundreds = train_length_m / 100.0;
  const double propel = hundreds * scenario_.timings.propel_min_per_100m;

  ServiceJob job;
  job.train = train;
  job.terminal = t;
  job.lifts_required = lifts;
  job.shunt_in = duration(dists.shunt_in, streams_.stream("shunt_in/" + t)) + propel;
  job.split_overhead = terminal.needs_split(train_length_m) ? terminal.split_overhead_min : 0.0;
  job.placement_delay =
      duration(scenario_.distributions.placement_delay, streams_.stream("placement/" + t));

  job.lift_rate = dists.rate_law ? dists.rate_law->rate_for(lifts)
                                 : rate(dists.lift_rate, streams_.stream("lift_rate/" + t));
  job.lifting = lifts == 0 ? 0.0 : lifts / job.lift_rate * 60.0;

  job.shunt_out = duration(dists.shunt_out, streams_.stream("shunt_out/" + t)) + propel;
  if (!terminal.locomotive_stays_attached) {
    job.shunt_out += hundreds * inspection_min_per_100m_;
    if (locomotive_propels_onward) {
      job.shunt_out += duration(scenario_.distributions.locomotive_return,
                                streams_.stream("locomotive_return"));
    }
  }
  return job;
}

}  // namespace portrail::ops
