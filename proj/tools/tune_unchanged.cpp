// Searches the unchanged-rate multiplier that brings the two unchanged
// presets closest to their reference annual volumes (minimising the larger
// relative error). Prints the search trail and the chosen value, which is
// then frozen as scenarios::kUnchangedRateScale.
#include <cmath>
#include <cstdio>
#include <utility>

#include "portrail/scenarios/presets.hpp"
#include "portrail/scenarios/resolve.hpp"
#include "portrail/scenarios/run.hpp"

namespace
{
using portrail::scenarios::preset;
using portrail::scenarios::resolve;

constexpr double kTargetAsIs = 0.919e6;
constexpr double kTargetSoon = 1.493e6;

std::pair<double, double> errors(double scale)
{
  auto a = preset("unchanged_as_is");
  auto b = preset("unchanged_soon_to_be");
  a.unchanged_rate_scale = scale;
  b.unchanged_rate_scale = scale;
  const double ta = portrail::scenarios::run(resolve(a)).report.annual_teu;
  const double tb = portrail::scenarios::run(resolve(b)).report.annual_teu;
  return {ta / kTargetAsIs - 1.0, tb / kTargetSoon - 1.0};
}

double worst(double scale)
{
  const auto [ea, eb] = errors(scale);
  return std::max(std::abs(ea), std::abs(eb));
}
}  // namespace

int main()
{
  double best = 1.0;
  double best_err = worst(best);
  for (double step : {0.01, 0.001}) {
    const double centre = best;
    for (int i = -15; i <= 15; ++i) {
      const double s = centre + i * step;
      if (s <= 0.0) continue;
      const double e = worst(s);
      if (e < best_err) {
        best_err = e;
        best = s;
      }
    }
  }
  const auto [ea, eb] = errors(best);
  std::printf("scale %.3f  as_is error %+.4f  soon_to_be error %+.4f\n", best, ea, eb);
  return 0;
}
