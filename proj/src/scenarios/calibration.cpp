#include "portrail/scenarios/calibration.hpp"

#include <cmath>

#include "portrail/ops/train.hpp"

namespace portrail::scenarios
{
CycleSolution solve_cycle(const ObservedRow& row)
{
  if (!(row.trains_per_day > 0.0)) throw ConfigError("calibration row needs trains_per_day > 0");
  if (row.terminals < 1) throw ConfigError("calibration row needs at least one terminal");
  if (!(row.lifting_pct > 0.0) || row.lifting_pct >= 100.0) {
    throw ConfigError("calibration row needs 0 < lifting% < 100");
  }
  if (row.lifts_per_train < 1) throw ConfigError("calibration row needs lifts_per_train >= 1");
  CycleSolution s;
  s.cycle_min = kMinutesPerDay * row.terminals / row.trains_per_day;
  s.lifting_min = s.cycle_min * row.lifting_pct / 100.0;
  s.shunt_min = s.cycle_min - s.lifting_min;
  s.rate_per_hr = row.lifts_per_train / s.lifting_min * 60.0;
  return s;
}

CalibrationSet calibrate(const ObservedRow& row, std::vector<std::string> terminal_names)
{
  const CycleSolution s = solve_cycle(row);
  if (terminal_names.empty()) {
    for (int i = 1; i <= row.terminals; ++i) terminal_names.push_back("T" + std::to_string(i));
  }
  CalibrationSet out;
  for (const auto& name : terminal_names) {
    out.terminals[name] = TerminalCalibration{s.rate_per_hr / 0.8, s.shunt_min / 2.0, s.shunt_min / 2.0};
  }
  out.derivation_note = "symmetric: every terminal reproduces the row's cycle time";
  return out;
}

PairSolution calibrate_pair(const ObservedRow& smaller, const ObservedRow& larger)
{
  if (larger.terminals != smaller.terminals + 1) {
    throw ConfigError("paired calibration needs rows differing by exactly one terminal");
  }
  if (smaller.terminals != 2) throw ConfigError("paired calibration expects a two-terminal base row");
  if (!(larger.trains_per_day > smaller.trains_per_day)) {
    throw ConfigError("the added terminal must raise trains per day");
  }
  // Let b and w be the best and weaker throughput (trains/day/terminal):
  //   b + w = T1, 2b + w = T2  =>  b = T2 - T1, w = 2 T1 - T2.
  // Busy-time lifting shares follow the same weights:
  //   (fb + fw) / 2 = p1, (2 fb + fw) / 3 = p2.
  const double b = larger.trains_per_day - smaller.trains_per_day;
  const double w = 2.0 * smaller.trains_per_day - larger.trains_per_day;
  if (!(w > 0.0) || w > b) throw ConfigError("rows imply no consistent best/weaker split");
  const double p1 = smaller.lifting_pct / 100.0;
  const double p2 = larger.lifting_pct / 100.0;
  const double fb = 3.0 * p2 - 2.0 * p1;
  const double fw = 2.0 * p1 - fb;
  if (!(fb > 0.0 && fb < 1.0 && fw > 0.0 && fw < 1.0)) {
    throw ConfigError("rows imply a lifting share outside (0, 1)");
  }
  const auto solve = [&](double per_day, double share) {
    return solve_cycle(ObservedRow{per_day, share * 100.0, 1, smaller.lifts_per_train});
  };
  return PairSolution{solve(b, fb), solve(w, fw)};
}

CalibrationSet default_calibration(const Timings& timings)
{
  const PairSolution pair = calibrate_pair(kTwoTerminalRow, kThreeTerminalRow);
  const double length = ops::standard_rake(ops::kMaxStandardWagons, timings.locomotive_length_m).length_m;
  const double hundreds = length / 100.0;
  const double propel_both = 2.0 * hundreds * timings.propel_min_per_100m;
  constexpr double split_overhead = 1.0;

  // Best terminal: shunt = fixed + propel in/out + split + inspection * L.
  const double inspection =
      (pair.best.shunt_min - kBestFixedShuntMin - propel_both - split_overhead) / hundreds;
  if (inspection < 0.0) throw ConfigError("shunt timings exceed the calibrated shunt budget");
  // Weaker terminal: no split; its extra shunt time is fixed overhead.
  const double weaker_fixed = pair.weaker.shunt_min - propel_both - inspection * hundreds;

  CalibrationSet out;
  out.inspection_min_per_100m = inspection;
  const TerminalCalibration best{pair.best.rate_per_hr / 0.8, kBestFixedShuntMin / 2.0,
                                 kBestFixedShuntMin / 2.0};
  out.terminals[kBestTerminal] = best;
  out.terminals[kWeakerTerminal] =
      TerminalCalibration{pair.weaker.rate_per_hr / 0.8, weaker_fixed / 2.0, weaker_fixed / 2.0};
  out.terminals["HPH"] = best;
  out.terminals["Central"] = TerminalCalibration{best.max_lift_rate, 0.0, 0.0};
  const TerminalCalibration park{kParkRate80 / 0.8, kParkFixedShuntMin, kParkFixedShuntMin};
  out.terminals["SydneyHaulage"] = park;
  out.terminals["MCS"] = park;
  out.derivation_note =
      "paired: the two- and three-stevedore rows identify a best terminal (DPWorld; HPH and the "
      "central terminal copy its rate) and a weaker one (Patrick); shunts split into propel, "
      "inspection and fixed parts for a standard 32-wagon train";
  return out;
}

}  // namespace portrail::scenarios
