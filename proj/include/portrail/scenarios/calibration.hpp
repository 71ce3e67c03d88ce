#pragma once

#include <string>
#include <vector>

#include "portrail/scenarios/config.hpp"

namespace portrail::scenarios
{
// Observed peak-capacity outcome of a terminal configuration.
struct ObservedRow
{
  double trains_per_day = 0.0;
  double lifting_pct = 0.0;  // share of terminal time spent lifting, in percent
  int terminals = 0;
  int lifts_per_train = 124;
};

// Reference rows: two and three stevedores at constant 80% rates.
inline constexpr ObservedRow kTwoTerminalRow{16.0, 85.8, 2, 124};
inline constexpr ObservedRow kThreeTerminalRow{25.4, 86.5, 3, 124};

// Minutes per train per terminal, split into lifting and shunting.
struct CycleSolution
{
  double cycle_min = 0.0;
  double lifting_min = 0.0;
  double shunt_min = 0.0;
  double rate_per_hr = 0.0;  // lifts per hour while lifting
};

// cycle = 1440 * terminals / trains_per_day; lifting = cycle * lifting%;
// rate = lifts / lifting; shunt = cycle - lifting. Throws ConfigError on a
// zero-train row or lifting% outside (0, 100).
CycleSolution solve_cycle(const ObservedRow& row);

// Every terminal gets the row's cycle: max rate = rate / 0.8 and the shunt
// budget split evenly between shunt-in and shunt-out. Unnamed terminals are
// labelled T1..Tn.
CalibrationSet calibrate(const ObservedRow& row, std::vector<std::string> terminal_names = {});

// Two rows that differ by one added terminal with the best terminal's
// performance: the added terminal reveals the best cycle, the smaller row
// then fixes the weaker terminal's cycle.
struct PairSolution
{
  CycleSolution best;
  CycleSolution weaker;
};
PairSolution calibrate_pair(const ObservedRow& smaller, const ObservedRow& larger);

// Stock calibration of every terminal, derived from the reference rows for a
// standard 32-wagon train under the given shunt timings.
CalibrationSet default_calibration(const Timings& timings);

// Name of the terminal whose parameters the reference rows identify as best.
inline constexpr const char* kBestTerminal = "DPWorld";
inline constexpr const char* kWeakerTerminal = "Patrick";

// Fixed (length-independent) shunt minutes assumed at the best terminal,
// split evenly in and out; the remainder of its shunt budget is attributed
// to per-metre inspection.
inline constexpr double kBestFixedShuntMin = 2.0;
// Non-stevedore parks: lift rate at 80% and fixed shunts.
inline constexpr double kParkRate80 = 40.0;
inline constexpr double kParkFixedShuntMin = 10.0;

}  // namespace portrail::scenarios
