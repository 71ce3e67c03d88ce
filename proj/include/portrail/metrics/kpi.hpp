#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "portrail/sim/trace.hpp"

namespace portrail::metrics
{
inline constexpr double kSingleLineTripCap = 36.0;  // return trips per day
inline constexpr double kDaysPerYear = 365.0;

// Days excluded at the start of a run: the configured warm-up, or none when
// the horizon is too short to leave a window at least as long as it.
int effective_warmup_days(const sim::EventTrace& trace) noexcept;

// Per-train milestones of the servicing visits, pulled from a trace.
struct VisitTimes
{
  TrainId train = kNoTrain;
  LocationId terminal = kNoLocation;
  double call_up = -1.0;
  double lift_start = -1.0;
  double lift_complete = -1.0;
  double exit_complete = -1.0;  // -1 while the visit is still running
};
std::vector<VisitTimes> visits(const sim::EventTrace& trace);

// Completion time of each train's last visit (-1 if not finished), by id.
std::vector<double> service_completion_times(const sim::EventTrace& trace);

double annual_teu(const sim::EventTrace& trace);
double trains_per_day(const sim::EventTrace& trace);
double annual_teu_from_rate(double trains_per_day, double teu_per_train) noexcept;

struct TimeSplit
{
  double pct_lifting = 0.0;
  double pct_shunting = 0.0;
  double lifting_min = 0.0;
  double servicing_min = 0.0;
};
TimeSplit time_split(const sim::EventTrace& trace);

// Mean daily return trips over the capacity cap of 36.
double single_line_utilisation(double trips_per_day) noexcept;
// The same, as a whole percentage rounded half away from zero.
int single_line_utilisation_pct(double trips_per_day) noexcept;

struct TerminalStats
{
  std::string terminal;
  int capacity = 1;
  double busy_min = 0.0;
  double utilisation = 0.0;
  std::uint64_t services = 0;
  double min_service_min = 0.0;
  double mean_service_min = 0.0;
  double max_service_min = 0.0;
  double lifting_min = 0.0;
  double teu = 0.0;

  bool operator==(const TerminalStats&) const = default;
};

struct QueueStats
{
  std::string resource;
  int capacity_units = 0;
  double mean_occupancy = 0.0;  // time-weighted over the horizon
  int max_occupancy = 0;
  std::uint64_t grants = 0;
  double mean_wait_min = 0.0;
  double max_wait_min = 0.0;

  bool operator==(const QueueStats&) const = default;
};

struct TrainSummary
{
  TrainId id = kNoTrain;
  std::string category;
  int wagons = 0;
  double length_m = 0.0;
  double planned_import_teu = 0.0;
  double actual_import_teu = 0.0;
  double planned_export_teu = 0.0;
  double actual_export_teu = 0.0;
  double arrival_min = -1.0;
  double serviced_min = -1.0;
  double exit_min = -1.0;

  bool operator==(const TrainSummary&) const = default;
};

struct KpiReport
{
  std::string scenario;
  std::uint64_t seed = 0;
  int horizon_days = 0;
  int warmup_days = 0;
  double annual_teu = 0.0;
  double trains_per_day = 0.0;
  std::uint64_t trains_serviced = 0;  // inside the measurement window
  double pct_lifting = 0.0;
  double pct_shunting = 0.0;
  double single_line_trips_per_day = 0.0;
  double single_line_trips_peak = 0.0;
  double single_line_utilisation = 0.0;
  int single_line_utilisation_pct = 0;
  std::uint64_t entries = 0;
  std::uint64_t exits = 0;
  std::uint64_t residents = 0;
  std::uint64_t resampled_durations = 0;
  std::vector<TerminalStats> terminals;
  std::vector<QueueStats> queues;
  std::vector<TrainSummary> per_train;

  bool operator==(const KpiReport&) const = default;
};

KpiReport compute_report(const sim::EventTrace& trace);

nlohmann::json report_to_json(const KpiReport& report, bool include_trains = true);
KpiReport report_from_json(const nlohmann::json& j);

// Flat table `time_min,train_id,event,location`, one row per trace event,
// with fixed formatting so identical traces give identical bytes.
std::string trace_to_csv(const sim::EventTrace& trace);

// Writes `content` to `path`; throws IoError when the destination is not writable.
void write_file(const std::string& path, const std::string& content);

}  // namespace portrail::metrics
