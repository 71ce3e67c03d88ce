#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "portrail/analytics/records.hpp"
#include "portrail/sim/trace.hpp"

namespace portrail::analytics
{
inline constexpr double kStandardTrainLengthM = 650.0;

// Interval a train spends in the yard area: from its first arrive movement
// (or first movement) to its last depart movement (or last movement).
// nullopt for records without movements or with unbalanced terminal
// enter/exit pairs.
struct Residency
{
  Timestamp from;
  Timestamp to;
};
std::optional<Residency> residency(const DopRecord& record);
bool balanced_terminal_visits(const DopRecord& record);

struct SimultaneityResult
{
  // trains resident -> number of movement events observing that count
  std::map<int, std::uint64_t> histogram;
  // 650m-slot usage (sum of ceil(length / 650)) -> movement events
  std::map<int, std::uint64_t> slot_histogram;
  std::uint64_t movement_events = 0;
  std::uint64_t accepted_records = 0;
  std::uint64_t skipped_records = 0;  // no movements or unbalanced visits

  // Share of movement events with at most `k` trains (or slots) resident.
  double share_at_most(int k) const;
  double slot_share_at_most(int k) const;
  int peak() const;
};
SimultaneityResult simultaneous_trains(const std::vector<DopRecord>& records);

struct WeekdayStats
{
  std::uint64_t total = 0;
  std::uint64_t days = 0;  // dates of this weekday inside the observed span
  std::uint64_t min = 0;
  double mean = 0.0;
  std::uint64_t max = 0;
};
struct WeekdayProfile
{
  std::array<WeekdayStats, 7> by_weekday;  // index 0 = Monday
  std::uint64_t counted = 0;
  std::uint64_t missing = 0;  // records without a usable actual arrival
};
// Counts actual arrivals per calendar date over the span from the first to
// the last arrival date (dates with no arrivals count as zero) and
// summarises them per weekday.
WeekdayProfile arrivals_by_weekday(const std::vector<DopRecord>& records);

struct TimeOfDayHistogram
{
  int bin_min = 60;
  std::vector<std::uint64_t> counts;  // 1440 / bin_min bins from midnight
  std::uint64_t counted = 0;
  std::uint64_t missing = 0;
  double coverage = 0.0;  // counted / records (1 for an empty input)
};
TimeOfDayHistogram arrival_histogram(const std::vector<DopRecord>& records, int bin_min);
TimeOfDayHistogram departure_histogram(const std::vector<DopRecord>& records, int bin_min);

struct CorrectedShunt
{
  double minutes = 0.0;
  bool clamped = false;  // the offset exceeded the raw time
};
// raw - offset / 100 * minutes_per_100m, floored at zero.
CorrectedShunt shunt_correction(double raw_min, double circuit_offset_m, double min_per_100m = 1.0);

struct ShuntObservation
{
  std::string train_id;
  std::string terminal;
  double raw_in_min = 0.0;   // first lift - enter_terminal
  double raw_out_min = 0.0;  // exit_terminal - last lift
  CorrectedShunt corrected_in;
  CorrectedShunt corrected_out;
};
struct ShuntSummary
{
  std::string terminal;
  double offset_m = 0.0;
  std::uint64_t services = 0;
  double mean_raw_in = 0.0;
  double mean_raw_out = 0.0;
  double mean_corrected_in = 0.0;
  double mean_corrected_out = 0.0;
  std::uint64_t clamped = 0;
};
struct ShuntAnalysis
{
  std::vector<ShuntObservation> observations;
  std::vector<ShuntSummary> by_terminal;
  std::uint64_t unmatched_lifts = 0;
};
// Pairs each lift record with the DOP terminal visit (same terminal, window
// containing the lifts) and corrects both shunt directions with the
// terminal's track-circuit offset (0 when not listed).
ShuntAnalysis shunt_times(const std::vector<DopRecord>& records, const std::vector<LiftRecord>& lifts,
                          const std::map<std::string, double>& offsets_m);

struct TerminalSplit
{
  std::string terminal;
  std::uint64_t services = 0;
  double servicing_min = 0.0;
  double lifting_min = 0.0;
  double waiting_min = 0.0;
  double lifting_fraction = 0.0;
  double waiting_fraction = 0.0;
  double utilisation = 0.0;  // servicing / horizon
};
struct TimeSplitAnalysis
{
  std::vector<TerminalSplit> by_terminal;
  std::uint64_t unmatched = 0;
  double horizon_min = 0.0;
};
TimeSplitAnalysis terminal_time_split(const std::vector<LiftRecord>& lifts,
                                      const std::vector<DopRecord>& records, double horizon_min);

struct SingleLineAnalysis
{
  std::uint64_t days = 0;
  double trips_per_day = 0.0;
  double weekday_trips_per_day = 0.0;
  double weekend_trips_per_day = 0.0;
  double utilisation = 0.0;
  int utilisation_pct = 0;
  int weekday_utilisation_pct = 0;
  int weekend_utilisation_pct = 0;
};
// One return trip per train arrival, averaged over the observed dates.
SingleLineAnalysis single_line(const std::vector<DopRecord>& records);

// Calendar days covered by the records' movements and arrivals, in minutes.
double observed_horizon_min(const std::vector<DopRecord>& records);

// Converts a simulator trace into DOP-style records: yard arrival and
// departure become arrive/depart, call-up/exit become terminal enter/exit.
// Minute 0 maps to `epoch`.
std::vector<DopRecord> trace_to_dop(const sim::EventTrace& trace, Timestamp epoch);

struct AnalyticsOptions
{
  int bin_min = 60;
  std::map<std::string, double> circuit_offsets_m{{"DPWorld", 300.0}, {"Patrick", 0.0}};
  std::optional<double> horizon_min;
};

nlohmann::json analyze_all(const std::vector<DopRecord>& records, const std::vector<LiftRecord>& lifts,
                           const AnalyticsOptions& options);

}  // namespace portrail::analytics
