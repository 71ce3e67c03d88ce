#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace portrail::testing
{
// Minutes since 1970-01-01T00:00 for "YYYY-MM-DD[T ]HH:MM[:SS][Z]", nullopt
// for impossible dates. Seconds are kept as a fraction of a minute.
std::optional<double> oracle_minutes(const std::string& text);

// Brute-force recomputation of the operational analyses straight from the
// CSV text, with its own parsing and calendar arithmetic.
struct AnalyticsOracle
{
  std::map<int, std::uint64_t> histogram;
  std::map<int, std::uint64_t> slot_histogram;
  std::uint64_t movement_events = 0;
  std::uint64_t skipped_records = 0;
  std::array<std::uint64_t, 7> weekday_total{};
  std::array<std::uint64_t, 7> weekday_days{};
  std::uint64_t arrival_missing = 0;
  std::uint64_t departure_missing = 0;
  std::vector<std::uint64_t> arrival_bins;
  std::vector<std::uint64_t> departure_bins;
  double trips_per_day = 0.0;
  std::map<std::string, double> mean_corrected_in;
  std::map<std::string, double> mean_corrected_out;
  std::map<std::string, double> servicing_min;
  std::map<std::string, double> lifting_min;
  std::uint64_t unmatched_lifts = 0;
  double horizon_min = 0.0;
};

AnalyticsOracle compute_oracle(const std::string& dop_path, const std::string& movements_path,
                               const std::string& lifts_path, int bin_min,
                               const std::map<std::string, double>& offsets_m);

}  // namespace portrail::testing
