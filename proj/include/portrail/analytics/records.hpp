#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace portrail::analytics
{
using Timestamp = std::chrono::sys_seconds;

// ISO-8601 local-free timestamps: YYYY-MM-DDTHH:MM[:SS][Z] (a space may
// replace the T). Returns nullopt for anything else, including impossible
// calendar dates.
std::optional<Timestamp> parse_timestamp(std::string_view text);
std::string format_timestamp(Timestamp t);

enum class MovementKind
{
  arrive,
  depart,
  enter_terminal,
  exit_terminal,
};
std::string_view to_string(MovementKind k) noexcept;
std::optional<MovementKind> movement_from_string(std::string_view s) noexcept;

struct Movement
{
  Timestamp time;
  MovementKind kind = MovementKind::arrive;
  std::string location;
};

struct DopRecord
{
  std::string train_id;
  std::optional<Timestamp> planned_arrival;
  std::optional<Timestamp> actual_arrival;
  std::optional<Timestamp> planned_departure;
  std::optional<Timestamp> actual_departure;
  std::string origin;
  std::string return_point;
  std::optional<double> length_m;
  std::vector<Movement> movements;  // time-ordered
};

struct LiftRecord
{
  std::string service_id;
  std::string terminal;
  int scheduled_lifts = 0;
  int actual_lifts = 0;
  int n20ft = 0;
  int n40ft = 0;
  Timestamp first_lift;
  Timestamp last_lift;
  double import_teu = 0.0;
  double export_teu = 0.0;
};

struct ParseIssue
{
  std::string file;
  std::size_t line = 0;
  std::string message;
};

// Row-level problems raise DataError("file:line: message") unless lenient,
// in which case the row (or the bad optional field) is skipped and an issue
// is recorded. A missing or wrong header is always an error; an empty file
// yields no rows and one issue.
struct ParseContext
{
  bool lenient = false;
  std::vector<ParseIssue> issues;
  std::uint64_t skipped_rows = 0;
  std::uint64_t bad_timestamps = 0;
};

std::vector<DopRecord> read_dop_csv(std::istream& in, const std::string& file, ParseContext& ctx);
// Appends movements to the matching DOP records (sorted by time afterwards);
// movements for unknown trains are reported as issues.
void read_movements_csv(std::istream& in, const std::string& file, std::vector<DopRecord>& dop,
                        ParseContext& ctx);
std::vector<LiftRecord> read_lift_csv(std::istream& in, const std::string& file, ParseContext& ctx);

// Splits one CSV line; double quotes group fields and "" is a literal quote.
std::vector<std::string> split_csv_line(std::string_view line);

inline constexpr const char* kDopHeader =
    "train_id,planned_arrival,actual_arrival,planned_departure,actual_departure,origin,return_point";
inline constexpr const char* kMovementHeader = "train_id,timestamp,movement,location";
inline constexpr const char* kLiftHeader =
    "service_id,terminal,scheduled_lifts,actual_lifts,n20ft,n40ft,first_lift,last_lift,import_teu,"
    "export_teu";

}  // namespace portrail::analytics
