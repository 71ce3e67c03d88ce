#include "portrail/analytics/records.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <map>

#include "portrail/core/types.hpp"

namespace portrail::analytics
{
namespace
{
bool digits(std::string_view s, std::size_t pos, std::size_t n, int& out)
{
  if (pos + n > s.size()) return false;
  const char* b = s.data() + pos;
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i] < '0' || b[i] > '9') return false;
  }
  std::from_chars(b, b + n, out);
  return true;
}

std::string trim(std::string_view s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Reads the header line; false on an empty stream.
bool read_header(std::istream& in, const std::string& file, const char* expected,
                 std::size_t required_columns, std::vector<std::string>& columns, ParseContext& ctx)
{
  std::string line;
  if (!std::getline(in, line) || trim(line).empty()) {
    ctx.issues.push_back(ParseIssue{file, 0, "empty file"});
    return false;
  }
  columns.clear();
  for (const auto& c : split_csv_line(line)) columns.push_back(trim(c));
  const auto want = split_csv_line(expected);
  bool ok = columns.size() >= required_columns;
  for (std::size_t i = 0; ok && i < required_columns; ++i) ok = columns[i] == want[i];
  if (!ok) {
    throw DataError(file + ":1: header must start with \"" + std::string(expected) + "\"");
  }
  return true;
}

class RowError : public std::runtime_error
{
 public:
  using std::runtime_error::runtime_error;
};

void report(ParseContext& ctx, const std::string& file, std::size_t line, const std::string& msg)
{
  if (!ctx.lenient) throw DataError(file + ":" + std::to_string(line) + ": " + msg);
  ctx.issues.push_back(ParseIssue{file, line, msg});
}

Timestamp required_time(const std::string& v, const char* field)
{
  auto t = parse_timestamp(v);
  if (!t) throw RowError(std::string("bad timestamp in ") + field + ": \"" + v + "\"");
  return *t;
}

int non_negative_int(const std::string& v, const char* field)
{
  int out = 0;
  const auto* end = v.data() + v.size();
  auto [p, ec] = std::from_chars(v.data(), end, out);
  if (v.empty() || ec != std::errc() || p != end || out < 0) {
    throw RowError(std::string(field) + " must be a non-negative integer, got \"" + v + "\"");
  }
  return out;
}

double non_negative_number(const std::string& v, const char* field)
{
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size() || !(d >= 0.0)) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw RowError(std::string(field) + " must be a non-negative number, got \"" + v + "\"");
  }
}

// Iterates data rows, handing each split row to `fn`; RowError becomes a
// strict-mode DataError or a lenient skip.
template <typename Fn>
void for_each_row(std::istream& in, const std::string& file, std::size_t columns, ParseContext& ctx,
                  Fn&& fn)
{
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells;
    for (const auto& c : split_csv_line(line)) cells.push_back(trim(c));
    try {
      if (cells.size() != columns) {
        throw RowError("expected " + std::to_string(columns) + " fields, found " +
                       std::to_string(cells.size()));
      }
      fn(cells, line_no);
    } catch (const RowError& e) {
      report(ctx, file, line_no, e.what());
      ++ctx.skipped_rows;
    }
  }
}
}  // namespace

std::optional<Timestamp> parse_timestamp(std::string_view s)
{
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, sec = 0;
  if (!s.empty() && s.back() == 'Z') s.remove_suffix(1);
  if (s.size() != 16 && s.size() != 19) return std::nullopt;
  if (!digits(s, 0, 4, y) || s[4] != '-' || !digits(s, 5, 2, mo) || s[7] != '-' ||
      !digits(s, 8, 2, d) || (s[10] != 'T' && s[10] != ' ') || !digits(s, 11, 2, h) ||
      s[13] != ':' || !digits(s, 14, 2, mi)) {
    return std::nullopt;
  }
  if (s.size() == 19 && (s[16] != ':' || !digits(s, 17, 2, sec))) return std::nullopt;
  if (h > 23 || mi > 59 || sec > 59) return std::nullopt;
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(mo)},
                                        std::chrono::day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  return std::chrono::sys_days{ymd} + std::chrono::hours{h} + std::chrono::minutes{mi} +
         std::chrono::seconds{sec};
}

std::string format_timestamp(Timestamp t)
{
  const auto day = std::chrono::floor<std::chrono::days>(t);
  const std::chrono::year_month_day ymd{day};
  const std::chrono::hh_mm_ss hms{t - day};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

std::string_view to_string(MovementKind k) noexcept
{
  switch (k) {
    case MovementKind::arrive: return "arrive";
    case MovementKind::depart: return "depart";
    case MovementKind::enter_terminal: return "enter_terminal";
    case MovementKind::exit_terminal: return "exit_terminal";
  }
  return "unknown";
}

std::optional<MovementKind> movement_from_string(std::string_view s) noexcept
{
  for (auto k : {MovementKind::arrive, MovementKind::depart, MovementKind::enter_terminal,
                 MovementKind::exit_terminal}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::vector<std::string> split_csv_line(std::string_view line)
{
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r' && c != '\n') {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

std::vector<DopRecord> read_dop_csv(std::istream& in, const std::string& file, ParseContext& ctx)
{
  std::vector<DopRecord> out;
  std::vector<std::string> columns;
  if (!read_header(in, file, kDopHeader, 7, columns, ctx)) return out;
  const bool has_length = columns.size() >= 8 && columns[7] == "length_m";
  if (columns.size() > 8 || (columns.size() == 8 && !has_length)) {
    throw DataError(file + ":1: unexpected columns after return_point (only length_m is allowed)");
  }
  for_each_row(in, file, columns.size(), ctx, [&](const std::vector<std::string>& c, std::size_t line) {
    DopRecord r;
    r.train_id = c[0];
    if (r.train_id.empty()) throw RowError("empty train_id");
    const auto optional_time = [&](const std::string& v, const char* field) -> std::optional<Timestamp> {
      if (v.empty()) return std::nullopt;
      auto t = parse_timestamp(v);
      if (!t) {
        ++ctx.bad_timestamps;
        report(ctx, file, line, std::string("bad timestamp in ") + field + ": \"" + v + "\"");
      }
      return t;
    };
    r.planned_arrival = optional_time(c[1], "planned_arrival");
    r.actual_arrival = optional_time(c[2], "actual_arrival");
    r.planned_departure = optional_time(c[3], "planned_departure");
    r.actual_departure = optional_time(c[4], "actual_departure");
    r.origin = c[5];
    r.return_point = c[6];
    if (has_length && !c[7].empty()) {
      r.length_m = non_negative_number(c[7], "length_m");
      if (!(*r.length_m > 0.0)) throw RowError("length_m must be positive");
    }
    out.push_back(std::move(r));
  });
  return out;
}

void read_movements_csv(std::istream& in, const std::string& file, std::vector<DopRecord>& dop,
                        ParseContext& ctx)
{
  std::vector<std::string> columns;
  if (!read_header(in, file, kMovementHeader, 4, columns, ctx)) return;
  if (columns.size() != 4) throw DataError(file + ":1: expected exactly 4 columns");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < dop.size(); ++i) index.emplace(dop[i].train_id, i);
  for_each_row(in, file, 4, ctx, [&](const std::vector<std::string>& c, std::size_t) {
    auto it = index.find(c[0]);
    if (it == index.end()) throw RowError("movement for unknown train \"" + c[0] + "\"");
    const Timestamp t = required_time(c[1], "timestamp");
    auto kind = movement_from_string(c[2]);
    if (!kind) throw RowError("unknown movement \"" + c[2] + "\"");
    dop[it->second].movements.push_back(Movement{t, *kind, c[3]});
  });
  for (auto& r : dop) {
    std::stable_sort(r.movements.begin(), r.movements.end(),
                     [](const Movement& a, const Movement& b) { return a.time < b.time; });
  }
}

std::vector<LiftRecord> read_lift_csv(std::istream& in, const std::string& file, ParseContext& ctx)
{
  std::vector<LiftRecord> out;
  std::vector<std::string> columns;
  if (!read_header(in, file, kLiftHeader, 10, columns, ctx)) return out;
  if (columns.size() != 10) throw DataError(file + ":1: expected exactly 10 columns");
  for_each_row(in, file, 10, ctx, [&](const std::vector<std::string>& c, std::size_t) {
    LiftRecord r;
    r.service_id = c[0];
    r.terminal = c[1];
    if (r.terminal.empty()) throw RowError("empty terminal");
    r.scheduled_lifts = non_negative_int(c[2], "scheduled_lifts");
    r.actual_lifts = non_negative_int(c[3], "actual_lifts");
    r.n20ft = non_negative_int(c[4], "n20ft");
    r.n40ft = non_negative_int(c[5], "n40ft");
    r.first_lift = required_time(c[6], "first_lift");
    r.last_lift = required_time(c[7], "last_lift");
    if (r.last_lift < r.first_lift) throw RowError("last_lift precedes first_lift");
    r.import_teu = non_negative_number(c[8], "import_teu");
    r.export_teu = non_negative_number(c[9], "export_teu");
    out.push_back(std::move(r));
  });
  return out;
}

}  // namespace portrail::analytics
