#include "portrail/analytics/analyses.hpp"

#include <algorithm>
#include <cmath>

#include "portrail/core/types.hpp"
#include "portrail/metrics/kpi.hpp"

namespace portrail::analytics
{
using nlohmann::json;
using std::chrono::days;
using std::chrono::floor;
using std::chrono::sys_days;

namespace
{
double minutes_between(Timestamp a, Timestamp b)
{
  return std::chrono::duration<double, std::ratio<60>>(b - a).count();
}

// Monday = 0 ... Sunday = 6.
int weekday_index(sys_days d)
{
  return static_cast<int>((std::chrono::weekday{d}.c_encoding() + 6) % 7);
}

int slots_of(const DopRecord& r)
{
  const double len = r.length_m.value_or(kStandardTrainLengthM);
  return std::max(1, static_cast<int>(std::ceil(len / kStandardTrainLengthM)));
}

struct VisitWindow
{
  const DopRecord* record;
  std::string terminal;
  Timestamp enter;
  Timestamp exit;
};

std::vector<VisitWindow> visit_windows(const std::vector<DopRecord>& records)
{
  std::vector<VisitWindow> out;
  for (const auto& r : records) {
    if (!balanced_terminal_visits(r)) continue;
    std::map<std::string, Timestamp> open;
    for (const auto& m : r.movements) {
      if (m.kind == MovementKind::enter_terminal) {
        open[m.location] = m.time;
      } else if (m.kind == MovementKind::exit_terminal) {
        out.push_back(VisitWindow{&r, m.location, open.at(m.location), m.time});
        open.erase(m.location);
      }
    }
  }
  return out;
}

const VisitWindow* match(const std::vector<VisitWindow>& windows, const LiftRecord& lift)
{
  for (const auto& w : windows) {
    if (w.terminal == lift.terminal && w.enter <= lift.first_lift && lift.last_lift <= w.exit) {
      return &w;
    }
  }
  return nullptr;
}

double share(const std::map<int, std::uint64_t>& h, std::uint64_t total, int k)
{
  if (total == 0) return 0.0;
  std::uint64_t n = 0;
  for (const auto& [v, c] : h) {
    if (v <= k) n += c;
  }
  return static_cast<double>(n) / static_cast<double>(total);
}

// Arrival counts for every date from the first to the last arrival date.
std::map<sys_days, std::uint64_t> arrivals_per_date(const std::vector<DopRecord>& records,
                                                    std::uint64_t& missing)
{
  std::map<sys_days, std::uint64_t> per_date;
  missing = 0;
  for (const auto& r : records) {
    if (!r.actual_arrival) {
      ++missing;
      continue;
    }
    ++per_date[floor<days>(*r.actual_arrival)];
  }
  if (!per_date.empty()) {
    const sys_days first = per_date.begin()->first;
    const sys_days last = per_date.rbegin()->first;
    for (sys_days d = first; d <= last; d += days{1}) per_date.try_emplace(d, 0);
  }
  return per_date;
}

TimeOfDayHistogram histogram_of(const std::vector<DopRecord>& records, int bin_min,
                                const std::optional<Timestamp> DopRecord::*field)
{
  if (bin_min <= 0 || 1440 % bin_min != 0) {
    throw ConfigError("histogram bin must be a positive divisor of 1440 minutes");
  }
  TimeOfDayHistogram h;
  h.bin_min = bin_min;
  h.counts.assign(static_cast<std::size_t>(1440 / bin_min), 0);
  for (const auto& r : records) {
    const auto& t = r.*field;
    if (!t) {
      ++h.missing;
      continue;
    }
    const auto minute = std::chrono::duration_cast<std::chrono::minutes>(*t - floor<days>(*t)).count();
    ++h.counts[static_cast<std::size_t>(minute / bin_min)];
    ++h.counted;
  }
  h.coverage = records.empty() ? 1.0 : static_cast<double>(h.counted) / static_cast<double>(records.size());
  return h;
}
}  // namespace

bool balanced_terminal_visits(const DopRecord& record)
{
  std::map<std::string, bool> open;
  for (const auto& m : record.movements) {
    if (m.kind == MovementKind::enter_terminal) {
      if (open[m.location]) return false;
      open[m.location] = true;
    } else if (m.kind == MovementKind::exit_terminal) {
      if (!open[m.location]) return false;
      open[m.location] = false;
    }
  }
  return std::none_of(open.begin(), open.end(), [](const auto& p) { return p.second; });
}

std::optional<Residency> residency(const DopRecord& record)
{
  if (record.movements.empty() || !balanced_terminal_visits(record)) return std::nullopt;
  Residency r{record.movements.front().time, record.movements.back().time};
  for (const auto& m : record.movements) {
    if (m.kind == MovementKind::arrive) {
      r.from = m.time;
      break;
    }
  }
  for (auto it = record.movements.rbegin(); it != record.movements.rend(); ++it) {
    if (it->kind == MovementKind::depart) {
      r.to = it->time;
      break;
    }
  }
  if (r.to < r.from) return std::nullopt;
  return r;
}

double SimultaneityResult::share_at_most(int k) const
{
  return share(histogram, movement_events, k);
}

double SimultaneityResult::slot_share_at_most(int k) const
{
  return share(slot_histogram, movement_events, k);
}

int SimultaneityResult::peak() const
{
  return histogram.empty() ? 0 : histogram.rbegin()->first;
}

SimultaneityResult simultaneous_trains(const std::vector<DopRecord>& records)
{
  SimultaneityResult out;
  struct Resident
  {
    const DopRecord* record;
    Residency span;
    int slots;
  };
  std::vector<Resident> residents;
  for (const auto& r : records) {
    auto span = residency(r);
    if (!span) {
      ++out.skipped_records;
      continue;
    }
    residents.push_back(Resident{&r, *span, slots_of(r)});
  }
  out.accepted_records = residents.size();
  for (const auto& sampler : residents) {
    for (const auto& m : sampler.record->movements) {
      int count = 0;
      int slots = 0;
      for (const auto& other : residents) {
        if (other.span.from <= m.time && m.time <= other.span.to) {
          ++count;
          slots += other.slots;
        }
      }
      ++out.histogram[count];
      ++out.slot_histogram[slots];
      ++out.movement_events;
    }
  }
  return out;
}

WeekdayProfile arrivals_by_weekday(const std::vector<DopRecord>& records)
{
  WeekdayProfile p;
  const auto per_date = arrivals_per_date(records, p.missing);
  for (const auto& [date, n] : per_date) {
    WeekdayStats& s = p.by_weekday[static_cast<std::size_t>(weekday_index(date))];
    s.min = s.days == 0 ? n : std::min(s.min, n);
    s.max = std::max(s.max, n);
    s.total += n;
    ++s.days;
    p.counted += n;
  }
  for (auto& s : p.by_weekday) {
    s.mean = s.days == 0 ? 0.0 : static_cast<double>(s.total) / static_cast<double>(s.days);
  }
  return p;
}

TimeOfDayHistogram arrival_histogram(const std::vector<DopRecord>& records, int bin_min)
{
  return histogram_of(records, bin_min, &DopRecord::actual_arrival);
}

TimeOfDayHistogram departure_histogram(const std::vector<DopRecord>& records, int bin_min)
{
  return histogram_of(records, bin_min, &DopRecord::actual_departure);
}

CorrectedShunt shunt_correction(double raw_min, double circuit_offset_m, double min_per_100m)
{
  const double corrected = raw_min - circuit_offset_m / 100.0 * min_per_100m;
  if (corrected < 0.0) return CorrectedShunt{0.0, true};
  return CorrectedShunt{corrected, false};
}

ShuntAnalysis shunt_times(const std::vector<DopRecord>& records, const std::vector<LiftRecord>& lifts,
                          const std::map<std::string, double>& offsets_m)
{
  ShuntAnalysis out;
  const auto windows = visit_windows(records);
  std::map<std::string, ShuntSummary> sums;
  for (const auto& lift : lifts) {
    const VisitWindow* w = match(windows, lift);
    if (w == nullptr) {
      ++out.unmatched_lifts;
      continue;
    }
    const auto off = offsets_m.find(lift.terminal);
    const double offset = off == offsets_m.end() ? 0.0 : off->second;
    ShuntObservation o;
    o.train_id = w->record->train_id;
    o.terminal = lift.terminal;
    o.raw_in_min = minutes_between(w->enter, lift.first_lift);
    o.raw_out_min = minutes_between(lift.last_lift, w->exit);
    o.corrected_in = shunt_correction(o.raw_in_min, offset);
    o.corrected_out = shunt_correction(o.raw_out_min, offset);
    ShuntSummary& s = sums[lift.terminal];
    s.terminal = lift.terminal;
    s.offset_m = offset;
    ++s.services;
    s.mean_raw_in += o.raw_in_min;
    s.mean_raw_out += o.raw_out_min;
    s.mean_corrected_in += o.corrected_in.minutes;
    s.mean_corrected_out += o.corrected_out.minutes;
    s.clamped += (o.corrected_in.clamped ? 1 : 0) + (o.corrected_out.clamped ? 1 : 0);
    out.observations.push_back(std::move(o));
  }
  for (auto& [name, s] : sums) {
    const auto n = static_cast<double>(s.services);
    s.mean_raw_in /= n;
    s.mean_raw_out /= n;
    s.mean_corrected_in /= n;
    s.mean_corrected_out /= n;
    out.by_terminal.push_back(s);
  }
  return out;
}

TimeSplitAnalysis terminal_time_split(const std::vector<LiftRecord>& lifts,
                                      const std::vector<DopRecord>& records, double horizon_min)
{
  TimeSplitAnalysis out;
  out.horizon_min = horizon_min;
  const auto windows = visit_windows(records);
  std::map<std::string, TerminalSplit> sums;
  for (const auto& lift : lifts) {
    const VisitWindow* w = match(windows, lift);
    if (w == nullptr) {
      ++out.unmatched;
      continue;
    }
    TerminalSplit& s = sums[lift.terminal];
    s.terminal = lift.terminal;
    ++s.services;
    const double servicing = minutes_between(w->enter, w->exit);
    const double lifting = lift.actual_lifts == 0 ? 0.0 : minutes_between(lift.first_lift, lift.last_lift);
    s.servicing_min += servicing;
    s.lifting_min += lifting;
    s.waiting_min += servicing - lifting;
  }
  for (auto& [name, s] : sums) {
    if (s.servicing_min > 0.0) {
      s.lifting_fraction = s.lifting_min / s.servicing_min;
      s.waiting_fraction = s.waiting_min / s.servicing_min;
    }
    s.utilisation = horizon_min > 0.0 ? s.servicing_min / horizon_min : 0.0;
    out.by_terminal.push_back(s);
  }
  return out;
}

SingleLineAnalysis single_line(const std::vector<DopRecord>& records)
{
  SingleLineAnalysis out;
  std::uint64_t missing = 0;
  const auto per_date = arrivals_per_date(records, missing);
  std::uint64_t total = 0, wd_total = 0, we_total = 0, wd_days = 0, we_days = 0;
  for (const auto& [date, n] : per_date) {
    total += n;
    if (weekday_index(date) >= 5) {
      we_total += n;
      ++we_days;
    } else {
      wd_total += n;
      ++wd_days;
    }
  }
  out.days = per_date.size();
  const auto mean = [](std::uint64_t n, std::uint64_t d) {
    return d == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(d);
  };
  out.trips_per_day = mean(total, out.days);
  out.weekday_trips_per_day = mean(wd_total, wd_days);
  out.weekend_trips_per_day = mean(we_total, we_days);
  out.utilisation = metrics::single_line_utilisation(out.trips_per_day);
  out.utilisation_pct = metrics::single_line_utilisation_pct(out.trips_per_day);
  out.weekday_utilisation_pct = metrics::single_line_utilisation_pct(out.weekday_trips_per_day);
  out.weekend_utilisation_pct = metrics::single_line_utilisation_pct(out.weekend_trips_per_day);
  return out;
}

double observed_horizon_min(const std::vector<DopRecord>& records)
{
  std::optional<sys_days> lo, hi;
  const auto see = [&](Timestamp t) {
    const sys_days d = floor<days>(t);
    if (!lo || d < *lo) lo = d;
    if (!hi || d > *hi) hi = d;
  };
  for (const auto& r : records) {
    if (r.actual_arrival) see(*r.actual_arrival);
    if (r.actual_departure) see(*r.actual_departure);
    for (const auto& m : r.movements) see(m.time);
  }
  if (!lo) return 0.0;
  return static_cast<double>((*hi - *lo).count() + 1) * kMinutesPerDay;
}

std::vector<DopRecord> trace_to_dop(const sim::EventTrace& trace, Timestamp epoch)
{
  const auto at = [&](double minute) {
    return epoch + std::chrono::seconds{std::llround(minute * 60.0)};
  };
  const auto location_name = [&](LocationId id) -> std::string {
    if (id < 0 || static_cast<std::size_t>(id) >= trace.meta.locations.size()) return {};
    return trace.meta.locations[id].name;
  };
  std::vector<DopRecord> out(trace.trains.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].train_id = "T" + std::to_string(trace.trains[i].id);
    out[i].length_m = trace.trains[i].length_m;
    out[i].origin = "Enfield";
    out[i].return_point = "Enfield";
  }
  for (const auto& e : trace.events) {
    if (e.train < 0 || static_cast<std::size_t>(e.train) >= out.size()) continue;
    DopRecord& r = out[e.train];
    switch (e.kind) {
      case sim::EventKind::arrival:
        r.planned_arrival = at(e.time);
        break;
      case sim::EventKind::yard_arrival:
        r.actual_arrival = at(e.time);
        r.movements.push_back(Movement{at(e.time), MovementKind::arrive, "BotanyYard"});
        break;
      case sim::EventKind::call_up:
        if (!r.actual_arrival) r.actual_arrival = at(e.time);
        r.movements.push_back(Movement{at(e.time), MovementKind::enter_terminal, location_name(e.location)});
        break;
      case sim::EventKind::exit_complete:
        r.movements.push_back(Movement{at(e.time), MovementKind::exit_terminal, location_name(e.location)});
        break;
      case sim::EventKind::departure:
        r.actual_departure = at(e.time);
        r.movements.push_back(Movement{at(e.time), MovementKind::depart, "BotanyYard"});
        break;
      default:
        break;
    }
  }
  return out;
}

json analyze_all(const std::vector<DopRecord>& records, const std::vector<LiftRecord>& lifts,
                 const AnalyticsOptions& options)
{
  json j;
  j["records"] = {{"dop", records.size()}, {"lifts", lifts.size()}};

  const auto sim = simultaneous_trains(records);
  json hist = json::object();
  for (const auto& [k, v] : sim.histogram) hist[std::to_string(k)] = v;
  json slots = json::object();
  for (const auto& [k, v] : sim.slot_histogram) slots[std::to_string(k)] = v;
  j["congestion"] = {{"movement_events", sim.movement_events},
                     {"accepted_records", sim.accepted_records},
                     {"skipped_records", sim.skipped_records},
                     {"peak_simultaneous", sim.peak()},
                     {"histogram", hist},
                     {"slot_histogram", slots},
                     {"share_at_most_6_slots", sim.slot_share_at_most(6)}};

  static constexpr std::array<const char*, 7> kNames{"Monday", "Tuesday", "Wednesday", "Thursday",
                                                     "Friday", "Saturday", "Sunday"};
  const auto wd = arrivals_by_weekday(records);
  json days = json::object();
  for (std::size_t i = 0; i < 7; ++i) {
    const auto& s = wd.by_weekday[i];
    days[kNames[i]] = {{"total", s.total}, {"days", s.days}, {"min", s.min}, {"mean", s.mean}, {"max", s.max}};
  }
  j["arrivals_by_weekday"] = {{"counted", wd.counted}, {"missing", wd.missing}, {"weekdays", days}};

  const auto hist_json = [](const TimeOfDayHistogram& h) {
    return json{{"bin_min", h.bin_min}, {"counts", h.counts}, {"counted", h.counted},
                {"missing", h.missing}, {"coverage", h.coverage}};
  };
  j["arrival_histogram"] = hist_json(arrival_histogram(records, options.bin_min));
  j["departure_histogram"] = hist_json(departure_histogram(records, options.bin_min));

  const double horizon = options.horizon_min.value_or(observed_horizon_min(records));
  const auto split = terminal_time_split(lifts, records, horizon);
  json terms = json::array();
  for (const auto& s : split.by_terminal) {
    terms.push_back({{"terminal", s.terminal}, {"services", s.services}, {"servicing_min", s.servicing_min},
                     {"lifting_min", s.lifting_min}, {"waiting_min", s.waiting_min},
                     {"lifting_fraction", s.lifting_fraction}, {"waiting_fraction", s.waiting_fraction},
                     {"utilisation", s.utilisation}});
  }
  j["terminal_time_split"] = {{"horizon_min", horizon}, {"unmatched", split.unmatched}, {"terminals", terms}};

  const auto shunts = shunt_times(records, lifts, options.circuit_offsets_m);
  json sh = json::array();
  for (const auto& s : shunts.by_terminal) {
    sh.push_back({{"terminal", s.terminal}, {"offset_m", s.offset_m}, {"services", s.services},
                  {"mean_raw_in", s.mean_raw_in}, {"mean_raw_out", s.mean_raw_out},
                  {"mean_corrected_in", s.mean_corrected_in}, {"mean_corrected_out", s.mean_corrected_out},
                  {"clamped", s.clamped}});
  }
  j["shunt_correction"] = {{"unmatched_lifts", shunts.unmatched_lifts}, {"terminals", sh}};

  const auto line = single_line(records);
  j["single_line"] = {{"days", line.days},
                      {"trips_per_day", line.trips_per_day},
                      {"weekday_trips_per_day", line.weekday_trips_per_day},
                      {"weekend_trips_per_day", line.weekend_trips_per_day},
                      {"utilisation", line.utilisation},
                      {"utilisation_pct", line.utilisation_pct},
                      {"weekday_utilisation_pct", line.weekday_utilisation_pct},
                      {"weekend_utilisation_pct", line.weekend_utilisation_pct}};
  return j;
}

}  // namespace portrail::analytics
