#include "portrail/metrics/kpi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

namespace portrail::metrics
{
using nlohmann::json;
using sim::EventKind;

namespace
{
struct Window
{
  double start = 0.0;
  double end = 0.0;
  double days = 0.0;
  bool contains(double t) const noexcept { return t >= start && t <= end; }
};

Window window_of(const sim::EventTrace& trace)
{
  const int w = effective_warmup_days(trace);
  Window win;
  win.start = w * kMinutesPerDay;
  win.end = trace.horizon_minutes();
  win.days = trace.meta.horizon_days - w;
  return win;
}

double train_teu(const sim::TrainRecord& t)
{
  return t.actual_import_teu + t.actual_export_teu;
}
}  // namespace

int effective_warmup_days(const sim::EventTrace& trace) noexcept
{
  const int w = trace.meta.warmup_days;
  return trace.meta.horizon_days <= 2 * w ? 0 : w;
}

std::vector<VisitTimes> visits(const sim::EventTrace& trace)
{
  std::vector<VisitTimes> out;
  std::map<TrainId, std::size_t> open;
  for (const auto& e : trace.events) {
    switch (e.kind) {
      case EventKind::call_up: {
        VisitTimes v;
        v.train = e.train;
        v.terminal = e.location;
        v.call_up = e.time;
        open[e.train] = out.size();
        out.push_back(v);
        break;
      }
      case EventKind::lift_start:
      case EventKind::lift_complete:
      case EventKind::exit_complete: {
        auto it = open.find(e.train);
        if (it == open.end()) break;
        VisitTimes& v = out[it->second];
        if (e.kind == EventKind::lift_start) v.lift_start = e.time;
        else if (e.kind == EventKind::lift_complete) v.lift_complete = e.time;
        else {
          v.exit_complete = e.time;
          open.erase(it);
        }
        break;
      }
      default:
        break;
    }
  }
  return out;
}

std::vector<double> service_completion_times(const sim::EventTrace& trace)
{
  std::vector<double> done(trace.trains.size(), -1.0);
  std::vector<std::size_t> count(trace.trains.size(), 0);
  for (const auto& e : trace.events) {
    if (e.kind != EventKind::exit_complete) continue;
    const auto i = static_cast<std::size_t>(e.train);
    if (i >= trace.trains.size()) continue;
    if (++count[i] == trace.trains[i].itinerary.size()) done[i] = e.time;
  }
  return done;
}

double annual_teu(const sim::EventTrace& trace)
{
  const Window win = window_of(trace);
  if (trace.events.empty() || win.days <= 0.0) return 0.0;
  const auto done = service_completion_times(trace);
  double teu = 0.0;
  for (std::size_t i = 0; i < done.size(); ++i) {
    if (done[i] >= 0.0 && win.contains(done[i])) teu += train_teu(trace.trains[i]);
  }
  return teu / win.days * kDaysPerYear;
}

double trains_per_day(const sim::EventTrace& trace)
{
  const Window win = window_of(trace);
  if (trace.events.empty() || win.days <= 0.0) return 0.0;
  const auto done = service_completion_times(trace);
  const auto n = std::count_if(done.begin(), done.end(),
                               [&](double t) { return t >= 0.0 && win.contains(t); });
  return static_cast<double>(n) / win.days;
}

double annual_teu_from_rate(double per_day, double teu_per_train) noexcept
{
  return per_day * teu_per_train * kDaysPerYear;
}

TimeSplit time_split(const sim::EventTrace& trace)
{
  const Window win = window_of(trace);
  TimeSplit s;
  for (const auto& v : visits(trace)) {
    if (v.exit_complete < 0.0 || !win.contains(v.exit_complete)) continue;
    s.servicing_min += v.exit_complete - v.call_up;
    s.lifting_min += v.lift_complete - v.lift_start;
  }
  if (s.servicing_min > 0.0) {
    s.pct_lifting = 100.0 * s.lifting_min / s.servicing_min;
    s.pct_shunting = 100.0 - s.pct_lifting;
  }
  return s;
}

double single_line_utilisation(double trips_per_day) noexcept
{
  return trips_per_day / kSingleLineTripCap;
}

int single_line_utilisation_pct(double trips_per_day) noexcept
{
  return static_cast<int>(std::lround(100.0 * single_line_utilisation(trips_per_day)));
}

KpiReport compute_report(const sim::EventTrace& trace)
{
  KpiReport r;
  r.scenario = trace.meta.scenario_name;
  r.seed = trace.meta.seed;
  r.horizon_days = trace.meta.horizon_days;
  r.warmup_days = effective_warmup_days(trace);
  r.resampled_durations = trace.meta.resampled_durations;
  r.annual_teu = annual_teu(trace);
  r.trains_per_day = trains_per_day(trace);
  const TimeSplit split = time_split(trace);
  r.pct_lifting = split.pct_lifting;
  r.pct_shunting = split.pct_shunting;

  const Window win = window_of(trace);
  const double horizon = trace.horizon_minutes();
  const auto done = service_completion_times(trace);
  for (double t : done) {
    if (t >= 0.0 && win.contains(t)) ++r.trains_serviced;
  }

  // Single line: inbound traversals per whole day of the window.
  const auto first_day = static_cast<std::size_t>(r.warmup_days);
  std::vector<double> per_day(static_cast<std::size_t>(std::max(trace.meta.horizon_days, 0)), 0.0);
  std::vector<double> arrival(trace.trains.size(), -1.0);
  std::vector<double> exit_time(trace.trains.size(), -1.0);
  for (const auto& e : trace.events) {
    if (e.kind == EventKind::track_in_start) {
      const auto day = static_cast<std::size_t>(e.time / kMinutesPerDay);
      if (day < per_day.size()) per_day[day] += 1.0;
    } else if (e.kind == EventKind::arrival) {
      ++r.entries;
      if (static_cast<std::size_t>(e.train) < arrival.size()) arrival[e.train] = e.time;
    } else if (e.kind == EventKind::exit) {
      ++r.exits;
      if (static_cast<std::size_t>(e.train) < exit_time.size()) exit_time[e.train] = e.time;
    }
  }
  r.residents = r.entries - r.exits;
  if (per_day.size() > first_day) {
    double sum = 0.0;
    for (std::size_t d = first_day; d < per_day.size(); ++d) {
      sum += per_day[d];
      r.single_line_trips_peak = std::max(r.single_line_trips_peak, per_day[d]);
    }
    r.single_line_trips_per_day = sum / static_cast<double>(per_day.size() - first_day);
  }
  r.single_line_utilisation = single_line_utilisation(r.single_line_trips_per_day);
  r.single_line_utilisation_pct = single_line_utilisation_pct(r.single_line_trips_per_day);

  // Terminals.
  const auto& locs = trace.meta.locations;
  std::map<LocationId, TerminalStats> term;
  for (std::size_t i = 0; i < locs.size(); ++i) {
    if (locs[i].kind != sim::LocationKind::terminal) continue;
    TerminalStats ts;
    ts.terminal = locs[i].name;
    ts.capacity = std::max(locs[i].capacity_units, 1);
    term.emplace(static_cast<LocationId>(i), ts);
  }
  std::map<LocationId, double> service_sum;
  for (const auto& v : visits(trace)) {
    auto it = term.find(v.terminal);
    if (it == term.end()) continue;
    TerminalStats& ts = it->second;
    const double end = v.exit_complete >= 0.0 ? v.exit_complete : horizon;
    ts.busy_min += std::max(0.0, std::min(end, horizon) - v.call_up);
    if (v.exit_complete < 0.0) continue;
    const double dur = v.exit_complete - v.call_up;
    ts.min_service_min = ts.services == 0 ? dur : std::min(ts.min_service_min, dur);
    ts.max_service_min = std::max(ts.max_service_min, dur);
    service_sum[v.terminal] += dur;
    ++ts.services;
    ts.lifting_min += v.lift_complete - v.lift_start;
  }
  // TEU handled per terminal over completed visits.
  {
    std::vector<std::size_t> visit_no(trace.trains.size(), 0);
    for (const auto& e : trace.events) {
      if (e.kind != EventKind::exit_complete) continue;
      const auto i = static_cast<std::size_t>(e.train);
      if (i >= trace.trains.size()) continue;
      const auto& it = trace.trains[i].itinerary;
      const std::size_t k = visit_no[i]++;
      if (k < it.size()) {
        auto t = term.find(it[k].terminal);
        if (t != term.end()) t->second.teu += it[k].import_teu + it[k].export_teu;
      }
    }
  }
  for (auto& [id, ts] : term) {
    ts.utilisation = horizon > 0.0 ? ts.busy_min / (horizon * ts.capacity) : 0.0;
    ts.mean_service_min = ts.services == 0 ? 0.0 : service_sum[id] / static_cast<double>(ts.services);
    r.terminals.push_back(ts);
  }

  // Queues: occupancy from resource rows, waits from request/grant pairs.
  struct Acc
  {
    double last_t = 0.0;
    int occ = 0;
    double area = 0.0;
    int max_occ = 0;
    std::uint64_t grants = 0;
    double wait_sum = 0.0;
    double wait_max = 0.0;
    std::map<TrainId, double> requested;
  };
  std::map<LocationId, Acc> acc;
  for (const auto& e : trace.events) {
    if (e.kind != EventKind::resource_request && e.kind != EventKind::resource_grant &&
        e.kind != EventKind::resource_release) {
      continue;
    }
    Acc& a = acc[e.location];
    if (e.kind == EventKind::resource_request) {
      a.requested[e.train] = e.time;
      continue;
    }
    a.area += a.occ * (e.time - a.last_t);
    a.last_t = e.time;
    a.occ = e.occupancy;
    a.max_occ = std::max(a.max_occ, a.occ);
    if (e.kind == EventKind::resource_grant) {
      ++a.grants;
      auto it = a.requested.find(e.train);
      if (it != a.requested.end()) {
        const double w = e.time - it->second;
        a.wait_sum += w;
        a.wait_max = std::max(a.wait_max, w);
        a.requested.erase(it);
      }
    }
  }
  for (auto& [id, a] : acc) {
    if (id < 0 || static_cast<std::size_t>(id) >= locs.size()) continue;
    a.area += a.occ * (horizon - a.last_t);
    QueueStats q;
    q.resource = locs[id].name;
    q.capacity_units = locs[id].capacity_units;
    q.mean_occupancy = horizon > 0.0 ? a.area / horizon : 0.0;
    q.max_occupancy = a.max_occ;
    q.grants = a.grants;
    q.mean_wait_min = a.grants == 0 ? 0.0 : a.wait_sum / static_cast<double>(a.grants);
    q.max_wait_min = a.wait_max;
    r.queues.push_back(q);
  }

  for (const auto& t : trace.trains) {
    TrainSummary s;
    s.id = t.id;
    s.category = std::string(to_string(t.category));
    s.wagons = t.wagon_count;
    s.length_m = t.length_m;
    s.planned_import_teu = t.planned_import_teu;
    s.actual_import_teu = t.actual_import_teu;
    s.planned_export_teu = t.planned_export_teu;
    s.actual_export_teu = t.actual_export_teu;
    const auto i = static_cast<std::size_t>(t.id);
    if (i < arrival.size()) {
      s.arrival_min = arrival[i];
      s.serviced_min = done[i];
      s.exit_min = exit_time[i];
    }
    r.per_train.push_back(s);
  }
  return r;
}

json report_to_json(const KpiReport& r, bool include_trains)
{
  json j;
  j["scenario"] = r.scenario;
  j["seed"] = r.seed;
  j["horizon_days"] = r.horizon_days;
  j["warmup_days"] = r.warmup_days;
  j["annual_teu"] = r.annual_teu;
  j["trains_per_day"] = r.trains_per_day;
  j["trains_serviced"] = r.trains_serviced;
  j["pct_lifting"] = r.pct_lifting;
  j["pct_shunting"] = r.pct_shunting;
  j["single_line"] = {{"trips_per_day", r.single_line_trips_per_day},
                      {"trips_peak", r.single_line_trips_peak},
                      {"utilisation", r.single_line_utilisation},
                      {"utilisation_pct", r.single_line_utilisation_pct}};
  j["conservation"] = {{"entries", r.entries}, {"exits", r.exits}, {"residents", r.residents}};
  j["resampled_durations"] = r.resampled_durations;
  json terms = json::array();
  for (const auto& t : r.terminals) {
    terms.push_back({{"terminal", t.terminal},
                     {"capacity", t.capacity},
                     {"busy_min", t.busy_min},
                     {"utilisation", t.utilisation},
                     {"services", t.services},
                     {"min_service_min", t.min_service_min},
                     {"mean_service_min", t.mean_service_min},
                     {"max_service_min", t.max_service_min},
                     {"lifting_min", t.lifting_min},
                     {"teu", t.teu}});
  }
  j["terminals"] = terms;
  json queues = json::array();
  for (const auto& q : r.queues) {
    queues.push_back({{"resource", q.resource},
                      {"capacity_units", q.capacity_units},
                      {"mean_occupancy", q.mean_occupancy},
                      {"max_occupancy", q.max_occupancy},
                      {"grants", q.grants},
                      {"mean_wait_min", q.mean_wait_min},
                      {"max_wait_min", q.max_wait_min}});
  }
  j["queues"] = queues;
  if (include_trains) {
    json trains = json::array();
    for (const auto& t : r.per_train) {
      trains.push_back({{"id", t.id},
                        {"category", t.category},
                        {"wagons", t.wagons},
                        {"length_m", t.length_m},
                        {"planned_import_teu", t.planned_import_teu},
                        {"actual_import_teu", t.actual_import_teu},
                        {"planned_export_teu", t.planned_export_teu},
                        {"actual_export_teu", t.actual_export_teu},
                        {"arrival_min", t.arrival_min},
                        {"serviced_min", t.serviced_min},
                        {"exit_min", t.exit_min}});
    }
    j["per_train"] = trains;
  }
  return j;
}

KpiReport report_from_json(const json& j)
{
  try {
    KpiReport r;
    r.scenario = j.at("scenario").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.horizon_days = j.at("horizon_days").get<int>();
    r.warmup_days = j.at("warmup_days").get<int>();
    r.annual_teu = j.at("annual_teu").get<double>();
    r.trains_per_day = j.at("trains_per_day").get<double>();
    r.trains_serviced = j.at("trains_serviced").get<std::uint64_t>();
    r.pct_lifting = j.at("pct_lifting").get<double>();
    r.pct_shunting = j.at("pct_shunting").get<double>();
    const auto& sl = j.at("single_line");
    r.single_line_trips_per_day = sl.at("trips_per_day").get<double>();
    r.single_line_trips_peak = sl.at("trips_peak").get<double>();
    r.single_line_utilisation = sl.at("utilisation").get<double>();
    r.single_line_utilisation_pct = sl.at("utilisation_pct").get<int>();
    const auto& c = j.at("conservation");
    r.entries = c.at("entries").get<std::uint64_t>();
    r.exits = c.at("exits").get<std::uint64_t>();
    r.residents = c.at("residents").get<std::uint64_t>();
    r.resampled_durations = j.at("resampled_durations").get<std::uint64_t>();
    for (const auto& t : j.at("terminals")) {
      TerminalStats ts;
      ts.terminal = t.at("terminal").get<std::string>();
      ts.capacity = t.at("capacity").get<int>();
      ts.busy_min = t.at("busy_min").get<double>();
      ts.utilisation = t.at("utilisation").get<double>();
      ts.services = t.at("services").get<std::uint64_t>();
      ts.min_service_min = t.at("min_service_min").get<double>();
      ts.mean_service_min = t.at("mean_service_min").get<double>();
      ts.max_service_min = t.at("max_service_min").get<double>();
      ts.lifting_min = t.at("lifting_min").get<double>();
      ts.teu = t.at("teu").get<double>();
      r.terminals.push_back(ts);
    }
    for (const auto& q : j.at("queues")) {
      QueueStats qs;
      qs.resource = q.at("resource").get<std::string>();
      qs.capacity_units = q.at("capacity_units").get<int>();
      qs.mean_occupancy = q.at("mean_occupancy").get<double>();
      qs.max_occupancy = q.at("max_occupancy").get<int>();
      qs.grants = q.at("grants").get<std::uint64_t>();
      qs.mean_wait_min = q.at("mean_wait_min").get<double>();
      qs.max_wait_min = q.at("max_wait_min").get<double>();
      r.queues.push_back(qs);
    }
    if (j.contains("per_train")) {
      for (const auto& t : j.at("per_train")) {
        TrainSummary s;
        s.id = t.at("id").get<TrainId>();
        s.category = t.at("category").get<std::string>();
        s.wagons = t.at("wagons").get<int>();
        s.length_m = t.at("length_m").get<double>();
        s.planned_import_teu = t.at("planned_import_teu").get<double>();
        s.actual_import_teu = t.at("actual_import_teu").get<double>();
        s.planned_export_teu = t.at("planned_export_teu").get<double>();
        s.actual_export_teu = t.at("actual_export_teu").get<double>();
        s.arrival_min = t.at("arrival_min").get<double>();
        s.serviced_min = t.at("serviced_min").get<double>();
        s.exit_min = t.at("exit_min").get<double>();
        r.per_train.push_back(s);
      }
    }
    return r;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed report: ") + e.what());
  }
}

std::string trace_to_csv(const sim::EventTrace& trace)
{
  std::string out = "time_min,train_id,event,location\n";
  out.reserve(trace.events.size() * 48);
  char buf[64];
  for (const auto& e : trace.events) {
    std::snprintf(buf, sizeof buf, "%.6f,%d,", e.time, static_cast<int>(e.train));
    out += buf;
    out += sim::to_string(e.kind);
    out += ',';
    if (e.location >= 0 && static_cast<std::size_t>(e.location) < trace.meta.locations.size()) {
      out += trace.meta.locations[e.location].name;
    }
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& content)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace portrail::metrics
