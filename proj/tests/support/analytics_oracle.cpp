#include "analytics_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace portrail::testing
{
namespace
{
std::vector<std::vector<std::string>> rows_of(const std::string& path)
{
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

bool leap(long y)
{
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

// Day count by summing whole years and months from 1970.
long day_number(long y, int m, int d)
{
  long n = 0;
  for (long yy = 1970; yy < y; ++yy) n += leap(yy) ? 366 : 365;
  static const int kLen[12]{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  for (int mm = 1; mm < m; ++mm) n += kLen[mm - 1] + (mm == 2 && leap(y) ? 1 : 0);
  return n + d - 1;
}

int monday_index(long day)
{
  return static_cast<int>((day + 3) % 7);  // 1970-01-01 was a Thursday
}

struct Move
{
  double t;
  std::string kind;
  std::string where;
};
}  // namespace

std::optional<double> oracle_minutes(const std::string& text)
{
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  char sep = 0;
  const int n = std::sscanf(text.c_str(), "%4d-%2d-%2d%c%2d:%2d:%2d", &y, &mo, &d, &sep, &h, &mi, &s);
  if (n < 6 || (sep != 'T' && sep != ' ')) return std::nullopt;
  static const int kLen[12]{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (mo < 1 || mo > 12 || d < 1 || d > kLen[mo - 1] + (mo == 2 && leap(y) ? 1 : 0)) return std::nullopt;
  if (h > 23 || mi > 59 || s > 59) return std::nullopt;
  return day_number(y, mo, d) * 1440.0 + h * 60.0 + mi + s / 60.0;
}

AnalyticsOracle compute_oracle(const std::string& dop_path, const std::string& movements_path,
                               const std::string& lifts_path, int bin_min,
                               const std::map<std::string, double>& offsets_m)
{
  AnalyticsOracle o;
  const auto dop = rows_of(dop_path);
  const auto moves = rows_of(movements_path);
  const auto lifts = rows_of(lifts_path);

  std::map<std::string, std::vector<Move>> by_train;
  std::map<std::string, int> slots;
  for (const auto& r : dop) {
    by_train[r[0]];
    const double len = r.size() > 7 && !r[7].empty() ? std::stod(r[7]) : 650.0;
    slots[r[0]] = std::max(1, static_cast<int>(std::ceil(len / 650.0)));
  }
  for (const auto& m : moves) by_train[m[0]].push_back(Move{*oracle_minutes(m[1]), m[2], m[3]});

  // Residency intervals and visit windows.
  struct Window
  {
    std::string terminal;
    double enter, exit;
  };
  std::vector<Window> windows;
  std::vector<std::pair<std::string, std::pair<double, double>>> spans;
  double lo_day = 1e18, hi_day = -1e18;
  const auto see = [&](double t) {
    lo_day = std::min(lo_day, std::floor(t / 1440.0));
    hi_day = std::max(hi_day, std::floor(t / 1440.0));
  };
  for (auto& [train, mv] : by_train) {
    std::stable_sort(mv.begin(), mv.end(), [](const Move& a, const Move& b) { return a.t < b.t; });
    for (const auto& m : mv) see(m.t);
    if (mv.empty()) {
      ++o.skipped_records;
      continue;
    }
    std::map<std::string, double> open;
    bool balanced = true;
    std::vector<Window> mine;
    for (const auto& m : mv) {
      if (m.kind == "enter_terminal") {
        if (open.contains(m.where)) balanced = false;
        open[m.where] = m.t;
      } else if (m.kind == "exit_terminal") {
        if (!open.contains(m.where)) {
          balanced = false;
        } else {
          mine.push_back(Window{m.where, open[m.where], m.t});
          open.erase(m.where);
        }
      }
    }
    if (!balanced || !open.empty()) {
      ++o.skipped_records;
      continue;
    }
    windows.insert(windows.end(), mine.begin(), mine.end());
    double from = mv.front().t, to = mv.back().t;
    for (const auto& m : mv) {
      if (m.kind == "arrive") {
        from = m.t;
        break;
      }
    }
    for (auto it = mv.rbegin(); it != mv.rend(); ++it) {
      if (it->kind == "depart") {
        to = it->t;
        break;
      }
    }
    spans.push_back({train, {from, to}});
  }
  for (const auto& [train, span] : spans) {
    for (const auto& m : by_train[train]) {
      int count = 0, used = 0;
      for (const auto& [other, s] : spans) {
        if (s.first <= m.t && m.t <= s.second) {
          ++count;
          used += slots[other];
        }
      }
      ++o.histogram[count];
      ++o.slot_histogram[used];
      ++o.movement_events;
    }
  }

  // Calendar profiles from the actual arrival/departure columns.
  o.arrival_bins.assign(1440 / bin_min, 0);
  o.departure_bins.assign(1440 / bin_min, 0);
  std::map<long, std::uint64_t> per_day;
  for (const auto& r : dop) {
    const auto arr = r[2].empty() ? std::nullopt : oracle_minutes(r[2]);
    const auto dep = r[4].empty() ? std::nullopt : oracle_minutes(r[4]);
    if (arr) {
      see(*arr);
      const long day = static_cast<long>(std::floor(*arr / 1440.0));
      ++per_day[day];
      ++o.arrival_bins[static_cast<std::size_t>((*arr - day * 1440.0) / bin_min)];
    } else {
      ++o.arrival_missing;
    }
    if (dep) {
      see(*dep);
      const long day = static_cast<long>(std::floor(*dep / 1440.0));
      ++o.departure_bins[static_cast<std::size_t>((*dep - day * 1440.0) / bin_min)];
    } else {
      ++o.departure_missing;
    }
  }
  std::uint64_t total = 0;
  if (!per_day.empty()) {
    for (long d = per_day.begin()->first; d <= per_day.rbegin()->first; ++d) {
      const std::uint64_t n = per_day.contains(d) ? per_day[d] : 0;
      o.weekday_total[monday_index(d)] += n;
      ++o.weekday_days[monday_index(d)];
      total += n;
    }
    o.trips_per_day = static_cast<double>(total) /
                      static_cast<double>(per_day.rbegin()->first - per_day.begin()->first + 1);
  }
  o.horizon_min = lo_day > hi_day ? 0.0 : (hi_day - lo_day + 1.0) * 1440.0;

  // Lift windows matched by terminal and containment, first match wins.
  std::map<std::string, std::pair<double, double>> sums;
  std::map<std::string, int> counts;
  for (const auto& l : lifts) {
    const double first = *oracle_minutes(l[6]);
    const double last = *oracle_minutes(l[7]);
    const Window* w = nullptr;
    for (const auto& cand : windows) {
      if (cand.terminal == l[1] && cand.enter <= first && last <= cand.exit) {
        w = &cand;
        break;
      }
    }
    if (w == nullptr) {
      ++o.unmatched_lifts;
      continue;
    }
    const double offset = offsets_m.contains(l[1]) ? offsets_m.at(l[1]) : 0.0;
    sums[l[1]].first += std::max(0.0, (first - w->enter) - offset / 100.0);
    sums[l[1]].second += std::max(0.0, (w->exit - last) - offset / 100.0);
    ++counts[l[1]];
    o.servicing_min[l[1]] += w->exit - w->enter;
    o.lifting_min[l[1]] += std::stoi(l[3]) == 0 ? 0.0 : last - first;
  }
  for (const auto& [t, s] : sums) {
    o.mean_corrected_in[t] = s.first / counts[t];
    o.mean_corrected_out[t] = s.second / counts[t];
  }
  return o;
}

}  // namespace portrail::testing
