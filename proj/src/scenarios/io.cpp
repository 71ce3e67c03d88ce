#include "portrail/scenarios/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "portrail/scenarios/presets.hpp"
#include "portrail/scenarios/resolve.hpp"

namespace portrail::scenarios
{
using nlohmann::json;
using stochastics::Distribution;
using stochastics::DistributionKind;

namespace
{
[[noreturn]] void fail(const std::string& where, const std::string& what)
{
  throw ConfigError(where + ": " + what);
}

// Tracks which keys of an object were consumed so leftovers can be
// reported as unknown.
class Obj
{
 public:
  Obj(const json& j, std::string where) : j_(j), where_(std::move(where))
  {
    if (!j.is_object()) fail(where_, "expected an object");
  }

  const json* get(const std::string& key)
  {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }
  std::string at(const std::string& key) const { return where_ + "." + key; }
  const std::string& where() const { return where_; }

  void finish() const
  {
    for (const auto& [k, v] : j_.items()) {
      if (!seen_.contains(k)) fail(where_, "unknown key \"" + k + "\"");
    }
  }

 private:
  const json& j_;
  std::string where_;
  std::set<std::string> seen_;
};

double num(const json& v, const std::string& where)
{
  if (!v.is_number()) fail(where, "expected a number");
  return v.get<double>();
}

std::int64_t integer(const json& v, const std::string& where)
{
  if (!v.is_number_integer()) fail(where, "expected an integer");
  return v.get<std::int64_t>();
}

bool boolean(const json& v, const std::string& where)
{
  if (!v.is_boolean()) fail(where, "expected true or false");
  return v.get<bool>();
}

std::string str(const json& v, const std::string& where)
{
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

template <typename E>
E enum_value(const json& v, const std::string& where, std::optional<E> (*parse)(std::string_view))
{
  const std::string s = str(v, where);
  auto e = parse(s);
  if (!e) fail(where, "unknown value \"" + s + "\"");
  return *e;
}

int int_in_range(const json& v, const std::string& where, std::int64_t lo, std::int64_t hi)
{
  const std::int64_t i = integer(v, where);
  if (i < lo || i > hi) {
    fail(where, "value " + std::to_string(i) + " outside " + std::to_string(lo) + ".." +
                    std::to_string(hi));
  }
  return static_cast<int>(i);
}

constexpr std::int64_t kIntMax = 1'000'000'000;

void read_rakes(const json& j, RakeConfig& r, const std::string& where)
{
  Obj o(j, where);
  if (auto* v = o.get("wagons")) r.wagons = int_in_range(*v, o.at("wagons"), 1, 32);
  if (auto* v = o.get("preset")) {
    const std::string p = str(*v, o.at("preset"));
    if (p == "900m") r.rake_900m = true;
    else if (p == "standard") r.rake_900m = false;
    else fail(o.at("preset"), "expected \"900m\" or \"standard\"");
  }
  if (auto* v = o.get("long_fraction")) r.long_fraction = num(*v, o.at("long_fraction"));
  o.finish();
}

void read_mix(const json& j, TrainMix& m, const std::string& where)
{
  Obj o(j, where);
  if (auto* v = o.get("dedicated")) m.dedicated = num(*v, o.at("dedicated"));
  if (auto* v = o.get("split")) m.split = num(*v, o.at("split"));
  if (auto* v = o.get("non_stevedore")) m.non_stevedore = num(*v, o.at("non_stevedore"));
  o.finish();
}

TimetableEntry read_entry(const json& j, const std::string& where)
{
  Obj o(j, where);
  TimetableEntry e;
  if (auto* v = o.get("time_min")) e.time_min = num(*v, o.at("time_min"));
  else fail(where, "missing time_min");
  if (auto* v = o.get("itinerary")) {
    if (!v->is_array()) fail(o.at("itinerary"), "expected an array of terminal names");
    for (const auto& t : *v) e.itinerary.push_back(str(t, o.at("itinerary")));
  } else {
    fail(where, "missing itinerary");
  }
  if (auto* v = o.get("category")) e.category = enum_value(*v, o.at("category"), &train_category_from_string);
  if (auto* v = o.get("wagons")) e.wagons = int_in_range(*v, o.at("wagons"), 1, 32);
  if (auto* v = o.get("departure_min")) e.departure_min = num(*v, o.at("departure_min"));
  o.finish();
  return e;
}

void read_arrivals(const json& j, ScenarioConfig& s, const std::string& where)
{
  Obj o(j, where);
  if (auto* v = o.get("mode")) s.arrival_mode = enum_value(*v, o.at("mode"), &arrival_mode_from_string);
  if (auto* v = o.get("timetable")) {
    if (!v->is_array()) fail(o.at("timetable"), "expected an array");
    s.timetable.clear();
    for (std::size_t i = 0; i < v->size(); ++i) {
      s.timetable.push_back(read_entry((*v)[i], o.at("timetable") + "[" + std::to_string(i) + "]"));
    }
  }
  o.finish();
}

void read_timings(const json& j, Timings& t, const std::string& where)
{
  Obj o(j, where);
  if (auto* v = o.get("corridor_travel_min")) t.corridor_travel_min = num(*v, o.at("corridor_travel_min"));
  if (auto* v = o.get("single_track_traverse_min")) t.single_track_traverse_min = num(*v, o.at("single_track_traverse_min"));
  if (auto* v = o.get("runaround_min")) t.runaround_min = num(*v, o.at("runaround_min"));
  if (auto* v = o.get("propel_min_per_100m")) t.propel_min_per_100m = num(*v, o.at("propel_min_per_100m"));
  if (auto* v = o.get("inspection_min_per_100m")) t.inspection_min_per_100m = num(*v, o.at("inspection_min_per_100m"));
  if (auto* v = o.get("locomotive_length_m")) t.locomotive_length_m = num(*v, o.at("locomotive_length_m"));
  o.finish();
}

void read_capacities(const json& j, Capacities& c, const std::string& where)
{
  Obj o(j, where);
  if (auto* v = o.get("single_track")) c.single_track = int_in_range(*v, o.at("single_track"), 1, 64);
  if (auto* v = o.get("cooks_river")) c.cooks_river = int_in_range(*v, o.at("cooks_river"), 1, 1000);
  if (auto* v = o.get("arrival_roads")) c.arrival_roads = int_in_range(*v, o.at("arrival_roads"), 1, 100);
  if (auto* v = o.get("departure_roads")) c.departure_roads = int_in_range(*v, o.at("departure_roads"), 1, 100);
  if (auto* v = o.get("road_length_m")) c.road_length_m = num(*v, o.at("road_length_m"));
  if (auto* v = o.get("staging_depth")) c.staging_depth = int_in_range(*v, o.at("staging_depth"), 1, 100);
  o.finish();
}

OperatingHours read_hours(const json& j, const std::string& where)
{
  Obj o(j, where);
  OperatingHours h;
  if (auto* v = o.get("open_min")) h.open_min = num(*v, o.at("open_min"));
  if (auto* v = o.get("close_min")) h.close_min = num(*v, o.at("close_min"));
  o.finish();
  return h;
}

void read_policies(const json& j, Policies& p, const std::string& where)
{
  Obj o(j, where);
  if (auto* v = o.get("callup")) p.callup = enum_value(*v, o.at("callup"), &callup_from_string);
  if (auto* v = o.get("dedicated_loco")) p.dedicated = enum_value(*v, o.at("dedicated_loco"), &loco_from_string);
  if (auto* v = o.get("split_loco")) p.split = enum_value(*v, o.at("split_loco"), &loco_from_string);
  if (auto* v = o.get("non_stevedore_loco")) p.non_stevedore = enum_value(*v, o.at("non_stevedore_loco"), &loco_from_string);
  o.finish();
}

void read_terminals(const json& j, std::map<std::string, TerminalOverride>& out, const std::string& where)
{
  if (!j.is_object()) fail(where, "expected an object keyed by terminal name");
  for (const auto& [name, body] : j.items()) {
    Obj o(body, where + "." + name);
    TerminalOverride& t = out[name];
    if (auto* v = o.get("siding_count")) t.siding_count = int_in_range(*v, o.at("siding_count"), 1, 100);
    if (auto* v = o.get("siding_length_m")) t.siding_length_m = num(*v, o.at("siding_length_m"));
    if (auto* v = o.get("requires_split_above_m")) t.requires_split_above_m = num(*v, o.at("requires_split_above_m"));
    if (auto* v = o.get("split_overhead_min")) t.split_overhead_min = num(*v, o.at("split_overhead_min"));
    if (auto* v = o.get("service_capacity")) t.service_capacity = int_in_range(*v, o.at("service_capacity"), 1, 100);
    if (auto* v = o.get("operating_hours")) t.operating_hours = read_hours(*v, o.at("operating_hours"));
    o.finish();
  }
}

std::map<std::string, Distribution> read_per_terminal(const json& j, const std::string& where)
{
  if (!j.is_object()) fail(where, "expected an object keyed by terminal name");
  std::map<std::string, Distribution> out;
  for (const auto& [name, body] : j.items()) out[name] = distribution_from_json(body, where + "." + name);
  return out;
}

void read_distributions(const json& j, DistributionOverrides& d, const std::string& where)
{
  Obj o(j, where);
  if (auto* v = o.get("lift_rate")) d.lift_rate = read_per_terminal(*v, o.at("lift_rate"));
  if (auto* v = o.get("shunt_in")) d.shunt_in = read_per_terminal(*v, o.at("shunt_in"));
  if (auto* v = o.get("shunt_out")) d.shunt_out = read_per_terminal(*v, o.at("shunt_out"));
  if (auto* v = o.get("rate_law")) {
    if (!v->is_object()) fail(o.at("rate_law"), "expected an object keyed by terminal name");
    d.rate_law.clear();
    for (const auto& [name, body] : v->items()) {
      Obj r(body, o.at("rate_law") + "." + name);
      stochastics::RateLaw law;
      if (auto* x = r.get("intercept")) law.intercept = num(*x, r.at("intercept"));
      if (auto* x = r.get("slope")) law.slope = num(*x, r.at("slope"));
      if (auto* x = r.get("min_rate")) law.min_rate = num(*x, r.at("min_rate"));
      r.finish();
      d.rate_law[name] = law;
    }
  }
  const auto single = [&](const char* key, std::optional<Distribution>& slot) {
    if (auto* v = o.get(key)) slot = distribution_from_json(*v, o.at(key));
  };
  single("container_variance", d.container_variance);
  single("placement_delay", d.placement_delay);
  single("headway", d.headway);
  single("interarrival", d.interarrival);
  single("locomotive_return", d.locomotive_return);
  o.finish();
}

CalibrationSet read_calibration(const json& j, const std::string& where)
{
  Obj o(j, where);
  CalibrationSet c;
  if (auto* v = o.get("terminals")) {
    if (!v->is_object()) fail(o.at("terminals"), "expected an object keyed by terminal name");
    for (const auto& [name, body] : v->items()) {
      Obj t(body, o.at("terminals") + "." + name);
      TerminalCalibration tc;
      if (auto* x = t.get("max_lift_rate")) tc.max_lift_rate = num(*x, t.at("max_lift_rate"));
      if (auto* x = t.get("shunt_in_min")) tc.shunt_in_min = num(*x, t.at("shunt_in_min"));
      if (auto* x = t.get("shunt_out_min")) tc.shunt_out_min = num(*x, t.at("shunt_out_min"));
      t.finish();
      c.terminals[name] = tc;
    }
  }
  if (auto* v = o.get("inspection_min_per_100m")) c.inspection_min_per_100m = num(*v, o.at("inspection_min_per_100m"));
  if (auto* v = o.get("derivation_note")) c.derivation_note = str(*v, o.at("derivation_note"));
  o.finish();
  return c;
}

json calibration_to_json(const CalibrationSet& c)
{
  json terminals = json::object();
  for (const auto& [name, t] : c.terminals) {
    terminals[name] = {{"max_lift_rate", t.max_lift_rate},
                       {"shunt_in_min", t.shunt_in_min},
                       {"shunt_out_min", t.shunt_out_min}};
  }
  return {{"terminals", terminals},
          {"inspection_min_per_100m", c.inspection_min_per_100m},
          {"derivation_note", c.derivation_note}};
}

json per_terminal_json(const std::map<std::string, Distribution>& m)
{
  json out = json::object();
  for (const auto& [name, d] : m) out[name] = distribution_to_json(d);
  return out;
}
}  // namespace

json distribution_to_json(const Distribution& d)
{
  json j;
  j["kind"] = std::string(to_string(d.kind()));
  const auto& p = d.params();
  switch (d.kind()) {
    case DistributionKind::constant: j["value"] = p[0]; break;
    case DistributionKind::uniform: j["min"] = p[0]; j["max"] = p[1]; break;
    case DistributionKind::triangular: j["min"] = p[0]; j["mode"] = p[1]; j["max"] = p[2]; break;
    case DistributionKind::normal: j["mean"] = p[0]; j["sd"] = p[1]; break;
    case DistributionKind::empirical: j["samples"] = d.points(); break;
  }
  j["support"] = {d.lower(), d.upper()};
  return j;
}

Distribution distribution_from_json(const json& j, const std::string& where)
{
  if (j.is_number()) return Distribution::constant(j.get<double>());
  Obj o(j, where);
  const json* kind_j = o.get("kind");
  if (kind_j == nullptr) fail(where, "missing kind");
  const std::string kind = str(*kind_j, o.at("kind"));
  const auto need = [&](const char* key) {
    const json* v = o.get(key);
    if (v == nullptr) fail(where, std::string("missing ") + key + " for kind " + kind);
    return num(*v, o.at(key));
  };
  std::optional<std::pair<double, double>> support;
  if (auto* v = o.get("support")) {
    if (!v->is_array() || v->size() != 2) fail(o.at("support"), "expected [min, max]");
    support = std::make_pair(num((*v)[0], o.at("support")), num((*v)[1], o.at("support")));
  }
  try {
    Distribution d;
    if (kind == "constant") {
      d = Distribution::constant(need("value"));
    } else if (kind == "uniform") {
      d = Distribution::uniform(need("min"), need("max"));
    } else if (kind == "triangular") {
      const double lo = need("min");
      const double mode = need("mode");
      d = Distribution::triangular(lo, mode, need("max"));
    } else if (kind == "normal") {
      const double mean = need("mean");
      const double sd = need("sd");
      if (!support) fail(where, "a truncated normal needs support [min, max]");
      d = Distribution::normal(mean, sd, support->first, support->second);
    } else if (kind == "empirical") {
      const json* v = o.get("samples");
      if (v == nullptr || !v->is_array()) fail(where, "empirical needs a samples array");
      std::vector<double> pts;
      for (const auto& x : *v) pts.push_back(num(x, o.at("samples")));
      d = Distribution::empirical(std::move(pts));
    } else {
      fail(o.at("kind"), "unknown distribution kind \"" + kind + "\"");
    }
    o.finish();
    if (support) d = d.with_support(support->first, support->second);
    return d;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

ScenarioConfig load_scenario(const json& doc)
{
  Obj o(doc, "scenario");
  ScenarioConfig s;
  if (auto* v = o.get("preset")) {
    s = preset(str(*v, o.at("preset")));
  } else {
    std::vector<std::string> missing;
    for (const char* key : {"variant", "lift_mode", "horizon_days", "seed"}) {
      if (!doc.contains(key)) missing.emplace_back(key);
    }
    if (!missing.empty()) {
      std::string list;
      for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
      throw ConfigError("scenario: missing required fields: " + list +
                        " (or name a base with \"preset\")");
    }
  }
  if (auto* v = o.get("name")) s.name = str(*v, o.at("name"));
  if (auto* v = o.get("variant")) s.variant = enum_value(*v, o.at("variant"), &variant_from_string);
  if (auto* v = o.get("lift_mode")) s.lift_mode = enum_value(*v, o.at("lift_mode"), &lift_mode_from_string);
  if (auto* v = o.get("peak")) s.peak = boolean(*v, o.at("peak"));
  if (auto* v = o.get("consistent_rates")) s.consistent_rates = boolean(*v, o.at("consistent_rates"));
  if (auto* v = o.get("lift_rate_scale")) s.lift_rate_scale = num(*v, o.at("lift_rate_scale"));
  if (auto* v = o.get("unchanged_rate_scale")) s.unchanged_rate_scale = num(*v, o.at("unchanged_rate_scale"));
  if (auto* v = o.get("rakes")) read_rakes(*v, s.rakes, o.at("rakes"));
  if (auto* v = o.get("train_mix")) read_mix(*v, s.mix, o.at("train_mix"));
  if (auto* v = o.get("arrivals")) read_arrivals(*v, s, o.at("arrivals"));
  if (auto* v = o.get("staging_policy")) s.staging = enum_value(*v, o.at("staging_policy"), &staging_from_string);
  if (auto* v = o.get("horizon_days")) s.horizon_days = int_in_range(*v, o.at("horizon_days"), 1, 36500);
  if (auto* v = o.get("warmup_days")) s.warmup_days = int_in_range(*v, o.at("warmup_days"), 0, 36500);
  if (auto* v = o.get("seed")) {
    if (!v->is_number_integer() || (v->is_number_integer() && !v->is_number_unsigned() && v->get<std::int64_t>() < 0)) {
      fail(o.at("seed"), "expected a non-negative integer");
    }
    s.seed = v->get<std::uint64_t>();
  }
  if (auto* v = o.get("loads")) {
    Obj l(*v, o.at("loads"));
    if (auto* x = l.get("load_factor")) s.load_factor = num(*x, l.at("load_factor"));
    l.finish();
  }
  if (auto* v = o.get("timings")) read_timings(*v, s.timings, o.at("timings"));
  if (auto* v = o.get("capacities")) read_capacities(*v, s.capacities, o.at("capacities"));
  if (auto* v = o.get("policies")) read_policies(*v, s.policies, o.at("policies"));
  if (auto* v = o.get("terminals")) read_terminals(*v, s.terminal_overrides, o.at("terminals"));
  if (auto* v = o.get("distributions")) read_distributions(*v, s.overrides, o.at("distributions"));
  if (auto* v = o.get("calibration")) s.calibration_override = read_calibration(*v, o.at("calibration"));
  o.get("effective");
  o.finish();
  return resolve(std::move(s));
}

ScenarioConfig load_scenario_text(std::string_view text)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("scenario is not valid JSON: ") + e.what());
  }
  return load_scenario(doc);
}

ScenarioConfig load_scenario_file(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in) throw IoError("cannot read scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scenario_text(buf.str());
}

ScenarioConfig load_scenario_ref(const std::string& name_or_path)
{
  if (is_preset(name_or_path)) return resolve(preset(name_or_path));
  if (std::filesystem::exists(name_or_path)) return load_scenario_file(name_or_path);
  throw ConfigError("\"" + name_or_path + "\" is neither a preset nor a readable scenario file");
}

json echo(const ScenarioConfig& s)
{
  json j;
  j["name"] = s.name;
  j["variant"] = std::string(to_string(s.variant));
  j["lift_mode"] = std::string(to_string(s.lift_mode));
  j["peak"] = s.peak;
  j["consistent_rates"] = s.consistent_rates;
  j["lift_rate_scale"] = s.lift_rate_scale;
  j["unchanged_rate_scale"] = s.unchanged_rate_scale;
  j["rakes"] = {{"wagons", s.rakes.wagons},
                {"preset", s.rakes.rake_900m ? "900m" : "standard"},
                {"long_fraction", s.rakes.long_fraction}};
  j["train_mix"] = {{"dedicated", s.mix.dedicated},
                    {"split", s.mix.split},
                    {"non_stevedore", s.mix.non_stevedore}};
  json arrivals = {{"mode", std::string(to_string(s.arrival_mode))}};
  if (!s.timetable.empty()) {
    json tt = json::array();
    for (const auto& e : s.timetable) {
      json r = {{"time_min", e.time_min}, {"itinerary", e.itinerary}};
      if (e.category) r["category"] = std::string(to_string(*e.category));
      if (e.wagons) r["wagons"] = *e.wagons;
      if (e.departure_min) r["departure_min"] = *e.departure_min;
      tt.push_back(r);
    }
    arrivals["timetable"] = tt;
  }
  j["arrivals"] = arrivals;
  j["staging_policy"] = std::string(to_string(s.staging));
  j["horizon_days"] = s.horizon_days;
  j["warmup_days"] = s.warmup_days;
  j["seed"] = s.seed;
  j["loads"] = {{"load_factor", s.load_factor}};

  json timings = {{"corridor_travel_min", s.timings.corridor_travel_min},
                  {"single_track_traverse_min", s.timings.single_track_traverse_min},
                  {"runaround_min", s.timings.runaround_min},
                  {"propel_min_per_100m", s.timings.propel_min_per_100m},
                  {"locomotive_length_m", s.timings.locomotive_length_m}};
  if (s.timings.inspection_min_per_100m) {
    timings["inspection_min_per_100m"] = *s.timings.inspection_min_per_100m;
  }
  j["timings"] = timings;

  json caps = {{"cooks_river", s.capacities.cooks_river},
               {"arrival_roads", s.capacities.arrival_roads},
               {"departure_roads", s.capacities.departure_roads},
               {"road_length_m", s.capacities.road_length_m},
               {"staging_depth", s.capacities.staging_depth}};
  if (s.capacities.single_track) caps["single_track"] = *s.capacities.single_track;
  j["capacities"] = caps;

  j["policies"] = {{"callup", std::string(to_string(s.policies.callup))},
                   {"dedicated_loco", std::string(to_string(s.policies.dedicated))},
                   {"split_loco", std::string(to_string(s.policies.split))},
                   {"non_stevedore_loco", std::string(to_string(s.policies.non_stevedore))}};

  json terms = json::object();
  for (const auto& [name, t] : s.terminal_overrides) {
    json r = json::object();
    if (t.siding_count) r["siding_count"] = *t.siding_count;
    if (t.siding_length_m) r["siding_length_m"] = *t.siding_length_m;
    if (t.requires_split_above_m) r["requires_split_above_m"] = *t.requires_split_above_m;
    if (t.split_overhead_min) r["split_overhead_min"] = *t.split_overhead_min;
    if (t.service_capacity) r["service_capacity"] = *t.service_capacity;
    if (t.operating_hours) {
      r["operating_hours"] = {{"open_min", t.operating_hours->open_min},
                              {"close_min", t.operating_hours->close_min}};
    }
    terms[name] = r;
  }
  j["terminals"] = terms;

  const auto& ov = s.overrides;
  json dists = json::object();
  if (!ov.lift_rate.empty()) dists["lift_rate"] = per_terminal_json(ov.lift_rate);
  if (!ov.shunt_in.empty()) dists["shunt_in"] = per_terminal_json(ov.shunt_in);
  if (!ov.shunt_out.empty()) dists["shunt_out"] = per_terminal_json(ov.shunt_out);
  if (!ov.rate_law.empty()) {
    json laws = json::object();
    for (const auto& [name, law] : ov.rate_law) {
      laws[name] = {{"intercept", law.intercept}, {"slope", law.slope}, {"min_rate", law.min_rate}};
    }
    dists["rate_law"] = laws;
  }
  const auto single = [&](const char* key, const std::optional<Distribution>& d) {
    if (d) dists[key] = distribution_to_json(*d);
  };
  single("container_variance", ov.container_variance);
  single("placement_delay", ov.placement_delay);
  single("headway", ov.headway);
  single("interarrival", ov.interarrival);
  single("locomotive_return", ov.locomotive_return);
  j["distributions"] = dists;

  if (s.calibration_override) j["calibration"] = calibration_to_json(*s.calibration_override);

  json eff_terms = json::object();
  for (const auto& [name, td] : s.distributions.terminals) {
    json r = {{"lift_rate", distribution_to_json(td.lift_rate)},
              {"shunt_in", distribution_to_json(td.shunt_in)},
              {"shunt_out", distribution_to_json(td.shunt_out)}};
    if (td.rate_law) {
      r["rate_law"] = {{"intercept", td.rate_law->intercept},
                       {"slope", td.rate_law->slope},
                       {"min_rate", td.rate_law->min_rate}};
    }
    eff_terms[name] = r;
  }
  const auto& reg = s.distributions;
  j["effective"] = {{"calibration", calibration_to_json(s.calibration)},
                    {"terminals", eff_terms},
                    {"container_variance", distribution_to_json(reg.container_variance)},
                    {"placement_delay", distribution_to_json(reg.placement_delay)},
                    {"headway", distribution_to_json(reg.headway)},
                    {"interarrival", distribution_to_json(reg.interarrival)},
                    {"locomotive_return", distribution_to_json(reg.locomotive_return)}};
  return j;
}

}  // namespace portrail::scenarios
