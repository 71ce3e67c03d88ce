#include "portrail/ops/generator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace portrail::ops
{
TrainFactory::TrainFactory(const scenarios::ScenarioConfig& scenario,
                           const corridor::CorridorNetwork& network,
                           stochastics::StreamSet& streams)
    : scenario_(scenario), network_(network), streams_(streams)
{
  for (const auto& t : network.terminals) {
    (t.kind == TerminalKind::stevedore ? stevedores_ : parks_).push_back(t.name);
  }
}

TrainCategory TrainFactory::draw_category()
{
  const auto& mix = scenario_.mix;
  const double total = mix.dedicated + mix.split + mix.non_stevedore;
  const double u = streams_.stream("category").uniform01() * total;
  if (u < mix.dedicated) return TrainCategory::dedicated;
  if (u < mix.dedicated + mix.split) return TrainCategory::split;
  return TrainCategory::non_stevedore;
}

std::vector<std::string> TrainFactory::draw_itinerary(TrainCategory category,
                                                      const std::optional<std::string>& first)
{
  auto& rng = streams_.stream("itinerary");
  const auto pick = [&rng](const std::vector<std::string>& from) {
    return from[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(from.size()) - 1))];
  };
  switch (category) {
    case TrainCategory::dedicated:
      return {first ? *first : pick(stevedores_)};
    case TrainCategory::split: {
      if (stevedores_.size() < 2) throw ConfigError("split trains need two stevedore terminals");
      const std::string a = first ? *first : pick(stevedores_);
      std::vector<std::string> others;
      for (const auto& s : stevedores_) {
        if (s != a) others.push_back(s);
      }
      return {a, pick(others)};
    }
    case TrainCategory::non_stevedore:
      if (parks_.empty()) throw ConfigError("no empty-container park in this network");
      return {first ? *first : pick(parks_)};
  }
  return {};
}

double TrainFactory::actual_teu(double planned, double capacity)
{
  const double dev = scenario_.distributions.container_variance.sample(
      streams_.stream("container_variance"));
  return std::clamp(std::round(planned * (1.0 + dev)), 0.0, capacity);
}

Train TrainFactory::make(TrainId id, const PlannedArrival& plan)
{
  Train train;
  train.id = id;
  train.category = plan.category;
  train.planned_arrival = plan.time;
  train.scheduled_departure = plan.departure;

  if (plan.wagons) {
    train.rake = standard_rake(*plan.wagons, scenario_.timings.locomotive_length_m);
  } else if (scenario_.rakes.rake_900m) {
    train.rake = long_rake();
  } else if (scenario_.rakes.long_fraction > 0.0 &&
             streams_.stream("rake").uniform01() < scenario_.rakes.long_fraction) {
    train.rake = long_rake();
  } else {
    train.rake = standard_rake(scenario_.rakes.wagons, scenario_.timings.locomotive_length_m);
  }

  const double cap = train.rake.teu_capacity;
  train.planned_import_teu = std::min(cap, std::round(cap * scenario_.load_factor));
  train.planned_export_teu = train.planned_import_teu;
  train.actual_import_teu = actual_teu(train.planned_import_teu, cap);
  train.actual_export_teu = actual_teu(train.planned_export_teu, cap);

  switch (plan.category) {
    case TrainCategory::dedicated: train.loco = scenario_.policies.dedicated; break;
    case TrainCategory::split: train.loco = scenario_.policies.split; break;
    case TrainCategory::non_stevedore: train.loco = scenario_.policies.non_stevedore; break;
  }

  const double n = static_cast<double>(plan.itinerary.size());
  for (const auto& name : plan.itinerary) {
    const corridor::TerminalSpec* spec = network_.find_terminal(name);
    if (spec == nullptr) throw ConfigError("itinerary names unknown terminal " + name);
    if (train.rake.length_m > spec->siding_count * spec->siding_length_m) {
      std::ostringstream msg;
      msg << "a " << train.rake.length_m << " m train does not fit the sidings of " << name;
      throw ConfigError(msg.str());
    }
    train.itinerary.push_back(Visit{name, train.actual_import_teu / n, train.actual_export_teu / n});
  }
  return train;
}

TrainCategory infer_category(const std::vector<std::string>& itinerary,
                             const corridor::CorridorNetwork& network)
{
  int stevedores = 0;
  for (const auto& t : itinerary) {
    const auto* spec = network.find_terminal(t);
    if (spec != nullptr && spec->kind == TerminalKind::stevedore) ++stevedores;
  }
  if (stevedores == 0) return TrainCategory::non_stevedore;
  return stevedores == 1 ? TrainCategory::dedicated : TrainCategory::split;
}

void validate_timetable(const std::vector<scenarios::TimetableEntry>& timetable,
                        const corridor::CorridorNetwork& network)
{
  const auto stevedores = network.stevedore_names();
  for (std::size_t i = 0; i < timetable.size(); ++i) {
    const auto& e = timetable[i];
    const auto fail = [i](const std::string& what) {
      throw ConfigError("timetable entry " + std::to_string(i) + ": " + what);
    };
    if (!std::isfinite(e.time_min) || e.time_min < 0.0) fail("arrival time must be >= 0");
    if (e.itinerary.empty()) fail("empty itinerary");
    bool outside = false;
    for (const auto& t : e.itinerary) {
      const auto* spec = network.find_terminal(t);
      if (spec == nullptr) fail("unknown terminal " + t);
      if (!spec->inside_port) outside = true;
    }
    if (outside && e.itinerary.size() != 1) {
      fail("a terminal outside the port must be the only visit");
    }
    const TrainCategory inferred = infer_category(e.itinerary, network);
    if (e.category && *e.category != inferred) {
      fail("category " + std::string(to_string(*e.category)) + " does not match the itinerary");
    }
    try {
      validate_itinerary(inferred, e.itinerary, stevedores);
    } catch (const ConfigError& err) {
      fail(err.what());
    }
    if (e.wagons && (*e.wagons < 1 || *e.wagons > kMaxStandardWagons)) {
      fail("wagons must be within 1..32");
    }
    if (e.departure_min && !(*e.departure_min >= e.time_min)) {
      fail("departure precedes arrival");
    }
  }
}

std::vector<PlannedArrival> generate_trains(const scenarios::ScenarioConfig& scenario,
                                            const corridor::CorridorNetwork& network,
                                            TrainFactory& factory,
                                            stochastics::StreamSet& streams, double horizon_min)
{
  std::vector<PlannedArrival> out;
  switch (scenario.arrival_mode) {
    case scenarios::ArrivalMode::dynamic:
      break;
    case scenarios::ArrivalMode::schedule: {
      validate_timetable(scenario.timetable, network);
      for (const auto& e : scenario.timetable) {
        if (e.time_min >= horizon_min) continue;
        out.push_back(PlannedArrival{e.time_min, infer_category(e.itinerary, network), e.itinerary,
                                     e.wagons, e.departure_min});
      }
      std::stable_sort(out.begin(), out.end(), [](const PlannedArrival& a, const PlannedArrival& b) {
        return a.time < b.time;
      });
      break;
    }
    case scenarios::ArrivalMode::distribution: {
      auto& rng = streams.stream("interarrival");
      const auto& gap = scenario.distributions.interarrival;
      if (!(gap.mean() > 0.0)) throw ConfigError("interarrival distribution must have a positive mean");
      double t = 0.0;
      for (;;) {
        double g = gap.sample(rng);
        t += g < 0.0 ? 0.0 : g;
        if (t >= horizon_min) break;
        PlannedArrival p;
        p.time = t;
        p.category = factory.draw_category();
        p.itinerary = factory.draw_itinerary(p.category);
        out.push_back(std::move(p));
      }
      break;
    }
  }
  return out;
}

}  // namespace portrail::ops
