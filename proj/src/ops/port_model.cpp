#include "portrail/ops/port_model.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <memory>

#include "portrail/corridor/yard.hpp"
#include "portrail/ops/generator.hpp"
#include "portrail/ops/service.hpp"
#include "portrail/sim/resource.hpp"

namespace portrail::ops
{
namespace
{
using sim::EventKind;
using S = LifecycleState;

// Earliest time >= t at which the daily window is open.
double next_open(const scenarios::OperatingHours& h, double t)
{
  if (h.always_open()) return t;
  const double day = std::floor(t / kMinutesPerDay) * kMinutesPerDay;
  const double offset = t - day;
  if (offset < h.open_min) return day + h.open_min;
  if (offset < h.close_min) return t;
  return day + kMinutesPerDay + h.open_min;
}

class PortModel
{
 public:
  PortModel(const scenarios::ScenarioConfig& scenario, const corridor::CorridorNetwork& network)
      : cfg_(scenario),
        net_(network),
        streams_(scenario.seed),
        sampler_(scenario, streams_),
        factory_(scenario, network, streams_)
  {
    build_locations();
  }

  sim::EventTrace run()
  {
    const double horizon = cfg_.horizon_days * kMinutesPerDay;
    if (cfg_.arrival_mode == scenarios::ArrivalMode::dynamic) {
      start_dynamic();
    } else {
      for (auto& plan : generate_trains(cfg_, net_, factory_, streams_, horizon)) {
        const double t = plan.time;
        auto p = std::make_shared<PlannedArrival>(std::move(plan));
        sim_.schedule(t, EventKind::internal, kNoTrain, enfield_, [this, p] { arrive(*p); });
      }
    }
    sim_.run(horizon);

    sim::EventTrace trace;
    trace.events = sim_.take_trace();
    trace.meta.scenario_name = cfg_.name;
    trace.meta.seed = cfg_.seed;
    trace.meta.horizon_days = cfg_.horizon_days;
    trace.meta.warmup_days = cfg_.warmup_days;
    trace.meta.locations = locations_;
    trace.meta.resampled_durations = sampler_.resampled();
    for (const auto& t : trains_) trace.trains.push_back(record_of(*t));
    return trace;
  }

 private:
  struct TerminalNode
  {
    const corridor::TerminalSpec* spec = nullptr;
    std::unique_ptr<sim::CapacitatedResource> resource;
  };

  LocationId add_location(std::string name, sim::LocationKind kind, int capacity, bool stevedore)
  {
    locations_.push_back(sim::LocationInfo{std::move(name), kind, capacity, stevedore});
    return static_cast<LocationId>(locations_.size() - 1);
  }

  void build_locations()
  {
    enfield_ = add_location(corridor::kEnfield, sim::LocationKind::source, 0, false);
    const LocationId cr = add_location(corridor::kCooksRiver, sim::LocationKind::staging,
                                       net_.cooks_river_capacity, false);
    cooks_river_ = std::make_unique<sim::CapacitatedResource>(
        sim_, cr, corridor::kCooksRiver,
        std::make_unique<sim::CountPolicy>(net_.cooks_river_capacity));
    const LocationId tr = add_location(corridor::kSingleTrack, sim::LocationKind::track,
                                       net_.single_track_capacity, false);
    track_ = std::make_unique<sim::CapacitatedResource>(
        sim_, tr, corridor::kSingleTrack,
        std::make_unique<sim::CountPolicy>(net_.single_track_capacity));

    const auto arr = net_.arrival_roads();
    const auto dep = net_.departure_roads();
    const LocationId a = add_location(kArrivalRoads, sim::LocationKind::yard, arr.capacity_slots(), false);
    arrival_ = std::make_unique<sim::CapacitatedResource>(
        sim_, a, kArrivalRoads, std::make_unique<corridor::YardPolicy>(arr));
    const LocationId d = add_location(kDepartureRoads, sim::LocationKind::yard, dep.capacity_slots(), false);
    departure_ = std::make_unique<sim::CapacitatedResource>(
        sim_, d, kDepartureRoads, std::make_unique<corridor::YardPolicy>(dep));

    for (const auto& spec : net_.terminals) {
      const bool stevedore = spec.kind == TerminalKind::stevedore;
      const LocationId id =
          add_location(spec.name, sim::LocationKind::terminal, spec.service_capacity, stevedore);
      TerminalNode node;
      node.spec = &spec;
      node.resource = std::make_unique<sim::CapacitatedResource>(
          sim_, id, spec.name, std::make_unique<sim::CountPolicy>(spec.service_capacity));
      terminals_.emplace(spec.name, std::move(node));
    }
  }

  TerminalNode& terminal(const std::string& name) { return terminals_.at(name); }

  // --- dynamic dispatch -------------------------------------------------

  // Each stevedore terminal owns staging_depth x service_capacity dispatch
  // tokens. A token is spent when a train leaves Enfield for the terminal
  // and comes back when that train is called up, so the terminal always has
  // its quota of trains on the way or staged.
  void start_dynamic()
  {
    if (cfg_.mix.non_stevedore > 0.0) {
      throw ConfigError("dynamic dispatch serves stevedore terminals only; "
                        "use distribution or schedule arrivals for empty-park trains");
    }
    for (const auto& spec : net_.terminals) {
      if (spec.kind != TerminalKind::stevedore) continue;
      const int tokens = cfg_.capacities.staging_depth * spec.service_capacity;
      for (int i = 0; i < tokens; ++i) demand_.push_back(spec.name);
    }
    pump_dispatch();
  }

  void pump_dispatch()
  {
    if (dispatch_scheduled_ || demand_.empty()) return;
    dispatch_scheduled_ = true;
    const double t = std::max(sim_.now(), next_dispatch_allowed_);
    sim_.schedule(t, EventKind::internal, kNoTrain, enfield_, [this] {
      dispatch_scheduled_ = false;
      const std::string first = demand_.front();
      demand_.pop_front();
      PlannedArrival p;
      p.time = sim_.now();
      p.category = cfg_.mix.split > 0.0 ? factory_.draw_category() : TrainCategory::dedicated;
      p.itinerary = factory_.draw_itinerary(p.category, first);
      const double gap = sampler_.duration(cfg_.distributions.headway, streams_.stream("headway"));
      next_dispatch_allowed_ = sim_.now() + gap;
      Train& t = arrive(p);
      token_holder_[t.id] = first;
      pump_dispatch();
    });
  }

  // --- inbound ----------------------------------------------------------

  Train& arrive(const PlannedArrival& plan)
  {
    const auto id = static_cast<TrainId>(trains_.size());
    trains_.push_back(std::make_unique<Train>(factory_.make(id, plan)));
    Train& t = *trains_.back();
    sim_.record(EventKind::arrival, t.id, enfield_);
    const std::string& first = t.itinerary.front().terminal;
    if (cfg_.staging == scenarios::StagingPolicy::enfield && staged_[first] > 0) {
      held_[first].push_back(t.id);
    } else {
      release_from_enfield(t);
    }
    return t;
  }

  void release_from_enfield(Train& t)
  {
    ++staged_[t.itinerary.front().terminal];
    const TrainId id = t.id;
    cooks_river_->acquire(id, t.rake.length_m, [this, id] {
      sim_.schedule_after(cfg_.timings.corridor_travel_min, EventKind::internal, id,
                          cooks_river_->id(), [this, id] { reach_cooks_river(id); });
    });
  }

  void reach_cooks_river(TrainId id)
  {
    Train& t = *trains_[id];
    sim_.record(EventKind::reach_cooks_river, id, cooks_river_->id());
    const auto& first = terminal(t.itinerary.front().terminal);
    if (!first.spec->inside_port) {
      request_terminal(t, [this, id] {
        cooks_river_->release(id);
        trains_[id]->advance(S::staged_awaiting_callup);
      });
      return;
    }
    arrival_->acquire(id, t.rake.length_m, [this, id] {
      track_->acquire(id, trains_[id]->rake.length_m, [this, id] { enter_port(id); });
    });
  }

  void enter_port(TrainId id)
  {
    cooks_river_->release(id);
    sim_.record(EventKind::track_in_start, id, track_->id());
    sim_.schedule_after(cfg_.timings.single_track_traverse_min, EventKind::internal, id,
                        track_->id(), [this, id] {
                          sim_.record(EventKind::track_in_end, id, track_->id());
                          track_->release(id);
                          sim_.record(EventKind::yard_arrival, id, arrival_->id());
                          Train& t = *trains_[id];
                          t.advance(S::staged_awaiting_runaround);
                          sim_.record(EventKind::runaround_start, id, arrival_->id());
                          t.advance(S::runaround);
                          sim_.schedule_after(cfg_.timings.runaround_min, EventKind::internal, id,
                                              arrival_->id(), [this, id] {
                                                sim_.record(EventKind::runaround_complete, id,
                                                            arrival_->id());
                                                trains_[id]->advance(S::staged_awaiting_callup);
                                                request_terminal(*trains_[id], nullptr);
                                              });
                        });
  }

  // --- terminal servicing -----------------------------------------------

  // `on_grant_first` runs before the call-up bookkeeping (used to hand a
  // train over from Cook's River to a terminal outside the port).
  void request_terminal(Train& t, std::function<void()> on_grant_first)
  {
    const TrainId id = t.id;
    TerminalNode& node = terminal(t.current_visit().terminal);
    const double priority =
        cfg_.policies.callup == scenarios::CallupPolicy::planned_order ? t.planned_arrival : 0.0;
    node.resource->acquire(
        id, t.rake.length_m,
        [this, id, &node, hook = std::move(on_grant_first)] {
          if (hook) hook();
          const double open = next_open(node.spec->hours, sim_.now());
          sim_.schedule(open, EventKind::internal, id, node.resource->id(),
                        [this, id, &node] { call_up(id, node); });
        },
        priority);
  }

  void call_up(TrainId id, TerminalNode& node)
  {
    Train& t = *trains_[id];
    const LocationId loc = node.resource->id();
    sim_.record(EventKind::call_up, id, loc);
    if (t.next_visit == 0) {
      const std::string& first = t.itinerary.front().terminal;
      --staged_[first];
      auto& held = held_[first];
      if (!held.empty()) {
        const TrainId next = held.front();
        held.pop_front();
        release_from_enfield(*trains_[next]);
      }
      auto it = token_holder_.find(id);
      if (it != token_holder_.end()) {
        demand_.push_back(it->second);
        token_holder_.erase(it);
        pump_dispatch();
      }
    }
    if (t.on_final_visit() && arrival_->holds(id)) arrival_->release(id);
    t.advance(S::shunting_in);

    const Visit& v = t.current_visit();
    const int lifts = lifts_required(v.import_teu) + lifts_required(v.export_teu);
    const bool propel_onward = t.loco == scenarios::LocoPolicy::propel_onward;
    const ServiceJob job = sampler_.plan(id, *node.spec, t.rake.length_m, lifts, propel_onward);
    service_duration(job, *node.spec, t.rake.length_m);

    sim_.schedule_after(job.shunt_in + job.split_overhead, EventKind::internal, id, loc,
                        [this, id, loc, job, &node] {
      sim_.record(EventKind::shunt_in_complete, id, loc);
      trains_[id]->advance(S::placed_lifting);
      sim_.schedule_after(job.placement_delay, EventKind::internal, id, loc,
                          [this, id, loc, job, &node] {
        sim_.record(EventKind::lift_start, id, loc);
        sim_.schedule_after(job.lifting, EventKind::internal, id, loc,
                            [this, id, loc, job, &node] {
          sim_.record(EventKind::lift_complete, id, loc);
          trains_[id]->advance(S::awaiting_callout);
          sim_.record(EventKind::call_out, id, loc);
          trains_[id]->advance(S::shunting_out);
          sim_.schedule_after(job.shunt_out, EventKind::internal, id, loc,
                              [this, id, &node] { finish_visit(id, node); });
        });
      });
    });
  }

  void finish_visit(TrainId id, TerminalNode& node)
  {
    Train& t = *trains_[id];
    const LocationId loc = node.resource->id();
    if (!t.on_final_visit()) {
      sim_.record(EventKind::exit_complete, id, loc);
      node.resource->release(id);
      t.advance(S::staged_awaiting_callup);
      ++t.next_visit;
      request_terminal(t, nullptr);
      return;
    }
    if (!node.spec->inside_port) {
      sim_.record(EventKind::exit_complete, id, loc);
      node.resource->release(id);
      t.advance(S::staged_awaiting_departure);
      wait_for_departure(id, [this, id, loc] {
        sim_.record(EventKind::departure, id, loc);
        trains_[id]->advance(S::departed);
        travel_home(id);
      });
      return;
    }
    departure_->acquire(id, t.rake.length_m, [this, id, loc, &node] {
      sim_.record(EventKind::exit_complete, id, loc);
      node.resource->release(id);
      trains_[id]->advance(S::staged_awaiting_departure);
      wait_for_departure(id, [this, id] {
        track_->acquire(id, trains_[id]->rake.length_m, [this, id] { leave_port(id); });
      });
    });
  }

  void wait_for_departure(TrainId id, std::function<void()> then)
  {
    const Train& t = *trains_[id];
    const double at = t.scheduled_departure ? std::max(*t.scheduled_departure, sim_.now()) : sim_.now();
    sim_.schedule(at, EventKind::internal, id, kNoLocation, std::move(then));
  }

  // --- outbound ---------------------------------------------------------

  void leave_port(TrainId id)
  {
    sim_.record(EventKind::departure, id, departure_->id());
    departure_->release(id);
    trains_[id]->advance(S::departed);
    sim_.record(EventKind::track_out_start, id, track_->id());
    sim_.schedule_after(cfg_.timings.single_track_traverse_min, EventKind::internal, id,
                        track_->id(), [this, id] {
                          sim_.record(EventKind::track_out_end, id, track_->id());
                          track_->release(id);
                          travel_home(id);
                        });
  }

  void travel_home(TrainId id)
  {
    sim_.schedule_after(cfg_.timings.corridor_travel_min, EventKind::internal, id, enfield_,
                        [this, id] { sim_.record(EventKind::exit, id, enfield_); });
  }

  sim::TrainRecord record_of(const Train& t) const
  {
    sim::TrainRecord r;
    r.id = t.id;
    r.category = t.category;
    r.wagon_count = t.rake.wagons;
    r.length_m = t.rake.length_m;
    r.teu_capacity = t.rake.teu_capacity;
    r.planned_import_teu = t.planned_import_teu;
    r.actual_import_teu = t.actual_import_teu;
    r.planned_export_teu = t.planned_export_teu;
    r.actual_export_teu = t.actual_export_teu;
    for (const auto& v : t.itinerary) {
      r.itinerary.push_back(
          sim::VisitRecord{terminals_.at(v.terminal).resource->id(), v.import_teu, v.export_teu});
    }
    return r;
  }

  const scenarios::ScenarioConfig& cfg_;
  const corridor::CorridorNetwork& net_;
  sim::Simulator sim_;
  stochastics::StreamSet streams_;
  ServiceSampler sampler_;
  TrainFactory factory_;

  std::vector<sim::LocationInfo> locations_;
  LocationId enfield_ = kNoLocation;
  std::unique_ptr<sim::CapacitatedResource> cooks_river_;
  std::unique_ptr<sim::CapacitatedResource> track_;
  std::unique_ptr<sim::CapacitatedResource> arrival_;
  std::unique_ptr<sim::CapacitatedResource> departure_;
  std::map<std::string, TerminalNode> terminals_;

  std::vector<std::unique_ptr<Train>> trains_;
  std::map<std::string, int> staged_;  // released from Enfield, first visit not yet called up
  std::map<std::string, std::deque<TrainId>> held_;

  std::deque<std::string> demand_;
  std::map<TrainId, std::string> token_holder_;
  bool dispatch_scheduled_ = false;
  double next_dispatch_allowed_ = 0.0;
};

}  // namespace

sim::EventTrace run_simulation(const scenarios::ScenarioConfig& scenario,
                               const corridor::CorridorNetwork& network)
{
  scenario.distributions.validate(network.terminal_names());
  if (scenario.horizon_days < 1) throw ConfigError("horizon_days must be >= 1");
  PortModel model(scenario, network);
  return model.run();
}

}  // namespace portrail::ops
