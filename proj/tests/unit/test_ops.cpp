#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "portrail/corridor/network.hpp"
#include "portrail/ops/generator.hpp"
#include "portrail/ops/service.hpp"
#include "portrail/ops/train.hpp"
#include "portrail/scenarios/resolve.hpp"
#include "portrail/stochastics/rng.hpp"

using namespace portrail;
using namespace portrail::ops;
using S = LifecycleState;

TEST_CASE("lifts follow round(TEU / (136 / 88))")
{
  CHECK(lifts_required(136.0) == 88);
  CHECK(lifts_required(96.0) == 62);
  CHECK(lifts_required(0.0) == 0);
  for (int teu = 0; teu <= 200; ++teu) {
    CHECK(lifts_required(teu) == static_cast<int>(std::lround(teu * 88.0 / 136.0)));
  }
  CHECK_THROWS_AS(lifts_required(-1.0), ConfigError);
}

TEST_CASE("rake geometry")
{
  const Rake r32 = standard_rake(32);
  CHECK(r32.length_m == doctest::Approx(32 * 20.3));
  CHECK(r32.teu_capacity == 96.0);
  CHECK(r32.length_m <= 650.0);
  CHECK(standard_rake(17).teu_capacity == 51.0);
  CHECK(standard_rake(10, 20.0).length_m == doctest::Approx(223.0));
  CHECK(long_rake().length_m == 900.0);
  CHECK(long_rake().teu_capacity == 136.0);
  CHECK_THROWS_AS(standard_rake(0), ConfigError);
}

TEST_CASE("lifecycle: the canonical single-visit path is legal")
{
  Train t;
  for (S next : {S::staged_awaiting_runaround, S::runaround, S::staged_awaiting_callup, S::shunting_in,
                 S::placed_lifting, S::awaiting_callout, S::shunting_out, S::staged_awaiting_departure,
                 S::departed}) {
    CHECK_NOTHROW(t.advance(next));
  }
  CHECK(t.state == S::departed);
}

TEST_CASE("lifecycle: exhaustive transition table")
{
  const std::vector<S> all{S::en_route_in,    S::staged_awaiting_runaround, S::runaround,
                           S::staged_awaiting_callup, S::shunting_in,  S::placed_lifting,
                           S::awaiting_callout, S::shunting_out,       S::staged_awaiting_departure,
                           S::departed};
  const std::set<std::pair<S, S>> legal{
      {S::en_route_in, S::staged_awaiting_runaround},
      {S::en_route_in, S::staged_awaiting_callup},
      {S::staged_awaiting_runaround, S::runaround},
      {S::runaround, S::staged_awaiting_callup},
      {S::staged_awaiting_callup, S::shunting_in},
      {S::shunting_in, S::placed_lifting},
      {S::placed_lifting, S::awaiting_callout},
      {S::awaiting_callout, S::shunting_out},
      {S::shunting_out, S::staged_awaiting_callup},
      {S::shunting_out, S::staged_awaiting_departure},
      {S::staged_awaiting_departure, S::departed},
  };
  for (S a : all) {
    for (S b : all) {
      CHECK(transition_allowed(a, b) == legal.contains({a, b}));
      Train t;
      t.state = a;
      if (legal.contains({a, b})) CHECK_NOTHROW(t.advance(b));
      else CHECK_THROWS_AS(t.advance(b), LifecycleError);
    }
  }
}

TEST_CASE("itinerary rules per category")
{
  const std::vector<std::string> stev{"Patrick", "DPWorld"};
  CHECK_NOTHROW(validate_itinerary(TrainCategory::dedicated, {"Patrick"}, stev));
  CHECK_NOTHROW(validate_itinerary(TrainCategory::split, {"Patrick", "DPWorld"}, stev));
  CHECK_NOTHROW(validate_itinerary(TrainCategory::non_stevedore, {"MCS"}, stev));
  CHECK_THROWS_AS(validate_itinerary(TrainCategory::dedicated, {"Patrick", "DPWorld"}, stev), ConfigError);
  CHECK_THROWS_AS(validate_itinerary(TrainCategory::split, {"Patrick"}, stev), ConfigError);
  CHECK_THROWS_AS(validate_itinerary(TrainCategory::split, {"Patrick", "Patrick"}, stev), ConfigError);
  CHECK_THROWS_AS(validate_itinerary(TrainCategory::non_stevedore, {"Patrick"}, stev), ConfigError);
}

TEST_CASE("service duration sums its parts and checks the split rule")
{
  corridor::TerminalSpec dpw;
  dpw.name = "DPWorld";
  dpw.siding_count = 3;
  dpw.siding_length_m = 350.0;
  dpw.requires_split_above_m = 350.0;
  ServiceJob job;
  job.shunt_in = 7.5;
  job.split_overhead = 1.0;
  job.placement_delay = 2.0;
  job.lifting = 100.0;
  job.shunt_out = 9.0;
  CHECK(service_duration(job, dpw, 649.6) == doctest::Approx(119.5));
  CHECK_THROWS_AS(service_duration(job, dpw, 300.0), LifecycleError);
  job.split_overhead = 0.0;
  CHECK(service_duration(job, dpw, 300.0) == doctest::Approx(118.5));
}

namespace
{
scenarios::ScenarioConfig resolved(scenarios::ScenarioConfig s)
{
  return scenarios::resolve(std::move(s));
}
}  // namespace

TEST_CASE("sampled jobs add propel, inspection and split terms to the calibrated shunts")
{
  scenarios::ScenarioConfig s = resolved({});
  const auto net = corridor::build_network(s);
  stochastics::StreamSet streams(1);
  ServiceSampler sampler(s, streams);
  const auto* dpw = net.find_terminal("DPWorld");
  const double len = standard_rake(32).length_m;
  const ServiceJob job = sampler.plan(0, *dpw, len, 124, false);
  const auto& cal = s.calibration.terminals.at("DPWorld");
  const double hundreds = len / 100.0;
  CHECK(job.shunt_in == doctest::Approx(cal.shunt_in_min + hundreds));
  CHECK(job.split_overhead == 1.0);
  CHECK(job.shunt_out ==
        doctest::Approx(cal.shunt_out_min + hundreds + hundreds * s.calibration.inspection_min_per_100m));
  CHECK(job.lift_rate == doctest::Approx(0.8 * cal.max_lift_rate));
  CHECK(job.lifting == doctest::Approx(124.0 / job.lift_rate * 60.0));

  const ServiceJob onward = sampler.plan(1, *dpw, len, 124, true);
  CHECK(onward.shunt_out == doctest::Approx(job.shunt_out + 5.0));
}

TEST_CASE("negative duration draws are redrawn and counted")
{
  scenarios::ScenarioConfig s = resolved({});
  stochastics::StreamSet streams(3);
  ServiceSampler sampler(s, streams);
  const auto d = stochastics::Distribution::uniform(-1.0, 1.0);
  auto& rng = streams.stream("test");
  for (int i = 0; i < 1000; ++i) CHECK(sampler.duration(d, rng) >= 0.0);
  CHECK(sampler.resampled() > 0);

  const auto never = stochastics::Distribution::constant(-3.0);
  CHECK(sampler.duration(never, rng) == 0.0);
  CHECK_THROWS_AS(sampler.rate(stochastics::Distribution::constant(0.0), rng), ConfigError);
}

TEST_CASE("container variance stays within the rake and rounds to whole TEU")
{
  scenarios::ScenarioConfig in;
  in.arrival_mode = scenarios::ArrivalMode::distribution;
  in.mix = {0.5, 0.3, 0.2};
  in.overrides.container_variance = stochastics::Distribution::uniform(-0.5, 0.5);
  const auto s = resolved(in);
  const auto net = corridor::build_network(s);
  stochastics::StreamSet streams(5);
  TrainFactory factory(s, net, streams);
  for (TrainId id = 0; id < 500; ++id) {
    const auto cat = factory.draw_category();
    PlannedArrival p{0.0, cat, factory.draw_itinerary(cat), std::nullopt, std::nullopt};
    const Train t = factory.make(id, p);
    CHECK(t.actual_import_teu >= 0.0);
    CHECK(t.actual_import_teu <= t.rake.teu_capacity);
    CHECK(t.actual_import_teu == std::round(t.actual_import_teu));
    CHECK(infer_category(p.itinerary, net) == cat);
    CHECK_NOTHROW(validate_itinerary(cat, p.itinerary, net.stevedore_names()));
  }
}

TEST_CASE("timetables: entries past the horizon are dropped, bad entries named")
{
  scenarios::ScenarioConfig in;
  in.arrival_mode = scenarios::ArrivalMode::schedule;
  in.mix = {1.0, 0.0, 0.0};
  in.timetable = {{500.0, {"Patrick"}, {}, {}, {}},
                  {100.0, {"DPWorld", "Patrick"}, {}, 20, {}},
                  {5000.0, {"MCS"}, {}, {}, {}}};
  in.horizon_days = 1;
  const auto s = resolved(in);
  const auto net = corridor::build_network(s);
  stochastics::StreamSet streams(1);
  TrainFactory factory(s, net, streams);
  const auto plan = generate_trains(s, net, factory, streams, 1440.0);
  REQUIRE(plan.size() == 2);
  CHECK(plan[0].time == 100.0);
  CHECK(plan[0].category == TrainCategory::split);
  CHECK(plan[1].category == TrainCategory::dedicated);

  std::vector<scenarios::TimetableEntry> bad{{0.0, {"MCS", "Patrick"}, {}, {}, {}}};
  CHECK_THROWS_AS(validate_timetable(bad, net), ConfigError);
  bad = {{0.0, {"Nowhere"}, {}, {}, {}}};
  CHECK_THROWS_AS(validate_timetable(bad, net), ConfigError);
  bad = {{0.0, {"Patrick"}, TrainCategory::split, {}, {}}};
  CHECK_THROWS_AS(validate_timetable(bad, net), ConfigError);
}
