#include <algorithm>
#include <memory>
#include <random>
#include <vector>

#include "doctest.h"
#include "invariants.hpp"
#include "portrail/corridor/yard.hpp"
#include "portrail/metrics/kpi.hpp"
#include "portrail/scenarios/presets.hpp"
#include "portrail/scenarios/resolve.hpp"
#include "portrail/scenarios/run.hpp"
#include "portrail/sim/engine.hpp"
#include "portrail/sim/resource.hpp"
#include "random_scenario.hpp"

using namespace portrail;
using namespace portrail::sim;

TEST_CASE("events at equal times fire in insertion order")
{
  Simulator s;
  std::vector<int> order;
  for (int i = 0; i < 5; ++i) {
    s.schedule(10.0, EventKind::internal, i, kNoLocation, [&order, i] { order.push_back(i); });
  }
  s.schedule(5.0, EventKind::internal, 99, kNoLocation, [&order] { order.push_back(99); });
  s.run(100.0);
  CHECK(order == std::vector<int>{99, 0, 1, 2, 3, 4});
}

TEST_CASE("scheduling before the clock is rejected")
{
  Simulator s;
  s.schedule(10.0, EventKind::internal, 0, kNoLocation, [] {});
  s.run(10.0);
  CHECK(s.now() == doctest::Approx(10.0));
  CHECK_THROWS_AS(s.schedule(9.0, EventKind::internal, 0, kNoLocation, [] {}), LifecycleError);
  CHECK_NOTHROW(s.schedule(10.0, EventKind::internal, 0, kNoLocation, [] {}));
}

TEST_CASE("run stops at the horizon and leaves later events pending")
{
  Simulator s;
  int fired = 0;
  s.schedule(1.0, EventKind::internal, 0, kNoLocation, [&] { ++fired; });
  s.schedule(50.0, EventKind::internal, 0, kNoLocation, [&] { ++fired; });
  CHECK(s.run(10.0) == 1);
  CHECK(fired == 1);
  CHECK(s.pending() == 1);
}

TEST_CASE("property: processing order equals a sort by (time, insertion)")
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Simulator s;
    std::vector<std::pair<double, int>> expected;
    std::vector<std::pair<double, int>> seen;
    std::uniform_int_distribution<int> t(0, 20);
    for (int i = 0; i < 200; ++i) {
      const double at = t(rng);
      expected.push_back({at, i});
      s.schedule(at, EventKind::internal, i, kNoLocation, [&seen, &s, i] { seen.push_back({s.now(), i}); });
    }
    std::stable_sort(expected.begin(), expected.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    s.run(1e9);
    CHECK(seen == expected);
  }
}

TEST_CASE("trace rows carry increasing sequence numbers")
{
  Simulator s;
  s.schedule(1.0, EventKind::internal, 0, kNoLocation, [&] { s.record(EventKind::arrival, 0, 0); });
  s.schedule(1.0, EventKind::internal, 1, kNoLocation, [&] { s.record(EventKind::arrival, 1, 0); });
  s.run(5.0);
  REQUIRE(s.trace().size() == 2);
  CHECK(s.trace()[0].sequence < s.trace()[1].sequence);
  CHECK(s.trace()[0].train == 0);
}

TEST_CASE("count resource grants FIFO and never exceeds capacity")
{
  Simulator s;
  CapacitatedResource r(s, 0, "R", std::make_unique<CountPolicy>(2));
  std::vector<TrainId> granted;
  for (TrainId id = 0; id < 5; ++id) {
    s.schedule(0.0, EventKind::internal, id, 0, [&, id] {
      r.acquire(id, 650.0, [&, id] {
        granted.push_back(id);
        CHECK(r.occupant_count() <= 2);
        s.schedule_after(10.0, EventKind::internal, id, 0, [&, id] { r.release(id); });
      });
    });
  }
  s.run(1000.0);
  CHECK(granted == std::vector<TrainId>{0, 1, 2, 3, 4});
  CHECK(r.occupant_count() == 0);
  CHECK(r.grants() == 5);
}

TEST_CASE("priority keys order waiters, ties stay FIFO")
{
  Simulator s;
  CapacitatedResource r(s, 0, "R", std::make_unique<CountPolicy>(1));
  std::vector<TrainId> granted;
  const auto take = [&](TrainId id, double prio) {
    r.acquire(id, 1.0, [&, id] { granted.push_back(id); }, prio);
  };
  s.schedule(0.0, EventKind::internal, 0, 0, [&] {
    take(0, 0.0);
    take(1, 5.0);
    take(2, 1.0);
    take(3, 1.0);
  });
  s.schedule(1.0, EventKind::internal, 0, 0, [&] { r.release(0); });
  s.schedule(2.0, EventKind::internal, 0, 0, [&] { r.release(2); });
  s.schedule(3.0, EventKind::internal, 0, 0, [&] { r.release(3); });
  s.run(10.0);
  CHECK(granted == std::vector<TrainId>{0, 2, 3, 1});
}

TEST_CASE("a short train does not overtake a blocked head of line")
{
  Simulator s;
  CapacitatedResource r(s, 0, "budget", std::make_unique<LengthBudgetPolicy>(1000.0));
  std::vector<TrainId> granted;
  s.schedule(0.0, EventKind::internal, 0, 0, [&] {
    r.acquire(0, 600.0, [&] { granted.push_back(0); });
    r.acquire(1, 600.0, [&] { granted.push_back(1); });
    r.acquire(2, 300.0, [&] { granted.push_back(2); });
  });
  s.run(1.0);
  CHECK(granted == std::vector<TrainId>{0});
  s.schedule(2.0, EventKind::internal, 0, 0, [&] { r.release(0); });
  s.run(5.0);
  CHECK(granted == std::vector<TrainId>{0, 1, 2});
}

TEST_CASE("releasing a train that holds nothing is a lifecycle error")
{
  Simulator s;
  CapacitatedResource r(s, 0, "R", std::make_unique<CountPolicy>(1));
  CHECK_THROWS_AS(r.release(3), LifecycleError);
}

TEST_CASE("a train that can never fit is refused at request time")
{
  Simulator s;
  CapacitatedResource r(s, 0, "yard",
                        std::make_unique<corridor::YardPolicy>(corridor::YardSpec{"Y", {1300.0}}));
  CHECK_THROWS_AS(r.acquire(0, 1400.0, [] {}), ConfigError);
}

TEST_CASE("the invariant checker flags corrupted traces")
{
  auto s = scenarios::preset("replay_mixed");
  s.horizon_days = 10;
  const EventTrace clean = scenarios::simulate(scenarios::resolve(s));
  REQUIRE(testing::check_all(clean).empty());

  const auto find = [&](EventKind k) {
    for (std::size_t i = 0; i < clean.events.size(); ++i) {
      if (clean.events[i].kind == k) return i;
    }
    return clean.events.size();
  };

  EventTrace backwards = clean;
  backwards.events[5].time = -1.0;
  CHECK_FALSE(testing::check_ordering(backwards).empty());

  EventTrace double_grant = clean;
  const auto g = find(EventKind::resource_grant);
  double_grant.events.insert(double_grant.events.begin() + static_cast<long>(g) + 1, clean.events[g]);
  for (std::size_t i = 0; i < double_grant.events.size(); ++i) double_grant.events[i].sequence = i;
  CHECK_FALSE(testing::check_capacity(double_grant).empty());

  EventTrace lost = clean;
  lost.events.erase(lost.events.begin() + static_cast<long>(find(EventKind::lift_complete)));
  CHECK_FALSE(testing::check_lifecycle(lost).empty());

  EventTrace twice = clean;
  twice.events.push_back(clean.events[find(EventKind::exit)]);
  twice.events.back().sequence = clean.events.back().sequence + 1;
  twice.events.back().time = clean.events.back().time;
  CHECK_FALSE(testing::check_conservation(twice).empty());
}

TEST_CASE("random scenarios satisfy the invariants and do real work")
{
  std::mt19937_64 rng(5);
  std::uint64_t exits = 0;
  for (int i = 0; i < 20; ++i) {
    const auto s = testing::random_scenario(rng, 10);
    const auto trace = scenarios::simulate(s);
    const auto v = testing::check_all(trace);
    CHECK_MESSAGE(v.empty(), (v.empty() ? "" : v.front()));
    exits += metrics::compute_report(trace).exits;
  }
  CHECK(exits > 500);
}
