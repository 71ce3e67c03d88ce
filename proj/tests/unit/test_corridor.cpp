#include <random>
#include <vector>

#include "doctest.h"
#include "portrail/corridor/network.hpp"
#include "portrail/corridor/yard.hpp"
#include "portrail/scenarios/config.hpp"
#include "yard_oracle.hpp"

using namespace portrail;
using namespace portrail::corridor;
using scenarios::ScenarioConfig;
using scenarios::Variant;

TEST_CASE("slots needed on a 1300m road")
{
  CHECK(slots_needed(1300.0, 350.0) == 1);
  CHECK(slots_needed(1300.0, 650.0) == 1);
  CHECK(slots_needed(1300.0, 650.1) == 2);
  CHECK(slots_needed(1300.0, 1300.0) == 2);
  CHECK(slots_needed(1300.0, 1300.5) == 0);
}

TEST_CASE("yard packing: two short trains share a road, a long one takes it whole")
{
  YardState y(YardSpec{"Y", {1300.0, 1300.0}});
  CHECK(y.admit(1, 650.0) == 0);
  CHECK(y.admit(2, 600.0) == 0);
  CHECK(y.admit(3, 900.0) == 1);
  CHECK_FALSE(y.can_admit(350.0));
  CHECK(y.used_slots() == 4);
  y.release(3);
  CHECK(y.can_admit(700.0));
  CHECK_FALSE(y.can_ever_admit(1400.0));
  CHECK_THROWS_AS(y.release(3), LifecycleError);
}

TEST_CASE("best fit completes a half-used road before opening an empty one")
{
  YardState y(YardSpec{"Y", {1300.0, 1300.0}});
  y.admit(1, 650.0);
  y.admit(2, 650.0);
  y.admit(3, 650.0);
  y.release(1);  // road 0 half used, road 1 half used
  CHECK_FALSE(y.can_admit(700.0));
  CHECK(y.admit(4, 350.0).has_value());
  CHECK(y.used_slots() == 3);
  CHECK(y.can_admit(700.0) == false);
}

TEST_CASE("property: random admit/release sequences keep slot accounting exact")
{
  std::mt19937_64 rng(11);
  const std::vector<double> lengths{350.0, 650.0, 700.0, 900.0};
  for (int trial = 0; trial < 200; ++trial) {
    YardState y(YardSpec{"Y", {1300.0, 1300.0, 1300.0}});
    std::vector<std::pair<TrainId, double>> inside;
    for (TrainId id = 0; id < 40; ++id) {
      if (!inside.empty() && rng() % 3 == 0) {
        const std::size_t k = rng() % inside.size();
        y.release(inside[k].first);
        inside.erase(inside.begin() + static_cast<long>(k));
      }
      const double len = lengths[rng() % lengths.size()];
      if (yard_admit(y, id, len)) inside.push_back({id, len});
      int slots = 0;
      std::vector<double> lens;
      for (const auto& [_, l] : inside) {
        slots += slots_needed(1300.0, l);
        lens.push_back(l);
      }
      REQUIRE(y.used_slots() == slots);
      REQUIRE(y.train_count() == inside.size());
      REQUIRE(slots <= y.capacity_slots());
      REQUIRE(testing::packing_feasible(lens, y.spec().roads));
    }
  }
}

TEST_CASE("default terminal line-ups per variant")
{
  const auto names = [](Variant v) {
    std::vector<std::string> out;
    for (const auto& t : default_terminals(v)) out.push_back(t.name);
    return out;
  };
  CHECK(names(Variant::as_is) == std::vector<std::string>{"Patrick", "DPWorld", "SydneyHaulage", "MCS"});
  CHECK(names(Variant::soon_to_be) ==
        std::vector<std::string>{"Patrick", "DPWorld", "HPH", "SydneyHaulage", "MCS"});
  CHECK(names(Variant::centralized) == std::vector<std::string>{"Central", "SydneyHaulage", "MCS"});

  for (const auto& t : default_terminals(Variant::as_is)) {
    if (t.name == "DPWorld") {
      CHECK(t.siding_length_m == 350.0);
      CHECK(t.needs_split(650.0));
    }
  }
  for (const auto& t : default_terminals(Variant::dpw_extended)) {
    if (t.name == "DPWorld") CHECK_FALSE(t.needs_split(650.0));
  }
  for (const auto& t : default_terminals(Variant::centralized)) {
    if (t.name == "Central") {
      CHECK(t.service_capacity == 3);
      CHECK(t.locomotive_stays_attached);
      CHECK_FALSE(t.needs_split(900.0));
    }
  }
}

TEST_CASE("network build honours capacities and variants")
{
  ScenarioConfig s;
  s.variant = Variant::single_track_duplicated;
  auto net = build_network(s);
  CHECK(net.single_track_capacity == 2);
  CHECK(net.cooks_river_capacity == 3);
  CHECK(net.arrival_roads().roads.size() == 2);
  CHECK(net.departure_roads().roads.size() == 2);
  CHECK(net.reachable(kEnfield, "Patrick"));
  CHECK(net.reachable(kEnfield, "MCS"));
  CHECK(net.stevedore_names() == std::vector<std::string>{"Patrick", "DPWorld"});

  s.variant = Variant::as_is;
  CHECK(build_network(s).single_track_capacity == 1);
}

TEST_CASE("overrides that conflict with the variant are rejected")
{
  ScenarioConfig s;
  s.variant = Variant::centralized;
  s.terminal_overrides["DPWorld"].siding_length_m = 650.0;
  CHECK_THROWS_AS(build_network(s), ConfigError);

  ScenarioConfig ok;
  ok.terminal_overrides["DPWorld"].siding_length_m = 700.0;
  ok.terminal_overrides["DPWorld"].requires_split_above_m = 700.0;
  const auto net = build_network(ok);
  CHECK(net.find_terminal("DPWorld")->siding_length_m == 700.0);

  ScenarioConfig bad;
  bad.terminal_overrides["Patrick"].service_capacity = 0;
  CHECK_THROWS_AS(build_network(bad), ConfigError);
}
