// Writes the synthetic operational dataset used by the analytics tests:
// four weeks of 16 daily arrivals alternating between the two stevedores,
// with occasional long yard dwells and a share of unrecorded departures.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "portrail/analytics/records.hpp"

namespace
{
using portrail::analytics::format_timestamp;
using portrail::analytics::Timestamp;

Timestamp at(Timestamp epoch, int minute)
{
  return epoch + std::chrono::minutes{minute};
}
}  // namespace

int main(int argc, char** argv)
{
  const std::string dir = argc > 1 ? argv[1] : ".";
  std::ofstream dop(dir + "/profile_dop.csv");
  std::ofstream mov(dir + "/profile_movements.csv");
  std::ofstream lift(dir + "/profile_lifts.csv");
  if (!dop || !mov || !lift) {
    std::cerr << "cannot write fixtures into " << dir << "\n";
    return 1;
  }
  dop << portrail::analytics::kDopHeader << ",length_m\n";
  mov << portrail::analytics::kMovementHeader << "\n";
  lift << portrail::analytics::kLiftHeader << "\n";

  const Timestamp epoch = std::chrono::sys_days{std::chrono::year{2024} / 3 / 4};  // a Monday
  std::mt19937_64 rng(20240304);
  std::uniform_int_distribution<int> jitter(-1, 1);
  std::bernoulli_distribution long_dwell(0.25);
  std::uniform_int_distribution<int> dwell(400, 900);
  std::bernoulli_distribution missing_departure(0.29);
  std::bernoulli_distribution long_rake(0.1);

  constexpr int kDays = 28;
  constexpr int kPerDay = 16;
  int patrick_free = 0, dpw_free = 0;
  for (int i = 0; i < kDays * kPerDay; ++i) {
    const std::string id = "P" + std::to_string(i + 1);
    const bool patrick = i % 2 == 0;
    const int arrive = 30 + i * 90 + jitter(rng) * 5;
    int& free_at = patrick ? patrick_free : dpw_free;
    const int enter = std::max(arrive + 20, free_at);
    const int service = patrick ? 123 + jitter(rng) : 80 + jitter(rng);
    const int exit = enter + service;
    free_at = exit + 5;
    const int shunt = patrick ? 8 + jitter(rng) : 12 + jitter(rng);
    const int depart = exit + 30 + (long_dwell(rng) ? dwell(rng) : 0);
    const std::string terminal = patrick ? "Patrick" : "DPWorld";
    const bool has_departure = !missing_departure(rng);

    dop << id << ',' << format_timestamp(at(epoch, arrive - 10)) << ','
        << format_timestamp(at(epoch, arrive)) << ',' << format_timestamp(at(epoch, depart - 15)) << ','
        << (has_departure ? format_timestamp(at(epoch, depart)) : "") << ",Enfield,Enfield,"
        << (long_rake(rng) ? 900 : 650) << '\n';
    mov << id << ',' << format_timestamp(at(epoch, arrive)) << ",arrive,BotanyYard\n"
        << id << ',' << format_timestamp(at(epoch, enter)) << ",enter_terminal," << terminal << '\n'
        << id << ',' << format_timestamp(at(epoch, exit)) << ",exit_terminal," << terminal << '\n'
        << id << ',' << format_timestamp(at(epoch, depart)) << ",depart,BotanyYard\n";
    lift << 'S' << (i + 1) << ',' << terminal << ",124,124,64,60,"
         << format_timestamp(at(epoch, enter + shunt)) << ','
         << format_timestamp(at(epoch, exit - shunt)) << ",92,92\n";
  }
  return 0;
}
