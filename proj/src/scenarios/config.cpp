#include "portrail/scenarios/config.hpp"

#include <array>

namespace portrail::scenarios
{
namespace
{
template <typename E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E value)
{
  for (const auto& [e, n] : table) {
    if (e == value) return n;
  }
  return "unknown";
}

template <typename E, std::size_t N>
std::optional<E> parse(const std::array<std::pair<E, std::string_view>, N>& table,
                       std::string_view s)
{
  for (const auto& [e, n] : table) {
    if (n == s) return e;
  }
  return std::nullopt;
}

constexpr std::array<std::pair<Variant, std::string_view>, 5> kVariants{{
    {Variant::as_is, "as_is"},
    {Variant::soon_to_be, "soon_to_be"},
    {Variant::centralized, "centralized"},
    {Variant::dpw_extended, "dpw_extended"},
    {Variant::single_track_duplicated, "single_track_duplicated"},
}};
constexpr std::array<std::pair<LiftMode, std::string_view>, 3> kLiftModes{{
    {LiftMode::constant_80pct, "constant_80pct"},
    {LiftMode::unchanged_empirical, "unchanged_empirical"},
    {LiftMode::constant_custom, "constant_custom"},
}};
constexpr std::array<std::pair<StagingPolicy, std::string_view>, 2> kStaging{{
    {StagingPolicy::botany_yard, "botany_yard"},
    {StagingPolicy::enfield, "enfield"},
}};
constexpr std::array<std::pair<ArrivalMode, std::string_view>, 3> kArrivals{{
    {ArrivalMode::dynamic, "dynamic"},
    {ArrivalMode::distribution, "distribution"},
    {ArrivalMode::schedule, "schedule"},
}};
constexpr std::array<std::pair<CallupPolicy, std::string_view>, 2> kCallup{{
    {CallupPolicy::fifo, "fifo"},
    {CallupPolicy::planned_order, "planned_order"},
}};
constexpr std::array<std::pair<LocoPolicy, std::string_view>, 2> kLoco{{
    {LocoPolicy::wait_outside, "wait_outside"},
    {LocoPolicy::propel_onward, "propel_onward"},
}};
}  // namespace

std::string_view to_string(Variant v) noexcept { return name_of(kVariants, v); }
std::string_view to_string(LiftMode m) noexcept { return name_of(kLiftModes, m); }
std::string_view to_string(StagingPolicy p) noexcept { return name_of(kStaging, p); }
std::string_view to_string(ArrivalMode m) noexcept { return name_of(kArrivals, m); }
std::string_view to_string(CallupPolicy p) noexcept { return name_of(kCallup, p); }
std::string_view to_string(LocoPolicy p) noexcept { return name_of(kLoco, p); }

std::optional<Variant> variant_from_string(std::string_view s) noexcept { return parse(kVariants, s); }
std::optional<LiftMode> lift_mode_from_string(std::string_view s) noexcept { return parse(kLiftModes, s); }
std::optional<StagingPolicy> staging_from_string(std::string_view s) noexcept { return parse(kStaging, s); }
std::optional<ArrivalMode> arrival_mode_from_string(std::string_view s) noexcept { return parse(kArrivals, s); }
std::optional<CallupPolicy> callup_from_string(std::string_view s) noexcept { return parse(kCallup, s); }
std::optional<LocoPolicy> loco_from_string(std::string_view s) noexcept { return parse(kLoco, s); }

}  // namespace portrail::scenarios
