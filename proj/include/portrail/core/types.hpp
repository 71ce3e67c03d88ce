#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace portrail
{
using TrainId = std::int32_t;
using LocationId = std::int32_t;

inline constexpr TrainId kNoTrain = -1;
inline constexpr LocationId kNoLocation = -1;

inline constexpr double kMinutesPerDay = 1440.0;

// Raised for malformed or inconsistent scenario input.
class ConfigError : public std::runtime_error
{
 public:
  using std::runtime_error::runtime_error;
};

// Raised for malformed operational data (CSV schema violations and the like).
class DataError : public std::runtime_error
{
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an input or output file cannot be read or written.
class IoError : public std::runtime_error
{
 public:
  using std::runtime_error::runtime_error;
};

// Raised when the simulation reaches a state the lifecycle rules forbid.
// Always an engine bug, never a user error.
class LifecycleError : public std::logic_error
{
 public:
  using std::logic_error::logic_error;
};

enum class TrainCategory : std::uint8_t
{
  dedicated,
  split,
  non_stevedore,
};

enum class TerminalKind : std::uint8_t
{
  stevedore,
  empty_park,
};

std::string_view to_string(TrainCategory c) noexcept;
std::optional<TrainCategory> train_category_from_string(std::string_view s) noexcept;
std::string_view to_string(TerminalKind k) noexcept;

}  // namespace portrail
