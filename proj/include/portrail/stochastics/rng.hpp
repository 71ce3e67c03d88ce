#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>

namespace portrail::stochastics
{
// One reproducible stream of uniforms. The engine algorithm is fixed by the
// standard and the conversions below are integer-exact, so a (seed, name)
// pair yields the same stream on every platform.
class RandomStream
{
 public:
  RandomStream(std::uint64_t seed, std::string_view name);

  std::uint64_t next_u64() { return engine_(); }
  // Uniform on [0, 1) with 53 bits of resolution.
  double uniform01();
  // Uniform integer on [lo, hi], unbiased.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

// Lazily created, independently seeded streams keyed by name, so adding a
// new random input never shifts the draws of an existing one.
class StreamSet
{
 public:
  explicit StreamSet(std::uint64_t seed) : seed_(seed) {}

  RandomStream& stream(const std::string& name);
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
  std::map<std::string, RandomStream> streams_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::string_view name) noexcept;

}  // namespace portrail::stochastics
