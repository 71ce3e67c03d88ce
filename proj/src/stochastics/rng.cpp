#include "portrail/stochastics/rng.hpp"

#include <limits>
#include <stdexcept>

namespace portrail::stochastics
{
namespace
{
std::uint64_t splitmix64(std::uint64_t x) noexcept
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) noexcept
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}
}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::string_view name) noexcept
{
  return splitmix64(splitmix64(seed) ^ fnv1a(name));
}

RandomStream::RandomStream(std::uint64_t seed, std::string_view name) : engine_(mix_seed(seed, name))
{
}

double RandomStream::uniform01()
{
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::int64_t RandomStream::uniform_int(std::int64_t lo, std::int64_t hi)
{
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

RandomStream& StreamSet::stream(const std::string& name)
{
  auto it = streams_.find(name);
  if (it == streams_.end()) it = streams_.emplace(name, RandomStream(seed_, name)).first;
  return it->second;
}

}  // namespace portrail::stochastics
