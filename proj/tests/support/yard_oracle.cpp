#include "yard_oracle.hpp"

#include <cstddef>

namespace portrail::testing
{
namespace
{
bool place(const std::vector<double>& trains, std::size_t i, const std::vector<double>& roads,
           std::vector<int>& used)
{
  if (i == trains.size()) return true;
  for (std::size_t r = 0; r < roads.size(); ++r) {
    int need = 0;
    if (trains[i] <= roads[r] / 2.0) need = 1;
    else if (trains[i] <= roads[r]) need = 2;
    if (need == 0 || used[r] + need > 2) continue;
    used[r] += need;
    const bool ok = place(trains, i + 1, roads, used);
    used[r] -= need;
    if (ok) return true;
  }
  return false;
}
}  // namespace

bool packing_feasible(const std::vector<double>& train_lengths, const std::vector<double>& roads)
{
  std::vector<int> used(roads.size(), 0);
  return place(train_lengths, 0, roads, used);
}

}  // namespace portrail::testing
