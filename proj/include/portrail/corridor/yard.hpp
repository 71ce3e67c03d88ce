#pragma once

#include <optional>
#include <string>
#include <vector>

#include "portrail/core/types.hpp"
#include "portrail/sim/resource.hpp"

namespace portrail::corridor
{
// A staging yard made of parallel roads. Each road is split into two slots:
// a train no longer than half the road takes one slot, a longer train (up to
// the full road) takes the whole road. Botany Yard's 1300m roads therefore
// hold two trains of 650m or less, or one longer train.
struct YardSpec
{
  std::string name;
  std::vector<double> roads;  // road lengths in metres

  int capacity_slots() const noexcept { return 2 * static_cast<int>(roads.size()); }
};

// Slots a train needs on a road of the given length: 1, 2, or 0 if it
// cannot stand on that road at all.
int slots_needed(double road_length_m, double train_length_m) noexcept;

class YardState
{
 public:
  explicit YardState(YardSpec spec);

  bool can_admit(double train_length_m) const;
  bool can_ever_admit(double train_length_m) const;
  // Places the train with a best-fit rule (complete a half-used road before
  // opening an empty one). Returns the road index, or nullopt on rejection.
  std::optional<int> admit(TrainId train, double train_length_m);
  void release(TrainId train);

  int used_slots() const noexcept;
  int capacity_slots() const noexcept { return spec_.capacity_slots(); }
  std::size_t train_count() const noexcept;
  const YardSpec& spec() const noexcept { return spec_; }

 private:
  struct Placement
  {
    TrainId train;
    int slots;
  };
  struct Road
  {
    double length_m;
    std::vector<Placement> trains;
    int used = 0;
  };

  std::optional<int> choose_road(double train_length_m) const;

  YardSpec spec_;
  std::vector<Road> roads_;
};

// Convenience wrapper mirroring the admission decision a staging movement
// makes: admit when some road can host the train, otherwise reject and leave
// the state untouched.
bool yard_admit(YardState& yard, TrainId train, double train_length_m);

// Adapts a YardState to the kernel's capacitated-resource interface.
class YardPolicy final : public sim::AdmissionPolicy
{
 public:
  explicit YardPolicy(YardSpec spec) : state_(std::move(spec)) {}

  bool fits(double length_m) const override { return state_.can_admit(length_m); }
  bool can_ever_fit(double length_m) const override { return state_.can_ever_admit(length_m); }
  void admit(TrainId train, double length_m) override;
  void remove(TrainId train) override { state_.release(train); }
  int used_units() const override { return state_.used_slots(); }
  int capacity_units() const override { return state_.capacity_slots(); }
  const YardState& state() const noexcept { return state_; }

 private:
  YardState state_;
};

}  // namespace portrail::corridor
