#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "portrail/sim/engine.hpp"

namespace portrail::sim
{
// Decides whether a train of a given length fits in a resource's current
// state. Implementations own the occupancy bookkeeping.
class AdmissionPolicy
{
 public:
  virtual ~AdmissionPolicy() = default;

  virtual bool fits(double length_m) const = 0;
  // False when no state of the resource could ever host the train.
  virtual bool can_ever_fit(double length_m) const = 0;
  virtual void admit(TrainId train, double length_m) = 0;
  virtual void remove(TrainId train) = 0;
  virtual int used_units() const = 0;
  virtual int capacity_units() const = 0;
};

// At most `capacity` trains regardless of length.
class CountPolicy final : public AdmissionPolicy
{
 public:
  explicit CountPolicy(int capacity);

  bool fits(double) const override { return static_cast<int>(occupants_.size()) < capacity_; }
  bool can_ever_fit(double) const override { return capacity_ > 0; }
  void admit(TrainId train, double) override { occupants_.push_back(train); }
  void remove(TrainId train) override;
  int used_units() const override { return static_cast<int>(occupants_.size()); }
  int capacity_units() const override { return capacity_; }

 private:
  int capacity_;
  std::vector<TrainId> occupants_;
};

// Occupants' summed length stays within a budget in metres.
class LengthBudgetPolicy final : public AdmissionPolicy
{
 public:
  explicit LengthBudgetPolicy(double budget_m);

  bool fits(double length_m) const override { return used_m_ + length_m <= budget_m_; }
  bool can_ever_fit(double length_m) const override { return length_m <= budget_m_; }
  void admit(TrainId train, double length_m) override;
  void remove(TrainId train) override;
  int used_units() const override { return static_cast<int>(occupants_.size()); }
  int capacity_units() const override { return 0; }
  double used_m() const noexcept { return used_m_; }

 private:
  double budget_m_;
  double used_m_ = 0.0;
  std::vector<std::pair<TrainId, double>> occupants_;
};

// A queue node of the corridor: grants in FIFO order (or by an explicit
// priority key, ties FIFO) and never lets a waiter jump the head of the line.
class CapacitatedResource
{
 public:
  CapacitatedResource(Simulator& sim, LocationId id, std::string name,
                      std::unique_ptr<AdmissionPolicy> policy);

  CapacitatedResource(const CapacitatedResource&) = delete;
  CapacitatedResource& operator=(const CapacitatedResource&) = delete;

  // Grants immediately when nothing is waiting and the policy admits the
  // train, otherwise enqueues. `on_grant` always runs as a separate kernel
  // event at the grant time. Returns true for an immediate grant.
  bool acquire(TrainId train, double length_m, std::function<void()> on_grant,
               double priority = 0.0);
  void release(TrainId train);

  bool holds(TrainId train) const;
  bool is_waiting(TrainId train) const;
  std::size_t occupant_count() const noexcept { return occupants_.size(); }
  std::size_t waiting_count() const noexcept { return waiters_.size(); }
  const std::vector<TrainId>& occupants() const noexcept { return occupants_; }
  const AdmissionPolicy& policy() const noexcept { return *policy_; }

  LocationId id() const noexcept { return id_; }
  const std::string& name() const noexcept { return name_; }
  std::uint64_t grants() const noexcept { return grants_; }

 private:
  struct Waiter
  {
    TrainId train;
    double length_m;
    double priority;
    std::uint64_t order;
    std::function<void()> on_grant;
  };

  void grant(Waiter w);
  void grant_waiters();

  Simulator& sim_;
  LocationId id_;
  std::string name_;
  std::unique_ptr<AdmissionPolicy> policy_;
  std::vector<TrainId> occupants_;
  std::deque<Waiter> waiters_;  // kept sorted by (priority, order)
  std::uint64_t next_order_ = 0;
  std::uint64_t grants_ = 0;
};

}  // namespace portrail::sim
