#include "portrail/sim/resource.hpp"

#include <algorithm>
#include <sstream>

namespace portrail::sim
{
CountPolicy::CountPolicy(int capacity) : capacity_(capacity)
{
  if (capacity < 1) throw ConfigError("count-based resource needs capacity >= 1");
}

void CountPolicy::remove(TrainId train)
{
  auto it = std::find(occupants_.begin(), occupants_.end(), train);
  if (it != occupants_.end()) occupants_.erase(it);
}

LengthBudgetPolicy::LengthBudgetPolicy(double budget_m) : budget_m_(budget_m)
{
  if (!(budget_m > 0.0)) throw ConfigError("length-budget resource needs a positive budget");
}

void LengthBudgetPolicy::admit(TrainId train, double length_m)
{
  occupants_.emplace_back(train, length_m);
  used_m_ += length_m;
}

void LengthBudgetPolicy::remove(TrainId train)
{
  auto it = std::find_if(occupants_.begin(), occupants_.end(),
                         [train](const auto& o) { return o.first == train; });
  if (it == occupants_.end()) return;
  used_m_ -= it->second;
  occupants_.erase(it);
  if (occupants_.empty()) used_m_ = 0.0;
}

CapacitatedResource::CapacitatedResource(Simulator& sim, LocationId id, std::string name,
                                         std::unique_ptr<AdmissionPolicy> policy)
    : sim_(sim), id_(id), name_(std::move(name)), policy_(std::move(policy))
{
}

bool CapacitatedResource::holds(TrainId train) const
{
  return std::find(occupants_.begin(), occupants_.end(), train) != occupants_.end();
}

bool CapacitatedResource::is_waiting(TrainId train) const
{
  return std::any_of(waiters_.begin(), waiters_.end(),
                     [train](const Waiter& w) { return w.train == train; });
}

bool CapacitatedResource::acquire(TrainId train, double length_m, std::function<void()> on_grant,
                                  double priority)
{
  if (holds(train) || is_waiting(train)) {
    std::ostringstream msg;
    msg << "train " << train << " acquired " << name_ << " twice";
    throw LifecycleError(msg.str());
  }
  if (!policy_->can_ever_fit(length_m)) {
    std::ostringstream msg;
    msg << "train " << train << " (" << length_m << " m) can never fit in " << name_;
    throw ConfigError(msg.str());
  }
  sim_.record(EventKind::resource_request, train, id_);
  Waiter w{train, length_m, priority, next_order_++, std::move(on_grant)};
  if (waiters_.empty() && policy_->fits(length_m)) {
    grant(std::move(w));
    return true;
  }
  auto pos = std::upper_bound(waiters_.begin(), waiters_.end(), w,
                              [](const Waiter& a, const Waiter& b) {
                                if (a.priority != b.priority) return a.priority < b.priority;
                                return a.order < b.order;
                              });
  waiters_.insert(pos, std::move(w));
  const bool at_head = waiters_.front().train == train;
  grant_waiters();
  return at_head && holds(train);
}

void CapacitatedResource::grant(Waiter w)
{
  policy_->admit(w.train, w.length_m);
  occupants_.push_back(w.train);
  ++grants_;
  sim_.record(EventKind::resource_grant, w.train, id_, static_cast<std::int32_t>(occupants_.size()));
  sim_.schedule(sim_.now(), EventKind::internal, w.train, id_, std::move(w.on_grant));
}

void CapacitatedResource::release(TrainId train)
{
  auto it = std::find(occupants_.begin(), occupants_.end(), train);
  if (it == occupants_.end()) {
    std::ostringstream msg;
    msg << "train " << train << " released " << name_ << " without holding it";
    throw LifecycleError(msg.str());
  }
  occupants_.erase(it);
  policy_->remove(train);
  sim_.record(EventKind::resource_release, train, id_, static_cast<std::int32_t>(occupants_.size()));
  grant_waiters();
}

void CapacitatedResource::grant_waiters()
{
  while (!waiters_.empty() && policy_->fits(waiters_.front().length_m)) {
    Waiter w = std::move(waiters_.front());
    waiters_.pop_front();
    grant(std::move(w));
  }
}

}  // namespace portrail::sim
