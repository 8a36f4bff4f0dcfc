#include "gateway.hpp"

#include <algorithm>

#include "medium.hpp"
#include "phy.hpp"

namespace lorasim {

Gateway::Gateway(int device_count, double dl_duty_cycle)
    : dl_duty_cycle_(dl_duty_cycle),
      last_delivered_fcnt_(static_cast<std::size_t>(device_count), -1),
      fcnt_down_(static_cast<std::size_t>(device_count), 0) {
  if (device_count < 1)
    throw ConfigError("device_count must be positive");
  if (dl_duty_cycle <= 0.0 || dl_duty_cycle > 1.0)
    throw ConfigError("dl_duty_cycle must be in (0,1]");
}

bool Gateway::deliver_if_new(int device, std::uint32_t fcnt) {
  auto& last = last_delivered_fcnt_.at(static_cast<std::size_t>(device));
  if (last >= static_cast<std::int64_t>(fcnt)) return false;
  last = static_cast<std::int64_t>(fcnt);
  return true;
}

std::optional<AckPlan> Gateway::plan_ack(
    int device, const std::vector<WindowParams>& windows,
    const std::function<bool(int, int, double, double)>& occupied) {
  for (const auto& w : windows) {
    if (w.start_s < dl_duty_free_at_s_) continue;
    const double end = w.start_s + w.airtime_s;
    if (occupied(w.channel, w.sf, w.start_s, end)) continue;
    if (ack_occupies(w.channel, w.sf, w.start_s, end)) continue;

    AckPlan plan;
    plan.destination = device;
    plan.window = w.window;
    plan.start_s = w.start_s;
    plan.end_s = end;
    plan.channel = w.channel;
    plan.sf = w.sf;
    plan.tx_power_dbm = w.tx_power_dbm;
    dl_duty_free_at_s_ = w.start_s + w.airtime_s / dl_duty_cycle_;
    acks_.push_back(plan);
    return plan;
  }
  return std::nullopt;
}

AckPlan* Gateway::ack_starting(int device, double now_s) {
  for (auto& a : acks_)
    if (a.destination == device && a.start_s == now_s) return &a;
  return nullptr;
}

AckPlan* Gateway::ack_ending(int device, double now_s) {
  for (auto& a : acks_)
    if (a.destination == device && a.end_s == now_s) return &a;
  return nullptr;
}

void Gateway::retire_ack(const AckPlan* plan) {
  acks_.erase(std::remove_if(acks_.begin(), acks_.end(),
                             [plan](const AckPlan& a) { return &a == plan; }),
              acks_.end());
}

bool Gateway::ack_occupies(int channel, int sf, double start_s,
                           double end_s) const {
  return std::any_of(acks_.begin(), acks_.end(), [&](const AckPlan& a) {
    return a.channel == channel && a.sf == sf &&
           intervals_overlap(a.start_s, a.end_s, start_s, end_s);
  });
}

std::uint32_t Gateway::next_fcnt_down(int device) {
  return fcnt_down_.at(static_cast<std::size_t>(device))++;
}

}  // namespace lorasim
