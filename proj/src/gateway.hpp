#ifndef LORASIM_GATEWAY_HPP
#define LORASIM_GATEWAY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "frame.hpp"

namespace lorasim {

/// An acknowledgement the server has committed to. The downlink duty
/// budget is reserved the moment the plan is made, so a later confirmed
/// frame cannot double-book the transmitter.
struct AckPlan {
  int destination = -1;
  int window = 1;  // 1 or 2
  double start_s = 0.0;
  double end_s = 0.0;
  int channel = 0;
  int sf = 12;
  double tx_power_dbm = 14.0;
  bool receivable = false;  // above sensitivity at the destination
  std::int64_t air_id = -1;
};

/// Gateway plus network server: deduplicates uplink frames per device and
/// plans ACKs into the first free receive window, if any.
class Gateway {
 public:
  explicit Gateway(int device_count, double dl_duty_cycle);

  /// True exactly once per (device, fcnt): the application-layer delivery.
  bool deliver_if_new(int device, std::uint32_t fcnt);

  struct WindowParams {
    int window;
    double start_s;
    double airtime_s;
    int channel;
    int sf;
    double tx_power_dbm;
  };

  /// Pick the first of the offered windows that respects the downlink duty
  /// budget and whose (channel, sf) is quiet for the whole ACK, reserving
  /// the budget on success. `occupied` reports foreign transmissions.
  std::optional<AckPlan> plan_ack(
      int device, const std::vector<WindowParams>& windows,
      const std::function<bool(int channel, int sf, double start_s,
                               double end_s)>& occupied);

  /// The plan whose transmission starts exactly now for this device.
  AckPlan* ack_starting(int device, double now_s);
  /// The plan whose transmission ends exactly now for this device.
  AckPlan* ack_ending(int device, double now_s);
  void retire_ack(const AckPlan* plan);

  /// True when one of this gateway's own planned or in-flight ACKs covers
  /// any part of the interval on (channel, sf).
  bool ack_occupies(int channel, int sf, double start_s, double end_s) const;

  std::uint32_t next_fcnt_down(int device);

  double dl_duty_free_at_s() const { return dl_duty_free_at_s_; }
  void set_dl_duty_free_at(double t) { dl_duty_free_at_s_ = t; }

 private:
  double dl_duty_cycle_;
  double dl_duty_free_at_s_ = 0.0;
  std::vector<std::int64_t> last_delivered_fcnt_;  // -1 = nothing yet
  std::vector<std::uint32_t> fcnt_down_;
  std::vector<AckPlan> acks_;
};

}  // namespace lorasim

#endif
