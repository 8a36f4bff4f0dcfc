#ifndef LORASIM_DEVICE_HPP
#define LORASIM_DEVICE_HPP

#include <cstdint>

#include "phy.hpp"
#include "rng.hpp"

namespace lorasim {

/// Class A MAC settings shared by every device in a run.
struct MacConfig {
  bool confirmed = false;
  int max_tx_unconfirmed = 1;  // copies sent per application packet
  int max_tx_confirmed = 8;    // total attempts including the first
  double recv_delay1_s = 1.0;
  double recv_delay2_s = 2.0;  // must stay recv_delay1_s + 1
  double ul_duty_cycle = 0.01;
  int initial_sf = 12;
};

void validate(const MacConfig& config);

enum class MacState : std::uint8_t {
  kIdle,          // no frame cycle active, queue empty
  kDutyWait,      // next transmission scheduled, waiting on the duty timer
  kTransmitting,  // frame on the air
  kWaitRx1,       // frame ended, first window not yet open
  kRx1Open,       // listening to an ACK in the first window
  kWaitRx2,       // first window silent, second not yet open
  kRx2Open,       // listening to an ACK in the second window
};

/// One end device. The engine owns the event flow; this is the state it
/// threads through, plus the per-frame counters the MAC rules need.
struct Device {
  int id = 0;
  double x_m = 0.0;
  double y_m = 0.0;
  double distance_m = 0.0;

  MacState state = MacState::kIdle;
  std::uint32_t next_fcnt = 0;
  int queued_packets = 0;
  double duty_free_at_s = 0.0;

  // The frame cycle in progress. fcnt stays fixed across retransmissions.
  std::uint32_t fcnt = 0;
  int attempt = 0;
  int sf = 12;
  int channel = 0;
  std::int64_t air_id = -1;
  double tx_start_s = 0.0;
  double airtime_s = 0.0;

  Rng channel_rng{0};
  Rng backoff_rng{0};
};

/// Spreading factor used on the given confirmed attempt (1-based): one step
/// up after every two attempts, never past SF12.
int sf_for_attempt(int initial_sf, int attempt);

/// Channel for a confirmed retransmission: uniform over the other channels,
/// or the same one when the plan has no alternative.
int hop_channel(int last_channel, int channel_count, Rng& rng);

/// Channel for a fresh frame or an unconfirmed repeat: uniform over all.
int pick_channel(int channel_count, Rng& rng);

}  // namespace lorasim

#endif
