#ifndef LORASIM_MEDIUM_HPP
#define LORASIM_MEDIUM_HPP

#include <cstdint>
#include <vector>

#include "frame.hpp"
#include "phy.hpp"

namespace lorasim {

enum class Direction : std::uint8_t { kUp, kDown };

enum class ReceptionOutcome : std::uint8_t {
  kReceived,
  kLostCollision,
  kLostSensitivity,
};

/// A frame currently on the air. Power is what the gateway hears: the
/// link-budget value for uplink, the raw transmit power for the gateway's
/// own downlink (it interferes with co-channel uplink at full strength).
struct ActiveTransmission {
  std::int64_t id = -1;
  Frame frame;
  Direction direction = Direction::kUp;
  int channel = 0;
  int sf = 12;
  double power_at_gw_dbm = 0.0;
  double start_s = 0.0;
  double end_s = 0.0;
};

struct MediumParams {
  int bandwidth_hz = 125000;
  double noise_figure_db = 6.0;
  // Co-channel same-SF power margin needed to survive an overlap. Zero
  // means the strictly stronger frame always captures; either way equal
  // powers destroy both.
  double capture_threshold_db = 0.0;
};

/// True when the two intervals share interior time. Touching endpoints do
/// not overlap, so a window opening exactly when a frame ends is clear.
inline bool intervals_overlap(double s1, double e1, double s2, double e2) {
  return s1 < e2 && s2 < e1;
}

/// Pure form of the capture rule: decides one transmission's fate against
/// a candidate set. Different channels or SFs never interfere.
ReceptionOutcome resolve_reception(const ActiveTransmission& tx,
                                   const std::vector<ActiveTransmission>& others,
                                   const MediumParams& params);

/// Shared radio medium. Tracks in-flight transmissions incrementally: each
/// carries the strongest co-channel same-SF power overlapping its lifetime,
/// which yields the same outcome as the pure pairwise rule.
class Medium {
 public:
  explicit Medium(const MediumParams& params) : params_(params) {}

  struct EndResult {
    ReceptionOutcome outcome;
    double strongest_interferer_dbm;  // -inf when the frame flew alone
  };

  /// Admit a transmission to the air. Returns its id.
  std::int64_t begin(const Frame& frame, Direction direction, int channel,
                     int sf, double power_at_gw_dbm, double start_s,
                     double end_s);

  /// Remove a transmission and report how the gateway heard it.
  EndResult end(std::int64_t id);

  /// True when any in-flight transmission on (channel, sf) overlaps the
  /// interval. Used when probing whether a receive window is clear.
  bool busy(int channel, int sf, double start_s, double end_s) const;

  /// Same probe restricted to one traffic direction. The gateway schedules
  /// downlink around its own transmissions only; it does not carrier-sense
  /// uplink frames in flight.
  bool busy(int channel, int sf, double start_s, double end_s,
            Direction direction) const;

  int in_flight_count() const { return static_cast<int>(active_.size()); }
  const MediumParams& params() const { return params_; }

  /// Snapshot of the in-flight set, for cross-checking against the pure rule.
  std::vector<ActiveTransmission> in_flight() const;

 private:
  struct Record {
    ActiveTransmission tx;
    double max_interferer_dbm;
  };

  MediumParams params_;
  std::vector<Record> active_;
  std::int64_t next_id_ = 0;
};

}  // namespace lorasim

#endif
