#ifndef LORASIM_CHANNEL_PLAN_HPP
#define LORASIM_CHANNEL_PLAN_HPP

#include <array>
#include <string>
#include <vector>

#include "phy.hpp"

namespace lorasim {

// EU868 sub-band frequencies in MHz. The first three are the mandatory
// join channels; the rest fill out the 1% sub-band up to seven channels.
inline constexpr std::array<double, 7> kUplinkFrequenciesMhz = {
    868.1, 868.3, 868.5, 867.1, 867.3, 867.5, 867.7};

constexpr double kRx2FrequencyMhz = 869.525;
constexpr int kRx2Sf = 12;

/// The set of uplink channels a deployment uses, plus the fixed second
/// receive-window channel. Channel indices 0..count-1 are uplink channels;
/// index count refers to the RX2 channel.
class ChannelPlan {
 public:
  explicit ChannelPlan(int uplink_channels) {
    if (uplink_channels < 1 ||
        uplink_channels > static_cast<int>(kUplinkFrequenciesMhz.size()))
      throw ConfigError("channels must be in [1,7], got " +
                        std::to_string(uplink_channels));
    count_ = uplink_channels;
  }

  int uplink_count() const { return count_; }
  int rx2_channel() const { return count_; }

  double frequency_mhz(int channel) const {
    if (channel == count_) return kRx2FrequencyMhz;
    return kUplinkFrequenciesMhz.at(static_cast<std::size_t>(channel));
  }

 private:
  int count_;
};

}  // namespace lorasim

#endif
