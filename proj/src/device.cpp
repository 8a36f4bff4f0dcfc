#include "device.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lorasim {

void validate(const MacConfig& config) {
  if (config.max_tx_unconfirmed < 1)
    throw ConfigError("max_tx_unconfirmed must be at least 1");
  if (config.max_tx_confirmed < 1)
    throw ConfigError("max_tx_confirmed must be at least 1");
  if (config.recv_delay1_s <= 0.0)
    throw ConfigError("recv_delay1_s must be positive");
  if (std::abs(config.recv_delay2_s - (config.recv_delay1_s + 1.0)) > 1e-9)
    throw ConfigError("recv_delay2_s must equal recv_delay1_s + 1");
  if (config.ul_duty_cycle <= 0.0 || config.ul_duty_cycle > 1.0)
    throw ConfigError("ul_duty_cycle must be in (0,1]");
  if (config.initial_sf < phy::kMinSf || config.initial_sf > phy::kMaxSf)
    throw ConfigError("initial_sf must be in [7,12], got " +
                      std::to_string(config.initial_sf));
}

int sf_for_attempt(int initial_sf, int attempt) {
  if (attempt < 1) throw ConfigError("attempt numbering starts at 1");
  return std::min(phy::kMaxSf, initial_sf + (attempt - 1) / 2);
}

int hop_channel(int last_channel, int channel_count, Rng& rng) {
  if (channel_count == 1) return last_channel;
  int pick = static_cast<int>(
      rng.next_below(static_cast<std::uint64_t>(channel_count - 1)));
  return pick >= last_channel ? pick + 1 : pick;
}

int pick_channel(int channel_count, Rng& rng) {
  return static_cast<int>(
      rng.next_below(static_cast<std::uint64_t>(channel_count)));
}

}  // namespace lorasim
