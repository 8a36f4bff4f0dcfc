#include "metrics.hpp"

#include <numeric>
#include <ostream>

namespace lorasim {

std::int64_t MetricsLedger::total_app_sent() const {
  return std::accumulate(devices_.begin(), devices_.end(), std::int64_t{0},
                         [](std::int64_t s, const DeviceCounters& d) {
                           return s + d.app_sent;
                         });
}

std::int64_t MetricsLedger::total_app_delivered() const {
  return std::accumulate(devices_.begin(), devices_.end(), std::int64_t{0},
                         [](std::int64_t s, const DeviceCounters& d) {
                           return s + d.app_delivered;
                         });
}

std::int64_t MetricsLedger::total_mac_sent() const {
  return std::accumulate(devices_.begin(), devices_.end(), std::int64_t{0},
                         [](std::int64_t s, const DeviceCounters& d) {
                           return s + d.mac_sent;
                         });
}

std::int64_t MetricsLedger::total_mac_received() const {
  return std::accumulate(devices_.begin(), devices_.end(), std::int64_t{0},
                         [](std::int64_t s, const DeviceCounters& d) {
                           return s + d.mac_received;
                         });
}

namespace metrics {

namespace {

double require_duration(const MetricsLedger& ledger) {
  const double t = ledger.duration_s();
  if (t <= 0.0)
    throw ConfigError("metrics need a positive run duration");
  return t;
}

}  // namespace

double sub_band_load(const MetricsLedger& ledger) {
  const double t = require_duration(ledger);
  double airtime = 0.0;
  for (const auto& d : ledger.devices()) airtime += d.tx_airtime_s;
  return airtime / (ledger.sub_band_channels() * t);
}

double sub_band_utilization(const MetricsLedger& ledger) {
  const double t = require_duration(ledger);
  double airtime = 0.0;
  for (const auto& d : ledger.devices()) airtime += d.received_airtime_s;
  return airtime / (ledger.sub_band_channels() * t);
}

double pdr(const MetricsLedger& ledger, std::ostream* warnings) {
  double sum = 0.0;
  int counted = 0;
  int device = 0;
  for (const auto& d : ledger.devices()) {
    if (d.app_sent > 0) {
      sum += static_cast<double>(d.app_delivered) /
             static_cast<double>(d.app_sent);
      counted++;
    } else if (warnings) {
      *warnings << "device " << device
                << " sent no application packets, excluded from PDR\n";
    }
    device++;
  }
  if (counted == 0)
    throw ConfigError("no device sent an application packet");
  return sum / counted;
}

double ul_throughput_bps(const MetricsLedger& ledger) {
  const double t = require_duration(ledger);
  std::int64_t bits = 0;
  for (const auto& d : ledger.devices()) bits += d.payload_bits_delivered;
  return static_cast<double>(bits) / t;
}

double oracle_sending_rate(double lambda_pps, double airtime_s, double duty,
                           double attempts) {
  if (airtime_s <= 0.0)
    throw ConfigError("airtime_s must be positive");
  if (duty <= 0.0)
    throw ConfigError("duty must be positive");
  if (attempts < 1.0)
    throw ConfigError("attempts must be at least 1");
  const double saturation_rate = duty / airtime_s;
  if (lambda_pps >= saturation_rate / attempts) return saturation_rate;
  return lambda_pps * attempts;
}

}  // namespace metrics
}  // namespace lorasim
