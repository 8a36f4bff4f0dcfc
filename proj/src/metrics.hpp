#ifndef LORASIM_METRICS_HPP
#define LORASIM_METRICS_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "phy.hpp"

namespace lorasim {

/// Counters for one device over a run. Airtimes are realized seconds on
/// the air, so load and utilization stay meaningful under mixed saturation.
struct DeviceCounters {
  std::int64_t app_generated = 0;   // packets the application handed down
  std::int64_t app_sent = 0;        // packets whose first MAC copy started
  std::int64_t app_delivered = 0;   // packets the server saw at least once
  std::int64_t mac_sent = 0;        // every MAC transmission, retries included
  std::int64_t mac_received = 0;    // MAC receptions, duplicates included
  double tx_airtime_s = 0.0;
  double received_airtime_s = 0.0;
  std::int64_t payload_bits_delivered = 0;
};

/// Run-wide tally the engine fills in and the reporters read out.
class MetricsLedger {
 public:
  MetricsLedger(int device_count, int sub_band_channels, double duty_cycle)
      : devices_(device_count), sub_band_channels_(sub_band_channels),
        duty_cycle_(duty_cycle) {
    if (device_count < 1)
      throw ConfigError("device_count must be positive");
    if (sub_band_channels < 1)
      throw ConfigError("sub_band_channels must be positive");
  }

  void record_app_generated(int device) { at(device).app_generated++; }
  void record_app_sent(int device) { at(device).app_sent++; }
  void record_app_delivered(int device, int payload_bits) {
    at(device).app_delivered++;
    at(device).payload_bits_delivered += payload_bits;
  }
  void record_mac_sent(int device, double airtime_s) {
    at(device).mac_sent++;
    at(device).tx_airtime_s += airtime_s;
  }
  void record_mac_received(int device, double airtime_s) {
    at(device).mac_received++;
    at(device).received_airtime_s += airtime_s;
  }
  void record_ack_sent() { acks_sent_++; }

  void set_duration(double seconds) { duration_s_ = seconds; }

  const std::vector<DeviceCounters>& devices() const { return devices_; }
  double duration_s() const { return duration_s_; }
  int sub_band_channels() const { return sub_band_channels_; }
  double duty_cycle() const { return duty_cycle_; }
  std::int64_t acks_sent() const { return acks_sent_; }

  std::int64_t total_app_sent() const;
  std::int64_t total_app_delivered() const;
  std::int64_t total_mac_sent() const;
  std::int64_t total_mac_received() const;

 private:
  DeviceCounters& at(int device) {
    return devices_.at(static_cast<std::size_t>(device));
  }

  std::vector<DeviceCounters> devices_;
  int sub_band_channels_;
  double duty_cycle_;
  double duration_s_ = 0.0;
  std::int64_t acks_sent_ = 0;
};

namespace metrics {

/// Fraction of the sub-band's airtime capacity spent transmitting:
/// the summed uplink airtime over m_c channel-durations. Can exceed 1.
double sub_band_load(const MetricsLedger& ledger);

/// Same ratio restricted to frames the gateway demodulated, duplicates
/// included. Never exceeds the load.
double sub_band_utilization(const MetricsLedger& ledger);

/// Mean over devices of delivered/sent application packets. Devices that
/// never sent are excluded; each exclusion writes a line to `warnings`
/// when a stream is given.
double pdr(const MetricsLedger& ledger, std::ostream* warnings = nullptr);

/// Unique delivered application payload bits per second of simulated time.
double ul_throughput_bps(const MetricsLedger& ledger);

/// Closed-form per-device frame rate: the offered rate lambda * attempts,
/// clipped at the duty-cycle ceiling duty/airtime once the queue saturates.
double oracle_sending_rate(double lambda_pps, double airtime_s, double duty,
                           double attempts);

}  // namespace metrics
}  // namespace lorasim

#endif
