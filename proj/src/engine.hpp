#ifndef LORASIM_ENGINE_HPP
#define LORASIM_ENGINE_HPP

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "channel_plan.hpp"
#include "device.hpp"
#include "gateway.hpp"
#include "medium.hpp"
#include "metrics.hpp"
#include "phy.hpp"
#include "traffic.hpp"

namespace lorasim {

enum class EventKind : std::uint8_t {
  kAppArrival,
  kTxStart,
  kTxEnd,
  kRxWindowOpen,
  kRxWindowClose,
  kAckTxStart,
  kAckTxEnd,
};

enum class TraceOutcome : std::uint8_t {
  kNone,
  kReceived,
  kLostCollision,
  kLostSensitivity,
  kDelivered,
  kMissed,
};

/// One dispatched event, as written to the trace. Channel and sf are -1
/// where the event has no radio coordinates.
struct TraceRow {
  double time_s;
  std::uint64_t seq;
  EventKind kind;
  int subject;
  int channel;
  int sf;
  TraceOutcome outcome;
};

/// Everything one run needs. Devices share the MAC/link configuration and
/// differ only in position and RNG streams.
struct SimParams {
  double duration_s = 86400.0;
  std::uint64_t seed = 1;
  int channels = 1;  // uplink channels sharing the sub-band budget
  MacConfig mac;
  MediumParams medium;
  phy::LinkBudget budget;
  phy::PhyParams phy;  // sf is overwritten per transmission
  double lambda_pps = 0.0;
  int pre_queued_packets = 0;  // handed to every device at time zero
  int data_payload_bytes = kDataPayloadBytes;
  int ack_payload_bytes = kAckPayloadBytes;
  double rx1_ack_power_dbm = 14.0;
  double rx2_ack_power_dbm = 27.0;  // the reserved channel allows more
  double dl_duty_cycle = 0.10;
  std::vector<std::pair<double, double>> positions_m;
  bool record_trace = false;
};

void validate(const SimParams& params);

/// Discrete-event run over [0, duration). Events execute in (time, insertion
/// order); a fixed seed replays the identical event stream.
class Simulation {
 public:
  explicit Simulation(const SimParams& params);

  /// Run to completion. Call once.
  const MetricsLedger& run();

  const MetricsLedger& ledger() const { return ledger_; }
  const std::vector<TraceRow>& trace() const { return trace_; }
  const std::vector<Device>& devices() const { return devices_; }

 private:
  struct Event {
    double time_s;
    std::uint64_t seq;
    EventKind kind;
    int subject;
    int window;  // receive-window events: 1 or 2
  };
  struct EventAfter {
    bool operator()(const Event& a, const Event& b) const {
      if (a.time_s != b.time_s) return a.time_s > b.time_s;
      return a.seq > b.seq;
    }
  };

  void schedule(double time_s, EventKind kind, int subject, int window = 0);
  void dispatch(const Event& ev);

  void on_app_arrival(int device, double now);
  void on_tx_start(int device, double now);
  void on_tx_end(int device, double now);
  void on_rx_window_open(int device, int window, double now);
  void on_rx_window_close(int device, int window, double now);
  void on_ack_tx_start(int device, double now);
  void on_ack_tx_end(int device, double now);

  void start_cycle(Device& dev, double now);
  void finish_cycle(Device& dev, double now);
  void try_plan_ack(const Device& dev, double ul_end_s);

  double data_airtime(int sf) const;
  double ack_airtime(int sf) const;
  double ul_power_at_gw(const Device& dev) const;
  bool ack_receivable(const Device& dev, int sf, double tx_power_dbm) const;
  void record(double t, EventKind kind, int subject, int channel, int sf,
              TraceOutcome outcome);

  SimParams params_;
  ChannelPlan plan_;
  Medium medium_;
  Gateway gateway_;
  MetricsLedger ledger_;
  std::vector<Device> devices_;
  std::vector<ArrivalProcess> arrivals_;
  std::priority_queue<Event, std::vector<Event>, EventAfter> queue_;
  std::uint64_t next_seq_ = 0;
  std::vector<TraceRow> trace_;
  bool ran_ = false;
};

}  // namespace lorasim

#endif
