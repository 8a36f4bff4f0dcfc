#include "engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lorasim {

namespace {

constexpr std::uint64_t kPurposeArrivals = 0;
constexpr std::uint64_t kPurposeChannels = 1;
constexpr std::uint64_t kPurposeBackoff = 3;

// Retransmissions wait a further uniform 1..3 s past the earliest legal
// start, the standard retransmit-timeout spread, for confirmed retries and
// unconfirmed repeats alike. Without it, duty-limited devices that once
// collided would retry in lockstep indefinitely. Fresh frames start exactly
// on the duty timer.
constexpr double kRetryBackoffMinS = 1.0;
constexpr double kRetryBackoffSpanS = 2.0;

}  // namespace

void validate(const SimParams& params) {
  if (params.duration_s < 0.0)
    throw ConfigError("duration_s must be non-negative");
  if (params.positions_m.empty())
    throw ConfigError("positions_m must hold at least one device");
  if (params.lambda_pps < 0.0)
    throw ConfigError("lambda_pps must be non-negative");
  if (params.pre_queued_packets < 0)
    throw ConfigError("pre_queued_packets must be non-negative");
  if (params.data_payload_bytes < 1 ||
      params.data_payload_bytes > phy::kMaxPayloadBytes)
    throw ConfigError("data_payload_bytes must be in [1,255]");
  if (params.ack_payload_bytes < 1 ||
      params.ack_payload_bytes > phy::kMaxPayloadBytes)
    throw ConfigError("ack_payload_bytes must be in [1,255]");
  if (params.dl_duty_cycle <= 0.0 || params.dl_duty_cycle > 1.0)
    throw ConfigError("dl_duty_cycle must be in (0,1]");
  if (params.medium.bandwidth_hz != params.phy.bandwidth_hz)
    throw ConfigError("medium and phy bandwidth_hz must agree");
  validate(params.mac);
  phy::validate(params.phy);
  ChannelPlan check(params.channels);
}

Simulation::Simulation(const SimParams& params)
    : params_(params), plan_(params.channels), medium_(params.medium),
      gateway_(static_cast<int>(params.positions_m.size()),
               params.dl_duty_cycle),
      ledger_(static_cast<int>(params.positions_m.size()), params.channels,
              params.mac.ul_duty_cycle) {
  validate(params_);
  const int n = static_cast<int>(params_.positions_m.size());
  devices_.reserve(static_cast<std::size_t>(n));
  arrivals_.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Device dev;
    dev.id = i;
    dev.x_m = params_.positions_m[static_cast<std::size_t>(i)].first;
    dev.y_m = params_.positions_m[static_cast<std::size_t>(i)].second;
    dev.distance_m = std::hypot(dev.x_m, dev.y_m);
    dev.sf = params_.mac.initial_sf;
    dev.channel_rng =
        Rng(params_.seed, static_cast<std::uint64_t>(i), kPurposeChannels);
    dev.backoff_rng =
        Rng(params_.seed, static_cast<std::uint64_t>(i), kPurposeBackoff);
    devices_.push_back(dev);
    arrivals_.emplace_back(
        params_.lambda_pps,
        Rng(params_.seed, static_cast<std::uint64_t>(i), kPurposeArrivals));
  }
}

const MetricsLedger& Simulation::run() {
  if (ran_) throw ConfigError("a simulation can only run once");
  ran_ = true;

  for (auto& dev : devices_) {
    dev.queued_packets = params_.pre_queued_packets;
    if (dev.queued_packets > 0) start_cycle(dev, 0.0);
    double first = arrivals_[static_cast<std::size_t>(dev.id)].next_after(0.0);
    if (std::isfinite(first)) schedule(first, EventKind::kAppArrival, dev.id);
  }

  while (!queue_.empty() && queue_.top().time_s < params_.duration_s) {
    Event ev = queue_.top();
    queue_.pop();
    dispatch(ev);
  }
  ledger_.set_duration(params_.duration_s);
  return ledger_;
}

void Simulation::schedule(double time_s, EventKind kind, int subject,
                          int window) {
  queue_.push(Event{time_s, next_seq_++, kind, subject, window});
}

void Simulation::dispatch(const Event& ev) {
  switch (ev.kind) {
    case EventKind::kAppArrival: on_app_arrival(ev.subject, ev.time_s); break;
    case EventKind::kTxStart: on_tx_start(ev.subject, ev.time_s); break;
    case EventKind::kTxEnd: on_tx_end(ev.subject, ev.time_s); break;
    case EventKind::kRxWindowOpen:
      on_rx_window_open(ev.subject, ev.window, ev.time_s);
      break;
    case EventKind::kRxWindowClose:
      on_rx_window_close(ev.subject, ev.window, ev.time_s);
      break;
    case EventKind::kAckTxStart: on_ack_tx_start(ev.subject, ev.time_s); break;
    case EventKind::kAckTxEnd: on_ack_tx_end(ev.subject, ev.time_s); break;
  }
}

double Simulation::data_airtime(int sf) const {
  phy::PhyParams p = params_.phy;
  p.sf = sf;
  return phy::airtime_s(p, params_.data_payload_bytes);
}

double Simulation::ack_airtime(int sf) const {
  phy::PhyParams p = params_.phy;
  p.sf = sf;
  return phy::airtime_s(p, params_.ack_payload_bytes);
}

double Simulation::ul_power_at_gw(const Device& dev) const {
  return phy::received_power_dbm(params_.budget, dev.distance_m);
}

bool Simulation::ack_receivable(const Device& dev, int sf,
                                double tx_power_dbm) const {
  const double power =
      tx_power_dbm - phy::path_loss_db(params_.budget, dev.distance_m);
  return power >= phy::sensitivity_dbm(sf, params_.medium.bandwidth_hz,
                                       params_.medium.noise_figure_db);
}

void Simulation::record(double t, EventKind kind, int subject, int channel,
                        int sf, TraceOutcome outcome) {
  if (!params_.record_trace) return;
  // The seq written is the dispatch index so rows are totally ordered.
  trace_.push_back(TraceRow{t, static_cast<std::uint64_t>(trace_.size()), kind,
                            subject, channel, sf, outcome});
}

void Simulation::on_app_arrival(int device, double now) {
  Device& dev = devices_[static_cast<std::size_t>(device)];
  ledger_.record_app_generated(device);
  record(now, EventKind::kAppArrival, device, -1, -1, TraceOutcome::kNone);

  double next = arrivals_[static_cast<std::size_t>(device)].next_after(now);
  if (std::isfinite(next)) schedule(next, EventKind::kAppArrival, device);

  dev.queued_packets++;
  if (dev.state == MacState::kIdle) start_cycle(dev, now);
}

void Simulation::start_cycle(Device& dev, double now) {
  dev.queued_packets--;
  dev.fcnt = dev.next_fcnt++;
  dev.attempt = 0;
  dev.sf = params_.mac.initial_sf;
  dev.channel = pick_channel(params_.channels, dev.channel_rng);
  dev.state = MacState::kDutyWait;
  schedule(std::max(now, dev.duty_free_at_s), EventKind::kTxStart, dev.id);
}

void Simulation::finish_cycle(Device& dev, double now) {
  dev.state = MacState::kIdle;
  if (dev.queued_packets > 0) start_cycle(dev, now);
}

void Simulation::on_tx_start(int device, double now) {
  Device& dev = devices_[static_cast<std::size_t>(device)];
  dev.attempt++;
  if (dev.attempt == 1) ledger_.record_app_sent(device);

  const double airtime = data_airtime(dev.sf);
  ledger_.record_mac_sent(device, airtime);
  dev.duty_free_at_s = now + airtime / params_.mac.ul_duty_cycle;
  dev.tx_start_s = now;
  dev.airtime_s = airtime;

  Frame frame;
  frame.kind = FrameKind::kData;
  frame.sender = device;
  frame.fcnt = dev.fcnt;
  frame.confirmed = params_.mac.confirmed;
  frame.payload_bytes = params_.data_payload_bytes;
  dev.air_id = medium_.begin(frame, Direction::kUp, dev.channel, dev.sf,
                             ul_power_at_gw(dev), now, now + airtime);
  dev.state = MacState::kTransmitting;
  record(now, EventKind::kTxStart, device, dev.channel, dev.sf,
         TraceOutcome::kNone);
  schedule(now + airtime, EventKind::kTxEnd, device);
}

void Simulation::on_tx_end(int device, double now) {
  Device& dev = devices_[static_cast<std::size_t>(device)];
  const auto result = medium_.end(dev.air_id);
  dev.air_id = -1;

  TraceOutcome outcome = TraceOutcome::kLostSensitivity;
  if (result.outcome == ReceptionOutcome::kReceived) {
    outcome = TraceOutcome::kReceived;
    ledger_.record_mac_received(device, dev.airtime_s);
    if (gateway_.deliver_if_new(device, dev.fcnt))
      ledger_.record_app_delivered(device, params_.data_payload_bytes * 8);
    if (params_.mac.confirmed) try_plan_ack(dev, now);
  } else if (result.outcome == ReceptionOutcome::kLostCollision) {
    outcome = TraceOutcome::kLostCollision;
  }
  record(now, EventKind::kTxEnd, device, dev.channel, dev.sf, outcome);

  dev.state = MacState::kWaitRx1;
  schedule(now + params_.mac.recv_delay1_s, EventKind::kRxWindowOpen, device,
           1);
}

void Simulation::try_plan_ack(const Device& dev, double ul_end_s) {
  std::vector<Gateway::WindowParams> windows;
  windows.push_back({1, ul_end_s + params_.mac.recv_delay1_s,
                     ack_airtime(dev.sf), dev.channel, dev.sf,
                     params_.rx1_ack_power_dbm});
  windows.push_back({2, ul_end_s + params_.mac.recv_delay2_s,
                     ack_airtime(kRx2Sf), plan_.rx2_channel(), kRx2Sf,
                     params_.rx2_ack_power_dbm});
  auto plan = gateway_.plan_ack(
      dev.id, windows,
      [this](int channel, int sf, double start, double end) {
        return medium_.busy(channel, sf, start, end, Direction::kDown);
      });
  if (!plan) return;

  AckPlan* stored = gateway_.ack_starting(dev.id, plan->start_s);
  stored->receivable = ack_receivable(dev, stored->sf, stored->tx_power_dbm);
  schedule(stored->start_s, EventKind::kAckTxStart, dev.id);
}

void Simulation::on_rx_window_open(int device, int window, double now) {
  Device& dev = devices_[static_cast<std::size_t>(device)];
  const int wch = window == 1 ? dev.channel : plan_.rx2_channel();
  const int wsf = window == 1 ? dev.sf : kRx2Sf;
  record(now, EventKind::kRxWindowOpen, device, wch, wsf, TraceOutcome::kNone);

  const AckPlan* incoming = gateway_.ack_starting(device, now);
  if (incoming && incoming->window == window && incoming->receivable) {
    dev.state = window == 1 ? MacState::kRx1Open : MacState::kRx2Open;
    return;  // stays listening until the ACK ends
  }
  schedule(now, EventKind::kRxWindowClose, device, window);
}

void Simulation::on_rx_window_close(int device, int window, double now) {
  Device& dev = devices_[static_cast<std::size_t>(device)];
  const int wch = window == 1 ? dev.channel : plan_.rx2_channel();
  const int wsf = window == 1 ? dev.sf : kRx2Sf;
  record(now, EventKind::kRxWindowClose, device, wch, wsf,
         TraceOutcome::kNone);

  if (window == 1) {
    dev.state = MacState::kWaitRx2;
    schedule(now + (params_.mac.recv_delay2_s - params_.mac.recv_delay1_s),
             EventKind::kRxWindowOpen, device, 2);
    return;
  }

  // Both windows passed in silence: retransmit or give the frame up.
  if (params_.mac.confirmed) {
    if (dev.attempt < params_.mac.max_tx_confirmed) {
      dev.channel = hop_channel(dev.channel, params_.channels, dev.channel_rng);
      dev.sf = sf_for_attempt(params_.mac.initial_sf, dev.attempt + 1);
      dev.state = MacState::kDutyWait;
      const double backoff =
          kRetryBackoffMinS + kRetryBackoffSpanS * dev.backoff_rng.next_double();
      schedule(std::max(now, dev.duty_free_at_s) + backoff, EventKind::kTxStart,
               device);
      return;
    }
  } else if (dev.attempt < params_.mac.max_tx_unconfirmed) {
    dev.channel = pick_channel(params_.channels, dev.channel_rng);
    dev.state = MacState::kDutyWait;
    const double backoff =
        kRetryBackoffMinS + kRetryBackoffSpanS * dev.backoff_rng.next_double();
    schedule(std::max(now, dev.duty_free_at_s) + backoff, EventKind::kTxStart,
             device);
    return;
  }
  finish_cycle(dev, now);
}

void Simulation::on_ack_tx_start(int device, double now) {
  AckPlan* plan = gateway_.ack_starting(device, now);
  if (!plan) throw ConfigError("ack transmission without a plan");

  Frame ack;
  ack.kind = FrameKind::kAck;
  ack.sender = -1;
  ack.destination = device;
  ack.fcnt = gateway_.next_fcnt_down(device);
  ack.payload_bytes = params_.ack_payload_bytes;
  // Heard at the gateway at full transmit power: its own downlink drowns
  // any co-channel same-SF uplink for the duration.
  plan->air_id = medium_.begin(ack, Direction::kDown, plan->channel, plan->sf,
                               plan->tx_power_dbm, plan->start_s, plan->end_s);
  ledger_.record_ack_sent();
  record(now, EventKind::kAckTxStart, device, plan->channel, plan->sf,
         TraceOutcome::kNone);
  schedule(plan->end_s, EventKind::kAckTxEnd, device);
}

void Simulation::on_ack_tx_end(int device, double now) {
  Device& dev = devices_[static_cast<std::size_t>(device)];
  AckPlan* plan = gateway_.ack_ending(device, now);
  if (!plan) throw ConfigError("ack completion without a plan");
  medium_.end(plan->air_id);

  const MacState listening =
      plan->window == 1 ? MacState::kRx1Open : MacState::kRx2Open;
  const bool delivered = plan->receivable && dev.state == listening;
  record(now, EventKind::kAckTxEnd, device, plan->channel, plan->sf,
         delivered ? TraceOutcome::kDelivered : TraceOutcome::kMissed);
  gateway_.retire_ack(plan);

  if (delivered) finish_cycle(dev, now);
}

}  // namespace lorasim
