#include "medium.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace lorasim {

namespace {

constexpr double kNoInterferer = -std::numeric_limits<double>::infinity();

bool interferes(const ActiveTransmission& a, const ActiveTransmission& b) {
  return a.channel == b.channel && a.sf == b.sf &&
         intervals_overlap(a.start_s, a.end_s, b.start_s, b.end_s);
}

ReceptionOutcome decide(double power_dbm, double max_interferer_dbm, int sf,
                        const MediumParams& params) {
  if (power_dbm < phy::sensitivity_dbm(sf, params.bandwidth_hz,
                                       params.noise_figure_db))
    return ReceptionOutcome::kLostSensitivity;
  if (power_dbm - max_interferer_dbm >= params.capture_threshold_db &&
      power_dbm > max_interferer_dbm)
    return ReceptionOutcome::kReceived;
  return ReceptionOutcome::kLostCollision;
}

}  // namespace

ReceptionOutcome resolve_reception(const ActiveTransmission& tx,
                                   const std::vector<ActiveTransmission>& others,
                                   const MediumParams& params) {
  double max_interferer = kNoInterferer;
  for (const auto& other : others) {
    if (other.id == tx.id) continue;
    if (interferes(tx, other))
      max_interferer = std::max(max_interferer, other.power_at_gw_dbm);
  }
  return decide(tx.power_at_gw_dbm, max_interferer, tx.sf, params);
}

std::int64_t Medium::begin(const Frame& frame, Direction direction, int channel,
                           int sf, double power_at_gw_dbm, double start_s,
                           double end_s) {
  if (end_s < start_s)
    throw ConfigError("transmission ends before it starts");
  Record record;
  record.tx.id = next_id_++;
  record.tx.frame = frame;
  record.tx.direction = direction;
  record.tx.channel = channel;
  record.tx.sf = sf;
  record.tx.power_at_gw_dbm = power_at_gw_dbm;
  record.tx.start_s = start_s;
  record.tx.end_s = end_s;
  record.max_interferer_dbm = kNoInterferer;

  for (auto& other : active_) {
    if (!interferes(record.tx, other.tx)) continue;
    other.max_interferer_dbm =
        std::max(other.max_interferer_dbm, power_at_gw_dbm);
    record.max_interferer_dbm =
        std::max(record.max_interferer_dbm, other.tx.power_at_gw_dbm);
  }
  active_.push_back(record);
  return record.tx.id;
}

Medium::EndResult Medium::end(std::int64_t id) {
  auto it = std::find_if(active_.begin(), active_.end(),
                         [id](const Record& r) { return r.tx.id == id; });
  if (it == active_.end())
    throw ConfigError("no in-flight transmission with id " +
                      std::to_string(id));
  EndResult result{
      decide(it->tx.power_at_gw_dbm, it->max_interferer_dbm, it->tx.sf,
             params_),
      it->max_interferer_dbm};
  active_.erase(it);
  return result;
}

bool Medium::busy(int channel, int sf, double start_s, double end_s) const {
  return std::any_of(active_.begin(), active_.end(), [&](const Record& r) {
    return r.tx.channel == channel && r.tx.sf == sf &&
           intervals_overlap(r.tx.start_s, r.tx.end_s, start_s, end_s);
  });
}

bool Medium::busy(int channel, int sf, double start_s, double end_s,
                  Direction direction) const {
  return std::any_of(active_.begin(), active_.end(), [&](const Record& r) {
    return r.tx.direction == direction && r.tx.channel == channel &&
           r.tx.sf == sf &&
           intervals_overlap(r.tx.start_s, r.tx.end_s, start_s, end_s);
  });
}

std::vector<ActiveTransmission> Medium::in_flight() const {
  std::vector<ActiveTransmission> out;
  out.reserve(active_.size());
  for (const auto& r : active_) out.push_back(r.tx);
  return out;
}

}  // namespace lorasim
