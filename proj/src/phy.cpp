#include "phy.hpp"

#include <cmath>
#include <string>

namespace lorasim {
namespace phy {

void validate(const PhyParams& params) {
  if (params.sf < kMinSf || params.sf > kMaxSf)
    throw ConfigError("sf must be in [7,12], got " + std::to_string(params.sf));
  if (params.bandwidth_hz != 125000 && params.bandwidth_hz != 250000 &&
      params.bandwidth_hz != 500000)
    throw ConfigError("bandwidth_hz must be 125000, 250000 or 500000, got " +
                      std::to_string(params.bandwidth_hz));
  if (params.coding_rate_num < 1 || params.coding_rate_num > 4)
    throw ConfigError("coding_rate_num must be in [1,4], got " +
                      std::to_string(params.coding_rate_num));
  if (params.preamble_symbols < 0)
    throw ConfigError("preamble_symbols must be non-negative");
}

double symbol_time_s(const PhyParams& params) {
  validate(params);
  return std::ldexp(1.0, params.sf) / params.bandwidth_hz;
}

bool ldro_required(int sf, int bandwidth_hz) {
  return std::ldexp(1.0, sf) / bandwidth_hz > 0.016;
}

double airtime_s(const PhyParams& params, int payload_bytes) {
  validate(params);
  if (payload_bytes < 0 || payload_bytes > kMaxPayloadBytes)
    throw ConfigError("payload_bytes must be in [0,255], got " +
                      std::to_string(payload_bytes));

  const double t_sym = std::ldexp(1.0, params.sf) / params.bandwidth_hz;
  const double t_preamble = (params.preamble_symbols + 4.25) * t_sym;

  const int de = (params.low_dr_optimize ||
                  ldro_required(params.sf, params.bandwidth_hz))
                     ? 1
                     : 0;
  const int ih = params.explicit_header ? 0 : 1;
  const int crc = params.crc_on ? 1 : 0;

  const int numerator = 8 * payload_bytes - 4 * params.sf + 28 + 16 * crc - 20 * ih;
  const int denominator = 4 * (params.sf - 2 * de);
  // ceil division of a possibly negative numerator, then clamp at zero.
  const int groups =
      numerator > 0 ? (numerator + denominator - 1) / denominator : 0;
  const int payload_symbols = 8 + groups * (params.coding_rate_num + 4);

  return t_preamble + payload_symbols * t_sym;
}

double path_loss_db(const LinkBudget& budget, double distance_m) {
  if (distance_m <= budget.reference_distance_m) return budget.reference_loss_db;
  return budget.reference_loss_db +
         10.0 * budget.path_loss_exponent *
             std::log10(distance_m / budget.reference_distance_m);
}

double received_power_dbm(const LinkBudget& budget, double distance_m) {
  return budget.tx_power_dbm - path_loss_db(budget, distance_m);
}

double snr_limit_db(int sf) {
  switch (sf) {
    case 7: return -7.5;
    case 8: return -10.0;
    case 9: return -12.5;
    case 10: return -15.0;
    case 11: return -17.5;
    case 12: return -20.0;
    default:
      throw ConfigError("sf must be in [7,12], got " + std::to_string(sf));
  }
}

double sensitivity_dbm(int sf, int bandwidth_hz, double noise_figure_db) {
  return -174.0 + 10.0 * std::log10(static_cast<double>(bandwidth_hz)) +
         noise_figure_db + snr_limit_db(sf);
}

}  // namespace phy
}  // namespace lorasim
