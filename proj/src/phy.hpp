#ifndef LORASIM_PHY_HPP
#define LORASIM_PHY_HPP

#include <stdexcept>

namespace lorasim {

/// Raised when a value fails validation against the model's limits.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace phy {

constexpr int kMinSf = 7;
constexpr int kMaxSf = 12;
constexpr int kMaxPayloadBytes = 255;

/// Modulation parameters of a single LoRa transmission.
struct PhyParams {
  int sf = 12;                  // spreading factor, 7..12
  int bandwidth_hz = 125000;    // 125/250/500 kHz
  int coding_rate_num = 3;      // code rate 4/(4+n), so 3 means 4/7
  int preamble_symbols = 8;
  bool explicit_header = true;
  bool crc_on = true;
  bool low_dr_optimize = false;
};

/// Log-distance link budget between a device and the gateway.
struct LinkBudget {
  double tx_power_dbm = 14.0;
  double path_loss_exponent = 2.75;
  double reference_loss_db = 46.6777;
  double reference_distance_m = 1.0;
  double noise_figure_db = 6.0;
};

void validate(const PhyParams& params);

/// Duration of one chirp symbol: 2^SF / BW.
double symbol_time_s(const PhyParams& params);

/// Time on air of a frame with the given PHY payload length, using the
/// standard transceiver airtime formula (preamble + 4.25 symbols, payload
/// symbol count from the ceil expression over the coded bits).
double airtime_s(const PhyParams& params, int payload_bytes);

/// True when the symbol duration exceeds 16 ms, the point where the
/// low-data-rate optimization bit is mandated (SF11/SF12 at 125 kHz).
bool ldro_required(int sf, int bandwidth_hz);

double path_loss_db(const LinkBudget& budget, double distance_m);
double received_power_dbm(const LinkBudget& budget, double distance_m);

/// Demodulation-floor SNR for an SF, from transceiver datasheet limits.
double snr_limit_db(int sf);

/// Weakest receivable power: thermal floor + noise figure + SNR limit.
double sensitivity_dbm(int sf, int bandwidth_hz, double noise_figure_db);

}  // namespace phy
}  // namespace lorasim

#endif
