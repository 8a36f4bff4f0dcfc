#ifndef LORASIM_SCENARIO_HPP
#define LORASIM_SCENARIO_HPP

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "engine.hpp"

namespace lorasim {

/// User-facing run description. Vector-valued fields are sweep axes; the
/// runners take the cartesian product over the axes a scenario uses.
struct ScenarioConfig {
  int scenario = 2;
  std::uint64_t seed = 1;
  std::vector<int> devices{100};
  std::vector<double> t_i;         // traffic intensity; exclusive with lambda
  std::vector<double> lambda_pps;  // raw packet rate, packets per second
  std::vector<bool> confirmed{false};
  std::vector<int> max_tx{1};
  std::vector<int> m_c{1};
  std::vector<int> sf;             // default depends on the scenario
  std::vector<double> distance_m;  // single-device sweep positions
  int packets_per_point = 100;
  double duration_s = 86400.0;
  double disc_radius_m = 5000.0;
  double capture_threshold_db = 0.0;
  double path_loss_exponent = 2.75;
  double reference_loss_db = 46.6777;
  double tx_power_dbm = 14.0;
  double noise_figure_db = 6.0;
  bool trace = false;
};

/// One output row, matching the CSV schema field for field. NaN doubles
/// print as empty cells.
struct ResultRow {
  int scenario;
  std::uint64_t seed;
  int devices;
  double t_i;
  bool confirmed;
  int max_tx;
  int m_c;
  int sf;
  double distance_m;
  double pdr;
  double utilization;
  double load;
  double throughput_bps;
  std::int64_t app_sent;
  std::int64_t app_delivered;
  std::int64_t mac_sent;
  std::int64_t mac_received;
  std::int64_t acks_sent;
};

/// Keys a config file or command line may set. `present` lists which ones
/// were given explicitly so scenario-specific misuse can be named.
void validate_config(const ScenarioConfig& config,
                     const std::set<std::string>& present);

/// Parse a flat key = value file (# comments). Unknown keys are errors.
ScenarioConfig load_config_file(const std::string& path,
                                std::set<std::string>* present = nullptr);

/// Apply one key/value pair onto a config. Used by both the file loader
/// and command-line overrides; throws with the key name on bad input.
void apply_config_value(ScenarioConfig& config, const std::string& key,
                        const std::string& value);

/// I.i.d. uniform positions over a disc centered on the gateway. Each
/// device draws from its own seed-derived stream, so a device keeps its
/// position when the population grows.
std::vector<std::pair<double, double>> place_devices_uniform_disc(
    int count, double radius_m, std::uint64_t seed);

/// Distance sweep of a lone saturated unconfirmed sender: one run per
/// (sf, distance) pair, each sending packets_per_point packets.
std::vector<ResultRow> run_scenario_1(const ScenarioConfig& config);

/// Poisson population on the disc: one run per point of the sweep over
/// (devices, intensity, mode, max_tx, m_c).
std::vector<ResultRow> run_scenario_2(const ScenarioConfig& config);

/// Run whichever scenario the config names.
std::vector<ResultRow> run_scenarios(const ScenarioConfig& config);

/// Single simulation for one fully specified point (every sweep axis must
/// hold exactly one value). Fills `trace` when the config asks for it.
ResultRow run_single_point(const ScenarioConfig& config,
                           std::vector<TraceRow>* trace = nullptr);

void write_results_csv(const std::vector<ResultRow>& rows, std::ostream& out);
void write_trace_csv(const std::vector<TraceRow>& rows, std::ostream& out);

}  // namespace lorasim

#endif
