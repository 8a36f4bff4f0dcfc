#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

namespace lorasim {

namespace {

constexpr std::uint64_t kPurposePlacement = 2;
constexpr double kBlank = std::numeric_limits<double>::quiet_NaN();

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "scenario",       "seed",
      "devices",        "t_i",
      "lambda_pps",     "mode",
      "max_tx",         "m_c",
      "sf",             "distance_m",
      "packets_per_point", "duration_s",
      "disc_radius_m",  "capture_threshold_db",
      "path_loss_exponent", "reference_loss_db",
      "tx_power_dbm",   "noise_figure_db",
      "trace",
  };
  return keys;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

std::string trim(const std::string& text) {
  auto begin = text.find_first_not_of(" \t\r");
  auto end = text.find_last_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  return text.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": not a number: '" + text + "'");
  }
  if (used != text.size())
    throw ConfigError(key + ": trailing characters in '" + text + "'");
  return value;
}

long long parse_int(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": not an integer: '" + text + "'");
  }
  if (used != text.size())
    throw ConfigError(key + ": trailing characters in '" + text + "'");
  return value;
}

/// Lists are comma separated; "start:step:stop" expands an inclusive range.
std::vector<double> parse_double_list(const std::string& key,
                                      const std::string& text) {
  std::vector<double> values;
  for (const auto& raw : split(text, ',')) {
    const std::string item = trim(raw);
    if (item.find(':') != std::string::npos) {
      auto parts = split(item, ':');
      if (parts.size() != 3)
        throw ConfigError(key + ": range needs start:step:stop, got '" +
                          item + "'");
      const double start = parse_double(key, trim(parts[0]));
      const double step = parse_double(key, trim(parts[1]));
      const double stop = parse_double(key, trim(parts[2]));
      if (step <= 0.0) throw ConfigError(key + ": range step must be positive");
      for (double v = start; v <= stop + step * 1e-9; v += step)
        values.push_back(v);
      continue;
    }
    values.push_back(parse_double(key, item));
  }
  if (values.empty()) throw ConfigError(key + ": empty list");
  return values;
}

std::vector<int> parse_int_list(const std::string& key,
                                const std::string& text) {
  std::vector<int> values;
  for (double v : parse_double_list(key, text)) {
    if (v != std::floor(v) || std::abs(v) > 1e9)
      throw ConfigError(key + ": expected integers, got '" + text + "'");
    values.push_back(static_cast<int>(v));
  }
  return values;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ConfigError(key + ": expected true or false, got '" + text + "'");
}

std::string format_double(double value) {
  if (std::isnan(value)) return "";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}

const char* kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::kAppArrival: return "app_arrival";
    case EventKind::kTxStart: return "tx_start";
    case EventKind::kTxEnd: return "tx_end";
    case EventKind::kRxWindowOpen: return "rx_window_open";
    case EventKind::kRxWindowClose: return "rx_window_close";
    case EventKind::kAckTxStart: return "ack_tx_start";
    case EventKind::kAckTxEnd: return "ack_tx_end";
  }
  return "?";
}

const char* outcome_name(TraceOutcome outcome) {
  switch (outcome) {
    case TraceOutcome::kNone: return "";
    case TraceOutcome::kReceived: return "received";
    case TraceOutcome::kLostCollision: return "lost_collision";
    case TraceOutcome::kLostSensitivity: return "lost_sensitivity";
    case TraceOutcome::kDelivered: return "delivered";
    case TraceOutcome::kMissed: return "missed";
  }
  return "?";
}

double data_airtime_at(const ScenarioConfig&, int sf) {
  phy::PhyParams p;
  p.sf = sf;
  return phy::airtime_s(p, kDataPayloadBytes);
}

SimParams base_params(const ScenarioConfig& config) {
  SimParams p;
  p.seed = config.seed;
  p.duration_s = config.duration_s;
  p.medium.capture_threshold_db = config.capture_threshold_db;
  p.medium.noise_figure_db = config.noise_figure_db;
  p.budget.tx_power_dbm = config.tx_power_dbm;
  p.budget.path_loss_exponent = config.path_loss_exponent;
  p.budget.reference_loss_db = config.reference_loss_db;
  p.budget.noise_figure_db = config.noise_figure_db;
  p.record_trace = config.trace;
  return p;
}

ResultRow row_from_run(const ScenarioConfig& config, const SimParams& params,
                       const MetricsLedger& ledger, double t_i,
                       double distance) {
  ResultRow row;
  row.scenario = config.scenario;
  row.seed = config.seed;
  row.devices = static_cast<int>(params.positions_m.size());
  row.t_i = t_i;
  row.confirmed = params.mac.confirmed;
  row.max_tx = params.mac.confirmed ? params.mac.max_tx_confirmed
                                    : params.mac.max_tx_unconfirmed;
  row.m_c = params.channels;
  row.sf = params.mac.initial_sf;
  row.distance_m = distance;
  // A run too short for anyone to transmit has no ratios to report.
  const bool timed = ledger.duration_s() > 0.0;
  row.pdr = ledger.total_app_sent() > 0 ? metrics::pdr(ledger) : kBlank;
  row.utilization = timed ? metrics::sub_band_utilization(ledger) : kBlank;
  row.load = timed ? metrics::sub_band_load(ledger) : kBlank;
  row.throughput_bps = timed ? metrics::ul_throughput_bps(ledger) : kBlank;
  row.app_sent = ledger.total_app_sent();
  row.app_delivered = ledger.total_app_delivered();
  row.mac_sent = ledger.total_mac_sent();
  row.mac_received = ledger.total_mac_received();
  row.acks_sent = ledger.acks_sent();
  return row;
}

}  // namespace

void apply_config_value(ScenarioConfig& config, const std::string& key,
                        const std::string& value) {
  if (!known_keys().count(key))
    throw ConfigError("unknown config key '" + key + "'");
  const std::string v = trim(value);
  if (key == "scenario") {
    config.scenario = static_cast<int>(parse_int(key, v));
  } else if (key == "seed") {
    long long s = parse_int(key, v);
    if (s < 0) throw ConfigError("seed: must be non-negative");
    config.seed = static_cast<std::uint64_t>(s);
  } else if (key == "devices") {
    config.devices = parse_int_list(key, v);
  } else if (key == "t_i") {
    config.t_i = parse_double_list(key, v);
  } else if (key == "lambda_pps") {
    config.lambda_pps = parse_double_list(key, v);
  } else if (key == "mode") {
    config.confirmed.clear();
    for (const auto& raw : split(v, ',')) {
      const std::string mode = trim(raw);
      if (mode == "confirmed") config.confirmed.push_back(true);
      else if (mode == "unconfirmed") config.confirmed.push_back(false);
      else
        throw ConfigError("mode: expected confirmed or unconfirmed, got '" +
                          mode + "'");
    }
  } else if (key == "max_tx") {
    config.max_tx = parse_int_list(key, v);
  } else if (key == "m_c") {
    config.m_c = parse_int_list(key, v);
  } else if (key == "sf") {
    config.sf = parse_int_list(key, v);
  } else if (key == "distance_m") {
    config.distance_m = parse_double_list(key, v);
  } else if (key == "packets_per_point") {
    config.packets_per_point = static_cast<int>(parse_int(key, v));
  } else if (key == "duration_s") {
    config.duration_s = parse_double(key, v);
  } else if (key == "disc_radius_m") {
    config.disc_radius_m = parse_double(key, v);
  } else if (key == "capture_threshold_db") {
    config.capture_threshold_db = parse_double(key, v);
  } else if (key == "path_loss_exponent") {
    config.path_loss_exponent = parse_double(key, v);
  } else if (key == "reference_loss_db") {
    config.reference_loss_db = parse_double(key, v);
  } else if (key == "tx_power_dbm") {
    config.tx_power_dbm = parse_double(key, v);
  } else if (key == "noise_figure_db") {
    config.noise_figure_db = parse_double(key, v);
  } else if (key == "trace") {
    config.trace = parse_bool(key, v);
  }
}

ScenarioConfig load_config_file(const std::string& path,
                                std::set<std::string>* present) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  ScenarioConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    apply_config_value(config, key, value);
    if (present) present->insert(key);
  }
  return config;
}

void validate_config(const ScenarioConfig& config,
                     const std::set<std::string>& present) {
  if (config.scenario != 1 && config.scenario != 2)
    throw ConfigError("scenario: must be 1 or 2");
  if (!config.t_i.empty() && !config.lambda_pps.empty())
    throw ConfigError("t_i and lambda_pps are mutually exclusive");
  for (double v : config.t_i)
    if (v < 0.0) throw ConfigError("t_i: values must be non-negative");
  for (double v : config.lambda_pps)
    if (v < 0.0) throw ConfigError("lambda_pps: values must be non-negative");
  for (int v : config.devices)
    if (v < 1) throw ConfigError("devices: values must be at least 1");
  for (int v : config.max_tx)
    if (v < 1) throw ConfigError("max_tx: values must be at least 1");
  for (int v : config.m_c)
    if (v < 1 || v > 7) throw ConfigError("m_c: values must be in [1,7]");
  for (int v : config.sf)
    if (v < phy::kMinSf || v > phy::kMaxSf)
      throw ConfigError("sf: values must be in [7,12]");
  for (double v : config.distance_m)
    if (v <= 0.0) throw ConfigError("distance_m: values must be positive");
  if (config.packets_per_point < 1)
    throw ConfigError("packets_per_point: must be at least 1");
  if (config.duration_s < 0.0)
    throw ConfigError("duration_s: must be non-negative");
  if (config.disc_radius_m <= 0.0)
    throw ConfigError("disc_radius_m: must be positive");
  if (config.capture_threshold_db < 0.0)
    throw ConfigError("capture_threshold_db: must be non-negative");
  if (config.path_loss_exponent <= 0.0)
    throw ConfigError("path_loss_exponent: must be positive");

  if (config.scenario == 1) {
    for (const char* key : {"devices", "t_i", "lambda_pps", "disc_radius_m"})
      if (present.count(key))
        throw ConfigError(std::string(key) +
                          ": not a scenario 1 setting (single fixed device)");
    for (bool confirmed : config.confirmed)
      if (confirmed)
        throw ConfigError("mode: scenario 1 runs unconfirmed traffic only");
  } else {
    for (const char* key : {"distance_m", "packets_per_point"})
      if (present.count(key))
        throw ConfigError(std::string(key) + ": not a scenario 2 setting");
    if (present.count("sf") && config.sf.size() != 1)
      throw ConfigError("sf: scenario 2 uses a single spreading factor");
  }
}

std::vector<std::pair<double, double>> place_devices_uniform_disc(
    int count, double radius_m, std::uint64_t seed) {
  if (count < 1) throw ConfigError("device count must be at least 1");
  if (radius_m <= 0.0) throw ConfigError("radius must be positive");
  std::vector<std::pair<double, double>> positions;
  positions.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Rng rng(seed, static_cast<std::uint64_t>(i), kPurposePlacement);
    const double r = radius_m * std::sqrt(rng.next_double());
    const double theta = 2.0 * std::numbers::pi * rng.next_double();
    positions.emplace_back(r * std::cos(theta), r * std::sin(theta));
  }
  return positions;
}

std::vector<ResultRow> run_scenario_1(const ScenarioConfig& config) {
  std::vector<int> sfs = config.sf;
  if (sfs.empty()) sfs = {7, 8, 9, 10, 11, 12};
  std::vector<double> distances = config.distance_m;
  if (distances.empty())
    for (double d = 1000.0; d <= 7000.0 + 1e-9; d += 250.0)
      distances.push_back(d);

  std::vector<ResultRow> rows;
  for (int sf : sfs) {
    for (double distance : distances) {
      SimParams params = base_params(config);
      params.channels = config.m_c.front();
      params.mac.confirmed = false;
      params.mac.max_tx_unconfirmed = config.max_tx.front();
      params.mac.initial_sf = sf;
      params.lambda_pps = 0.0;
      params.pre_queued_packets = config.packets_per_point;
      params.positions_m = {{distance, 0.0}};
      // Horizon sized so every packet's every copy fits at the duty rate.
      params.duration_s = config.packets_per_point *
                          config.max_tx.front() * data_airtime_at(config, sf) /
                          params.mac.ul_duty_cycle;
      Simulation sim(params);
      rows.push_back(
          row_from_run(config, params, sim.run(), kBlank, distance));
    }
  }
  return rows;
}

std::vector<ResultRow> run_scenario_2(const ScenarioConfig& config) {
  const int sf = config.sf.empty() ? 12 : config.sf.front();
  const double airtime = data_airtime_at(config, sf);

  // Intensity values drive the sweep; raw rates are translated so the CSV
  // always reports the intensity column.
  std::vector<double> intensities = config.t_i;
  if (!config.lambda_pps.empty()) {
    intensities.clear();
    for (double lambda : config.lambda_pps)
      intensities.push_back(lambda * airtime / 0.01);
  }
  if (intensities.empty()) intensities = {1.0};

  std::vector<ResultRow> rows;
  for (int device_count : config.devices) {
    auto positions = place_devices_uniform_disc(
        device_count, config.disc_radius_m, config.seed);
    for (double t_i : intensities) {
      for (bool confirmed : config.confirmed) {
        for (int max_tx : config.max_tx) {
          for (int m_c : config.m_c) {
            SimParams params = base_params(config);
            params.channels = m_c;
            params.mac.confirmed = confirmed;
            params.mac.max_tx_confirmed = max_tx;
            params.mac.max_tx_unconfirmed = max_tx;
            params.mac.initial_sf = sf;
            params.lambda_pps =
                lambda_from_intensity(t_i, airtime, params.mac.ul_duty_cycle);
            params.positions_m = positions;
            Simulation sim(params);
            rows.push_back(
                row_from_run(config, params, sim.run(), t_i, kBlank));
          }
        }
      }
    }
  }
  return rows;
}

std::vector<ResultRow> run_scenarios(const ScenarioConfig& config) {
  return config.scenario == 1 ? run_scenario_1(config)
                              : run_scenario_2(config);
}

ResultRow run_single_point(const ScenarioConfig& config,
                           std::vector<TraceRow>* trace) {
  ScenarioConfig point = config;
  point.trace = config.trace || trace != nullptr;
  auto require_one = [](std::size_t n, const char* field) {
    if (n > 1)
      throw ConfigError(std::string(field) +
                        ": a single run needs exactly one value");
  };
  require_one(point.devices.size(), "devices");
  require_one(point.t_i.size(), "t_i");
  require_one(point.lambda_pps.size(), "lambda_pps");
  require_one(point.confirmed.size(), "mode");
  require_one(point.max_tx.size(), "max_tx");
  require_one(point.m_c.size(), "m_c");
  require_one(point.sf.size(), "sf");
  if (point.scenario == 1) require_one(point.distance_m.size(), "distance_m");

  // Re-run the scenario with the trace captured; plumbing through the
  // runners would complicate their row-only contract.
  std::vector<ResultRow> rows;
  if (point.scenario == 1) {
    if (point.distance_m.empty()) point.distance_m = {1000.0};
    if (point.sf.empty()) point.sf = {12};
    const int sf = point.sf.front();
    const double distance = point.distance_m.front();
    SimParams params = base_params(point);
    params.channels = point.m_c.front();
    params.mac.confirmed = false;
    params.mac.max_tx_unconfirmed = point.max_tx.front();
    params.mac.initial_sf = sf;
    params.pre_queued_packets = point.packets_per_point;
    params.positions_m = {{distance, 0.0}};
    params.duration_s = point.packets_per_point * point.max_tx.front() *
                        data_airtime_at(point, sf) /
                        params.mac.ul_duty_cycle;
    Simulation sim(params);
    const auto& ledger = sim.run();
    if (trace) *trace = sim.trace();
    return row_from_run(point, params, ledger, kBlank, distance);
  }

  const int sf = point.sf.empty() ? 12 : point.sf.front();
  const double airtime = data_airtime_at(point, sf);
  double t_i = point.t_i.empty() ? 1.0 : point.t_i.front();
  if (!point.lambda_pps.empty())
    t_i = point.lambda_pps.front() * airtime / 0.01;
  SimParams params = base_params(point);
  params.channels = point.m_c.front();
  params.mac.confirmed = point.confirmed.front();
  params.mac.max_tx_confirmed = point.max_tx.front();
  params.mac.max_tx_unconfirmed = point.max_tx.front();
  params.mac.initial_sf = sf;
  params.lambda_pps =
      lambda_from_intensity(t_i, airtime, params.mac.ul_duty_cycle);
  params.positions_m = place_devices_uniform_disc(
      point.devices.front(), point.disc_radius_m, point.seed);
  Simulation sim(params);
  const auto& ledger = sim.run();
  if (trace) *trace = sim.trace();
  return row_from_run(point, params, ledger, t_i, kBlank);
}

void write_results_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << "scenario,seed,devices,t_i,mode,max_tx,m_c,sf,distance_m,pdr,"
         "utilization,load,throughput_bps,app_sent,app_delivered,mac_sent,"
         "mac_received,acks_sent\n";
  for (const auto& r : rows) {
    out << r.scenario << ',' << r.seed << ',' << r.devices << ','
        << format_double(r.t_i) << ','
        << (r.confirmed ? "confirmed" : "unconfirmed") << ',' << r.max_tx
        << ',' << r.m_c << ',' << r.sf << ',' << format_double(r.distance_m)
        << ',' << format_double(r.pdr) << ',' << format_double(r.utilization)
        << ',' << format_double(r.load) << ','
        << format_double(r.throughput_bps) << ',' << r.app_sent << ','
        << r.app_delivered << ',' << r.mac_sent << ',' << r.mac_received
        << ',' << r.acks_sent << '\n';
  }
}

void write_trace_csv(const std::vector<TraceRow>& rows, std::ostream& out) {
  out << "time,seq,kind,subject,channel,sf,outcome\n";
  char time_buf[32];
  for (const auto& r : rows) {
    std::snprintf(time_buf, sizeof time_buf, "%.6f", r.time_s);
    out << time_buf << ',' << r.seq << ',' << kind_name(r.kind) << ','
        << r.subject << ',';
    if (r.channel >= 0) out << r.channel;
    out << ',';
    if (r.sf >= 0) out << r.sf;
    out << ',' << outcome_name(r.outcome) << '\n';
  }
}

}  // namespace lorasim
