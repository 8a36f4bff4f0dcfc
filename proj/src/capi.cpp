#include "lorasim/lorasim.h"

#include <exception>
#include <fstream>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "scenario.hpp"

struct lorasim_config {
  lorasim::ScenarioConfig config;
  std::set<std::string> present;
};

struct lorasim_result {
  std::vector<lorasim::ResultRow> rows;
  std::vector<lorasim::TraceRow> trace;
  bool has_trace = false;
};

namespace {

thread_local std::string g_last_error;

lorasim_status fail(lorasim_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

/* Runs the body, translating exceptions into statuses. */
template <typename Fn>
lorasim_status guarded(Fn&& body) {
  try {
    return body();
  } catch (const lorasim::ConfigError& e) {
    return fail(LORASIM_ERR_CONFIG, e.what());
  } catch (const std::exception& e) {
    return fail(LORASIM_ERR_INTERNAL, e.what());
  }
}

bool single_point(const lorasim::ScenarioConfig& config) {
  return config.devices.size() <= 1 && config.t_i.size() <= 1 &&
         config.lambda_pps.size() <= 1 && config.confirmed.size() <= 1 &&
         config.max_tx.size() <= 1 && config.m_c.size() <= 1 &&
         config.sf.size() <= 1 && config.distance_m.size() <= 1;
}

}  // namespace

extern "C" {

const char* lorasim_last_error(void) { return g_last_error.c_str(); }

const char* lorasim_version(void) { return "1.0.0"; }

lorasim_config* lorasim_config_new(void) { return new lorasim_config; }

void lorasim_config_free(lorasim_config* config) { delete config; }

lorasim_status lorasim_config_load_file(lorasim_config* config,
                                        const char* path) {
  if (!config || !path)
    return fail(LORASIM_ERR_ARGUMENT, "config and path must not be null");
  if (!std::ifstream(path))
    return fail(LORASIM_ERR_IO,
                "cannot open config file '" + std::string(path) + "'");
  return guarded([&] {
    std::set<std::string> present;
    lorasim::ScenarioConfig loaded = lorasim::load_config_file(path, &present);
    config->config = loaded;
    config->present = present;
    return LORASIM_OK;
  });
}

lorasim_status lorasim_config_set(lorasim_config* config, const char* key,
                                  const char* value) {
  if (!config || !key || !value)
    return fail(LORASIM_ERR_ARGUMENT,
                "config, key, and value must not be null");
  return guarded([&] {
    lorasim::apply_config_value(config->config, key, value);
    config->present.insert(key);
    return LORASIM_OK;
  });
}

lorasim_status lorasim_run(const lorasim_config* config,
                           lorasim_result** out) {
  if (!config || !out)
    return fail(LORASIM_ERR_ARGUMENT, "config and out must not be null");
  *out = nullptr;
  return guarded([&] {
    lorasim::validate_config(config->config, config->present);
    auto result = std::make_unique<lorasim_result>();
    if (config->config.trace) {
      if (!single_point(config->config))
        return fail(LORASIM_ERR_CONFIG,
                    "trace: a traced run needs every sweep axis pinned to "
                    "one value");
      result->rows.push_back(
          lorasim::run_single_point(config->config, &result->trace));
      result->has_trace = true;
    } else {
      result->rows = lorasim::run_scenarios(config->config);
    }
    *out = result.release();
    return LORASIM_OK;
  });
}

void lorasim_result_free(lorasim_result* result) { delete result; }

size_t lorasim_result_rows(const lorasim_result* result) {
  return result ? result->rows.size() : 0;
}

lorasim_status lorasim_result_get(const lorasim_result* result, size_t row,
                                  const char* column, double* out) {
  if (!result || !column || !out)
    return fail(LORASIM_ERR_ARGUMENT,
                "result, column, and out must not be null");
  if (row >= result->rows.size())
    return fail(LORASIM_ERR_ARGUMENT,
                "row " + std::to_string(row) + " is out of range (" +
                    std::to_string(result->rows.size()) + " rows)");
  const lorasim::ResultRow& r = result->rows[row];
  const std::string name(column);
  if (name == "scenario") *out = r.scenario;
  else if (name == "seed") *out = static_cast<double>(r.seed);
  else if (name == "devices") *out = r.devices;
  else if (name == "t_i") *out = r.t_i;
  else if (name == "confirmed") *out = r.confirmed ? 1.0 : 0.0;
  else if (name == "max_tx") *out = r.max_tx;
  else if (name == "m_c") *out = r.m_c;
  else if (name == "sf") *out = r.sf;
  else if (name == "distance_m") *out = r.distance_m;
  else if (name == "pdr") *out = r.pdr;
  else if (name == "utilization") *out = r.utilization;
  else if (name == "load") *out = r.load;
  else if (name == "throughput_bps") *out = r.throughput_bps;
  else if (name == "app_sent") *out = static_cast<double>(r.app_sent);
  else if (name == "app_delivered") *out = static_cast<double>(r.app_delivered);
  else if (name == "mac_sent") *out = static_cast<double>(r.mac_sent);
  else if (name == "mac_received") *out = static_cast<double>(r.mac_received);
  else if (name == "acks_sent") *out = static_cast<double>(r.acks_sent);
  else
    return fail(LORASIM_ERR_ARGUMENT,
                "unknown result column '" + name + "'");
  return LORASIM_OK;
}

lorasim_status lorasim_result_write_csv(const lorasim_result* result,
                                        const char* path) {
  if (!result || !path)
    return fail(LORASIM_ERR_ARGUMENT, "result and path must not be null");
  return guarded([&] {
    std::ofstream file(path);
    if (!file)
      return fail(LORASIM_ERR_IO,
                  "cannot open '" + std::string(path) + "' for writing");
    lorasim::write_results_csv(result->rows, file);
    file.flush();
    if (!file)
      return fail(LORASIM_ERR_IO,
                  "failed writing '" + std::string(path) + "'");
    return LORASIM_OK;
  });
}

lorasim_status lorasim_result_write_trace_csv(const lorasim_result* result,
                                              const char* path) {
  if (!result || !path)
    return fail(LORASIM_ERR_ARGUMENT, "result and path must not be null");
  if (!result->has_trace)
    return fail(LORASIM_ERR_ARGUMENT,
                "the run did not capture a trace (set trace = true)");
  return guarded([&] {
    std::ofstream file(path);
    if (!file)
      return fail(LORASIM_ERR_IO,
                  "cannot open '" + std::string(path) + "' for writing");
    lorasim::write_trace_csv(result->trace, file);
    file.flush();
    if (!file)
      return fail(LORASIM_ERR_IO,
                  "failed writing '" + std::string(path) + "'");
    return LORASIM_OK;
  });
}

}  // extern "C"
