#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lorasim/lorasim.h"

namespace {

// Exit codes: 0 success, 1 bad usage or configuration, 2 file trouble,
// 3 internal failure.
int exit_code(lorasim_status status) {
  switch (status) {
    case LORASIM_OK: return 0;
    case LORASIM_ERR_ARGUMENT:
    case LORASIM_ERR_CONFIG: return 1;
    case LORASIM_ERR_IO: return 2;
    default: return 3;
  }
}

int complain(lorasim_status status) {
  std::fprintf(stderr, "lorasim: %s\n", lorasim_last_error());
  return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "LoRaWAN uplink simulator: sweeps a device population or a distance "
      "grid and reports PDR, throughput, and sub-band load and utilization "
      "as CSV."};
  app.set_version_flag("--version", lorasim_version());

  std::string config_path;
  app.add_option("config", config_path,
                 "Config file of key = value lines ('#' comments)");
  std::vector<std::string> overrides;
  app.add_option("-s,--set", overrides,
                 "Override one config key, e.g. --set seed=7 or "
                 "--set devices=50,100,200")
      ->type_name("KEY=VALUE");
  std::string output_path = "/dev/stdout";
  app.add_option("-o,--output", output_path,
                 "Write the result table here instead of stdout");
  std::string trace_path;
  app.add_option("-t,--trace", trace_path,
                 "Capture the event trace to this file; needs a run with "
                 "every sweep axis pinned to one value");

  CLI11_PARSE(app, argc, argv);

  lorasim_config* config = lorasim_config_new();
  if (!config) {
    std::fprintf(stderr, "lorasim: out of memory\n");
    return 3;
  }

  lorasim_status status = LORASIM_OK;
  if (!config_path.empty())
    status = lorasim_config_load_file(config, config_path.c_str());
  for (std::size_t i = 0; status == LORASIM_OK && i < overrides.size(); ++i) {
    const std::string& pair = overrides[i];
    const auto eq = pair.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "lorasim: --set needs KEY=VALUE, got '%s'\n",
                   pair.c_str());
      lorasim_config_free(config);
      return 1;
    }
    status = lorasim_config_set(config, pair.substr(0, eq).c_str(),
                                pair.substr(eq + 1).c_str());
  }
  if (status == LORASIM_OK && !trace_path.empty())
    status = lorasim_config_set(config, "trace", "true");
  if (status != LORASIM_OK) {
    lorasim_config_free(config);
    return complain(status);
  }

  lorasim_result* result = nullptr;
  status = lorasim_run(config, &result);
  lorasim_config_free(config);
  if (status != LORASIM_OK) return complain(status);

  status = lorasim_result_write_csv(result, output_path.c_str());
  if (status == LORASIM_OK && !trace_path.empty())
    status = lorasim_result_write_trace_csv(result, trace_path.c_str());
  lorasim_result_free(result);
  if (status != LORASIM_OK) return complain(status);
  return 0;
}
