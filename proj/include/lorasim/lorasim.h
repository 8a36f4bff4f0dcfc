#ifndef LORASIM_LORASIM_H
#define LORASIM_LORASIM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/*
 * C interface to the LoRaWAN uplink simulator. Configure a run with the
 * same keys a config file uses, execute it, then read the result table or
 * write it out as CSV.
 *
 * Handles are opaque and single-threaded; distinct handles may live on
 * distinct threads. Every fallible call returns a status, and the most
 * recent failure message for the calling thread is kept by
 * lorasim_last_error().
 */

typedef enum lorasim_status {
  LORASIM_OK = 0,
  LORASIM_ERR_ARGUMENT = 1, /* null handle, unknown key or column, misuse */
  LORASIM_ERR_CONFIG = 2,   /* a value failed to parse or validate */
  LORASIM_ERR_IO = 3,       /* a file could not be opened or written */
  LORASIM_ERR_INTERNAL = 4,
} lorasim_status;

typedef struct lorasim_config lorasim_config;
typedef struct lorasim_result lorasim_result;

/* Message for the last failure on this thread. Never null; empty before
 * the first failure. Valid until the next failing call on the thread. */
const char* lorasim_last_error(void);

/* Library version as "major.minor.patch". */
const char* lorasim_version(void);

/* Fresh configuration holding the built-in defaults: scenario 2, one day,
 * 100 devices on a 5 km disc, unconfirmed traffic on one channel. */
lorasim_config* lorasim_config_new(void);
void lorasim_config_free(lorasim_config* config);

/* Replace the configuration with the contents of a key = value file.
 * '#' starts a comment; unknown keys are errors. */
lorasim_status lorasim_config_load_file(lorasim_config* config,
                                        const char* path);

/* Set one key, accepting exactly the config-file syntax for its value,
 * including sweep lists ("50, 100, 200") and ranges ("1000:250:7000"). */
lorasim_status lorasim_config_set(lorasim_config* config, const char* key,
                                  const char* value);

/* Run every point of the configured sweep. On success *out holds a result
 * the caller must free. With "trace = true" the configuration must pin
 * every sweep axis to a single value and the run also captures the full
 * event trace. */
lorasim_status lorasim_run(const lorasim_config* config,
                           lorasim_result** out);
void lorasim_result_free(lorasim_result* result);

/* Number of sweep points in the result table. */
size_t lorasim_result_rows(const lorasim_result* result);

/* Numeric cell of the result table. Columns carry the CSV names: scenario,
 * seed, devices, t_i, max_tx, m_c, sf, distance_m, pdr, utilization, load,
 * throughput_bps, app_sent, app_delivered, mac_sent, mac_received,
 * acks_sent. The CSV's textual mode column is read as "confirmed", 1 or 0.
 * Cells that do not apply to the row are NaN. */
lorasim_status lorasim_result_get(const lorasim_result* result, size_t row,
                                  const char* column, double* out);

/* Write the result table as CSV. Identical configurations produce byte
 * identical files. */
lorasim_status lorasim_result_write_csv(const lorasim_result* result,
                                        const char* path);

/* Write the captured event trace as CSV. Fails unless the run was
 * configured with "trace = true". */
lorasim_status lorasim_result_write_trace_csv(const lorasim_result* result,
                                              const char* path);

#ifdef __cplusplus
}
#endif

#endif
