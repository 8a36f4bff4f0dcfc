// Acceptance suite. Each numbered check exercises one end-to-end guarantee
// of the simulator and prints a single PASS or FAIL verdict line, with
// indented measurement detail above it. Run with --check N for one check,
// or with no arguments for all of them. Exit status is the failure count
// clamped to 1, so the test driver can gate on it.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "engine.hpp"
#include "medium.hpp"
#include "metrics.hpp"
#include "phy.hpp"
#include "rng.hpp"
#include "scenario.hpp"

namespace {

using namespace lorasim;

constexpr std::uint64_t kSeeds[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
constexpr double kDay = 86400.0;
constexpr double kUplinkDuty = 0.01;

// Plateau points of a monotone trend can sit within estimator noise of each
// other. A step counts as non-decreasing when the ten-seed mean keeps at
// least 98% of the previous level; a real regression loses far more.
constexpr double kTrendSlack = 0.98;

std::string fmt(const char* f, ...) {
  va_list ap;
  va_start(ap, f);
  char buf[512];
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

void note(const std::string& line) { std::printf("  %s\n", line.c_str()); }

bool expect(bool ok, const std::string& what) {
  if (!ok) std::printf("  FAIL: %s\n", what.c_str());
  return ok;
}

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) /
         static_cast<double>(v.size());
}

double sd_of(const std::vector<double>& v) {
  const double m = mean_of(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

// Mean paired difference a-b in standard errors of that mean: the paired
// t-statistic. Seeds are shared across configurations, so pairing removes
// the common per-seed variation.
double separation(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> d;
  for (std::size_t i = 0; i < a.size(); ++i) d.push_back(a[i] - b[i]);
  const double m = mean_of(d);
  const double se = sd_of(d) / std::sqrt(static_cast<double>(d.size()));
  if (se == 0.0) return m > 0.0 ? 1e9 : 0.0;
  return m / se;
}

double data_airtime(int sf) {
  phy::PhyParams p;
  p.sf = sf;
  p.low_dr_optimize = phy::ldro_required(sf, p.bandwidth_hz);
  return phy::airtime_s(p, kDataPayloadBytes);
}

ResultRow population_point(std::uint64_t seed, int devices, double t_i,
                           bool confirmed, int max_tx, int m_c) {
  ScenarioConfig cfg;
  cfg.scenario = 2;
  cfg.seed = seed;
  cfg.devices = {devices};
  cfg.t_i = {t_i};
  cfg.confirmed = {confirmed};
  cfg.max_tx = {max_tx};
  cfg.m_c = {m_c};
  cfg.duration_s = kDay;
  return run_scenario_2(cfg).at(0);
}

std::vector<double> over_seeds(int devices, double t_i, bool confirmed,
                               int max_tx, int m_c,
                               double ResultRow::*field) {
  std::vector<double> out;
  for (std::uint64_t seed : kSeeds)
    out.push_back(population_point(seed, devices, t_i, confirmed, max_tx,
                                   m_c).*field);
  return out;
}

// 1. Time on air against independently derived closed-form references.
bool check_airtime_references() {
  struct Ref {
    int sf;
    double airtime_s;
  };
  // 21 byte payload, 125 kHz, code rate 4/7, 8 preamble symbols, explicit
  // header, CRC on, low-data-rate optimization where the symbol exceeds
  // 16 ms. Values computed by hand from the symbol-count expression.
  const Ref refs[] = {{7, 0.070912},  {8, 0.127488},  {9, 0.226304},
                      {10, 0.452608}, {11, 0.905216}, {12, 1.810432}};
  bool ok = true;
  for (const Ref& r : refs) {
    const double got = data_airtime(r.sf);
    note(fmt("sf%-2d airtime %.9f reference %.9f", r.sf, got, r.airtime_s));
    ok &= expect(std::fabs(got - r.airtime_s) <= 1e-6,
                 fmt("sf%d airtime off reference by %.3g", r.sf,
                     got - r.airtime_s));
  }
  ok &= expect(phy::ldro_required(11, 125000) && phy::ldro_required(12, 125000),
               "low-data-rate optimization must engage at sf11/sf12");
  ok &= expect(!phy::ldro_required(10, 125000),
               "low-data-rate optimization must stay off through sf10");
  return ok;
}

// 2. Randomized saturated day-long runs never exceed the duty-cycle budget
// in any sliding window: airtime within a window of width W stays at or
// below duty*W plus one frame for the straddler at the window edge.
bool check_duty_windows() {
  bool ok = true;
  Rng pick(424242, 0, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const int sf = 7 + static_cast<int>(pick.next_below(6));
    const bool confirmed = pick.next_below(2) == 1;
    const int attempts = 1 + static_cast<int>(pick.next_below(8));

    SimParams p;
    p.duration_s = kDay;
    p.seed = 9000 + static_cast<std::uint64_t>(trial);
    p.channels = 1;
    p.mac.confirmed = confirmed;
    p.mac.max_tx_confirmed = attempts;
    p.mac.max_tx_unconfirmed = attempts;
    p.mac.initial_sf = sf;
    p.pre_queued_packets = 1 << 20;  // more packets than a day can drain
    p.positions_m = {{100.0, 0.0}};
    p.record_trace = true;
    Simulation sim(p);
    sim.run();

    std::vector<double> starts, prefix;
    prefix.push_back(0.0);
    double longest = 0.0;
    for (const TraceRow& row : sim.trace()) {
      if (row.kind != EventKind::kTxStart || row.subject != 0) continue;
      const double a = data_airtime(row.sf);
      starts.push_back(row.time_s);
      prefix.push_back(prefix.back() + a);
      longest = std::max(longest, a);
    }
    ok &= expect(prefix.back() >= 0.8 * kUplinkDuty * kDay,
                 fmt("trial %d not saturated: %.1f s total airtime", trial,
                     prefix.back()));

    std::string detail = fmt("trial %d sf%d %s attempts %d:", trial, sf,
                             confirmed ? "confirmed" : "unconfirmed", attempts);
    for (double window : {3600.0, 21600.0}) {
      // Windows anchored at transmission starts attain the maximum; the
      // frame straddling the right edge is counted in full, which only
      // overstates the occupancy.
      double worst = 0.0;
      for (std::size_t i = 0; i < starts.size(); ++i) {
        const auto e = std::lower_bound(starts.begin(), starts.end(),
                                        starts[i] + window);
        const double sum =
            prefix[static_cast<std::size_t>(e - starts.begin())] - prefix[i];
        worst = std::max(worst, sum);
      }
      const double bound = kUplinkDuty * window + longest + 1e-9;
      detail += fmt("  W=%gs worst %.3f cap %.3f", window, worst, bound);
      ok &= expect(worst <= bound,
                   fmt("trial %d window %g s holds %.3f s, cap %.3f s", trial,
                       window, worst, bound));
    }
    note(detail);
  }
  return ok;
}

// 3. A lone lossless device's measured frame rate tracks the closed-form
// sending rate fed with the realized packet arrival rate. Tolerance is 5%
// of the prediction plus the cycle truncated at the horizon, at most two
// copy-sets of frames.
bool check_rate_oracle() {
  const double airtime = data_airtime(12);
  const double cap = kUplinkDuty / airtime;  // duty-limited frames per second
  bool ok = true;
  for (int copies : {1, 8}) {
    for (double factor : {2.0, 0.1, 0.01}) {
      const double lambda = factor * cap / copies;
      SimParams p;
      p.duration_s = kDay;
      p.seed = 1;
      p.channels = 1;
      p.mac.confirmed = false;
      p.mac.max_tx_unconfirmed = copies;
      p.mac.initial_sf = 12;
      p.lambda_pps = lambda;
      // The prediction at saturation describes a queue that never empties,
      // so the saturating point starts with a primed backlog instead of
      // idling through the slow build-up of a just-supercritical queue.
      if (factor > 1.0) p.pre_queued_packets = 1000;
      p.positions_m = {{100.0, 0.0}};
      Simulation sim(p);
      const MetricsLedger& led = sim.run();
      const DeviceCounters& d = led.devices().front();

      // Below saturation the prediction is conditioned on the arrivals the
      // run actually saw, not on their long-run expectation.
      const double fed_lambda =
          factor > 1.0 ? lambda : static_cast<double>(d.app_generated) / kDay;
      const double predicted = metrics::oracle_sending_rate(
          fed_lambda, airtime, kUplinkDuty, copies);
      const double measured = static_cast<double>(d.mac_sent) / kDay;
      const double tol =
          std::max(0.05 * predicted, 2.0 * static_cast<double>(copies) / kDay);
      note(fmt("copies %d offered %.3gx cap: predicted %.6g measured %.6g "
               "frames/s (tol %.2g)",
               copies, factor, predicted, measured, tol));
      ok &= expect(std::fabs(measured - predicted) <= tol,
                   fmt("copies %d factor %.2f drifts beyond tolerance", copies,
                       factor));
    }
  }
  return ok;
}

std::vector<ResultRow> distance_sweep() {
  ScenarioConfig cfg;
  cfg.scenario = 1;
  cfg.seed = 1;
  return run_scenario_1(cfg);
}

double sweep_value(const std::vector<ResultRow>& rows, int sf, double distance,
                   double ResultRow::*field) {
  for (const ResultRow& r : rows)
    if (r.sf == sf && r.distance_m == distance) return r.*field;
  std::printf("  FAIL: sweep row sf%d %.0f m missing\n", sf, distance);
  return std::nan("");
}

// 4. Delivery over the default distance grid: certain at close range, zero
// past the sensitivity radius, collapsing inside the expected band, and
// never recovering with distance.
bool check_distance_cliff() {
  const auto rows = distance_sweep();
  bool ok = true;

  for (int sf = 7; sf <= 12; ++sf) {
    double prev = 2.0;
    for (const ResultRow& r : rows) {
      if (r.sf != sf) continue;
      ok &= expect(r.pdr <= prev + 1e-12,
                   fmt("sf%d delivery recovers at %.0f m", sf, r.distance_m));
      prev = r.pdr;
    }
  }

  struct Band {
    int sf;
    double sure_m;    // delivery still certain here
    double gone_m;    // delivery extinct from here on
  };
  for (const Band& b : {Band{7, 1500.0, 3000.0}, Band{12, 5500.0, 7000.0}}) {
    const double near = sweep_value(rows, b.sf, b.sure_m, &ResultRow::pdr);
    const double far = sweep_value(rows, b.sf, b.gone_m, &ResultRow::pdr);
    note(fmt("sf%-2d delivery %.3f at %.1f km, %.3f at %.1f km", b.sf, near,
             b.sure_m / 1000.0, far, b.gone_m / 1000.0));
    ok &= expect(near >= 1.0 - 1e-12,
                 fmt("sf%d must still deliver everything at %.0f m", b.sf,
                     b.sure_m));
    ok &= expect(far <= 1e-12,
                 fmt("sf%d must deliver nothing at %.0f m", b.sf, b.gone_m));
  }
  ok &= expect(sweep_value(rows, 7, 1000.0, &ResultRow::pdr) >= 1.0 - 1e-12,
               "sf7 must deliver everything at 1 km");
  ok &= expect(sweep_value(rows, 12, 5000.0, &ResultRow::pdr) >= 1.0 - 1e-12,
               "sf12 must deliver everything at 5 km");
  return ok;
}

// 5. At close range throughput falls strictly as the spreading factor
// rises, and the slowest factor saturates at the duty-cycle ceiling.
bool check_throughput_ordering() {
  const auto rows = distance_sweep();
  bool ok = true;
  double prev = 1e9;
  for (int sf = 7; sf <= 12; ++sf) {
    const double tput =
        sweep_value(rows, sf, 1000.0, &ResultRow::throughput_bps);
    note(fmt("sf%-2d throughput %.6f bit/s at 1 km", sf, tput));
    ok &= expect(tput < prev,
                 fmt("throughput must fall from sf%d to sf%d", sf - 1, sf));
    prev = tput;
  }
  const double ceiling =
      kDataPayloadBytes * 8.0 * kUplinkDuty / data_airtime(12);
  const double got = sweep_value(rows, 12, 1000.0, &ResultRow::throughput_bps);
  note(fmt("sf12 duty ceiling %.6f bit/s", ceiling));
  ok &= expect(std::fabs(got - ceiling) <= 0.05 * ceiling,
               "sf12 throughput must sit within 5% of the duty ceiling");
  return ok;
}

// 6. Channel utilization versus population size on one channel at unit
// intensity: unconfirmed single-copy traffic is non-decreasing, beats both
// confirmed variants decisively from 100 devices up, and eight unconfirmed
// copies change utilization by at most 10%.
bool check_population_utilization() {
  const int sizes[] = {10, 50, 100, 200, 400};
  struct Mode {
    const char* name;
    bool confirmed;
    int max_tx;
  };
  const Mode modes[] = {{"unconfirmed x1", false, 1},
                        {"confirmed   x1", true, 1},
                        {"confirmed   x8", true, 8},
                        {"unconfirmed x8", false, 8}};
  std::vector<double> u[4][5];
  for (int m = 0; m < 4; ++m)
    for (int s = 0; s < 5; ++s)
      u[m][s] = over_seeds(sizes[s], 1.0, modes[m].confirmed, modes[m].max_tx,
                           1, &ResultRow::utilization);

  for (int m = 0; m < 4; ++m) {
    std::string line = fmt("%s:", modes[m].name);
    for (int s = 0; s < 5; ++s)
      line += fmt("  %d:%.4f", sizes[s], mean_of(u[m][s]));
    note(line);
  }

  bool ok = true;
  for (int s = 1; s < 5; ++s)
    ok &= expect(mean_of(u[0][s]) >= kTrendSlack * mean_of(u[0][s - 1]),
                 fmt("unconfirmed x1 utilization sags from %d to %d devices",
                     sizes[s - 1], sizes[s]));
  for (int s = 2; s < 5; ++s) {
    for (int m : {1, 2}) {
      const double sep = separation(u[0][s], u[m][s]);
      note(fmt("%d devices: unconfirmed x1 above %s by %.1f sigma", sizes[s],
               modes[m].name, sep));
      ok &= expect(sep >= 3.0,
                   fmt("unconfirmed x1 must clear %s at %d devices",
                       modes[m].name, sizes[s]));
    }
  }
  for (int s = 0; s < 5; ++s) {
    const double a = mean_of(u[0][s]);
    const double b = mean_of(u[3][s]);
    ok &= expect(std::fabs(a - b) <= 0.10 * std::max(a, b),
                 fmt("copy count shifts unconfirmed utilization beyond 10%% "
                     "at %d devices",
                     sizes[s]));
  }
  return ok;
}

// 7. Utilization versus offered intensity at 200 devices with eight
// transmissions per packet: non-decreasing for both modes, unconfirmed at
// or above confirmed everywhere.
bool check_intensity_utilization() {
  const double intensities[] = {0.1, 0.5, 1.0};
  std::vector<double> unc[3], conf[3];
  for (int i = 0; i < 3; ++i) {
    unc[i] = over_seeds(200, intensities[i], false, 8, 1,
                        &ResultRow::utilization);
    conf[i] = over_seeds(200, intensities[i], true, 8, 1,
                         &ResultRow::utilization);
    note(fmt("intensity %.1f: unconfirmed %.4f confirmed %.4f", intensities[i],
             mean_of(unc[i]), mean_of(conf[i])));
  }
  bool ok = true;
  for (int i = 1; i < 3; ++i) {
    ok &= expect(mean_of(unc[i]) >= kTrendSlack * mean_of(unc[i - 1]),
                 fmt("unconfirmed utilization sags at intensity %.1f",
                     intensities[i]));
    ok &= expect(mean_of(conf[i]) >= kTrendSlack * mean_of(conf[i - 1]),
                 fmt("confirmed utilization sags at intensity %.1f",
                     intensities[i]));
  }
  for (int i = 0; i < 3; ++i)
    ok &= expect(mean_of(unc[i]) >= mean_of(conf[i]),
                 fmt("confirmed overtakes unconfirmed at intensity %.1f",
                     intensities[i]));
  return ok;
}

// 8. Retransmissions must not hurt confirmed delivery on one channel, and
// with seven channels both modes deliver essentially everything up to 150
// devices, within 0.1 of each other.
bool check_retry_delivery() {
  bool ok = true;
  for (int size : {50, 100, 200, 400}) {
    const double c8 =
        mean_of(over_seeds(size, 1.0, true, 8, 1, &ResultRow::pdr));
    const double c1 =
        mean_of(over_seeds(size, 1.0, true, 1, 1, &ResultRow::pdr));
    note(fmt("1 channel, %3d devices: confirmed x8 %.4f vs x1 %.4f", size, c8,
             c1));
    ok &= expect(c8 + 1e-9 >= c1,
                 fmt("retries reduce delivery at %d devices", size));
  }
  for (int size : {50, 100, 150}) {
    const double u8 =
        mean_of(over_seeds(size, 1.0, false, 8, 7, &ResultRow::pdr));
    const double c8 =
        mean_of(over_seeds(size, 1.0, true, 8, 7, &ResultRow::pdr));
    note(fmt("7 channels, %3d devices: unconfirmed x8 %.4f confirmed x8 %.4f",
             size, u8, c8));
    ok &= expect(std::fabs(c8 - u8) <= 0.1,
                 fmt("modes diverge beyond 0.1 at %d devices", size));
    if (size == 150)
      ok &= expect(u8 >= 0.95,
                   "unconfirmed x8 must deliver 95% at 150 devices");
  }
  return ok;
}

// 9. At light intensity, confirmed retries beat single-shot unconfirmed
// delivery while the population is small, and once the channel saturates
// extra unconfirmed copies only destroy frames.
bool check_delivery_crossover() {
  const double t_i = 0.10;
  bool ok = true;

  const int small_sizes[] = {10, 20, 40};
  int prefix = 0;
  for (int s = 0; s < 3; ++s) {
    const double c8 =
        mean_of(over_seeds(small_sizes[s], t_i, true, 8, 1, &ResultRow::pdr));
    const double u1 =
        mean_of(over_seeds(small_sizes[s], t_i, false, 1, 1, &ResultRow::pdr));
    note(fmt("%2d devices: confirmed x8 %.4f vs unconfirmed x1 %.4f",
             small_sizes[s], c8, u1));
    if (prefix == s && c8 + 1e-9 >= u1) prefix++;
  }
  if (prefix == 3)
    note("confirmed x8 leads across the whole small-population range");
  else
    note(fmt("confirmed x8 leads below %d devices", small_sizes[prefix]));
  ok &= expect(prefix >= 1,
               "confirmed x8 must beat unconfirmed x1 at 10 devices");

  for (int size : {200, 400}) {
    const double u1 =
        mean_of(over_seeds(size, t_i, false, 1, 1, &ResultRow::pdr));
    const double u8 =
        mean_of(over_seeds(size, t_i, false, 8, 1, &ResultRow::pdr));
    note(fmt("%3d devices: unconfirmed x1 %.4f vs x8 %.4f", size, u1, u8));
    ok &= expect(u1 > u8,
                 fmt("extra copies must hurt at %d devices", size));
  }
  return ok;
}

// 10. Equal seeds replay byte-identical outputs, for a traced single point
// and for a sweep.
bool check_determinism() {
  bool ok = true;
  {
    ScenarioConfig cfg;
    cfg.scenario = 2;
    cfg.seed = 5;
    cfg.devices = {20};
    cfg.t_i = {1.0};
    cfg.confirmed = {true};
    cfg.max_tx = {8};
    cfg.m_c = {3};
    cfg.duration_s = 7200.0;
    cfg.trace = true;
    std::string results[2], traces[2];
    for (int pass = 0; pass < 2; ++pass) {
      std::vector<TraceRow> trace;
      const ResultRow row = run_single_point(cfg, &trace);
      std::ostringstream rs, ts;
      write_results_csv({row}, rs);
      write_trace_csv(trace, ts);
      results[pass] = rs.str();
      traces[pass] = ts.str();
    }
    note(fmt("traced point: %zu result bytes, %zu trace bytes",
             results[0].size(), traces[0].size()));
    ok &= expect(results[0] == results[1], "traced point results differ");
    ok &= expect(traces[0] == traces[1], "traced point traces differ");
    ok &= expect(traces[0].size() > 1000, "trace suspiciously small");
  }
  {
    ScenarioConfig cfg;
    cfg.scenario = 1;
    cfg.seed = 3;
    cfg.sf = {7, 12};
    cfg.distance_m = {1000.0, 3000.0, 5000.0};
    cfg.packets_per_point = 20;
    std::string sweeps[2];
    for (int pass = 0; pass < 2; ++pass) {
      std::ostringstream out;
      write_results_csv(run_scenarios(cfg), out);
      sweeps[pass] = out.str();
    }
    note(fmt("distance sweep: %zu csv bytes", sweeps[0].size()));
    ok &= expect(sweeps[0] == sweeps[1], "sweep results differ");
  }
  return ok;
}

// 11. Exhaustive pairwise reception matrix at a 6 dB capture margin:
// different channels or spreading factors never interfere, a co-channel
// same-factor overlap destroys both frames when the gap is under 6 dB, and
// from 6 dB up exactly the stronger frame survives.
bool check_capture_matrix() {
  MediumParams mp;
  mp.capture_threshold_db = 6.0;
  const double base_dbm = -60.0;
  const double deltas[] = {-12.0, -6.01, -6.0, -5.999, -3.0, 0.0,
                           3.0,   5.999, 6.0,  6.01,   12.0};
  struct Pattern {
    const char* name;
    double offset;  // of B's start, in fractions of the corresponding airtime
    bool disjoint;
  };
  const Pattern patterns[] = {{"aligned", 0.0, false},
                              {"late", 0.5, false},
                              {"early", -0.5, false},
                              {"disjoint", 0.0, true}};
  bool ok = true;
  int cases = 0;
  for (int sf_a = 7; sf_a <= 12; ++sf_a) {
    for (int sf_b = 7; sf_b <= 12; ++sf_b) {
      const double air_a = data_airtime(sf_a);
      const double air_b = data_airtime(sf_b);
      for (int ch_b : {0, 1}) {
        for (double delta : deltas) {
          for (const Pattern& pat : patterns) {
            const double start_a = 100.0;
            double start_b;
            if (pat.disjoint)
              start_b = start_a + air_a + 1.0;
            else if (pat.offset >= 0.0)
              start_b = start_a + pat.offset * air_a;
            else
              start_b = start_a + pat.offset * air_b;

            Medium medium(mp);
            Frame fa, fb;
            fa.sender = 0;
            fb.sender = 1;
            const auto id_a = medium.begin(fa, Direction::kUp, 0, sf_a,
                                           base_dbm + delta, start_a,
                                           start_a + air_a);
            const auto id_b = medium.begin(fb, Direction::kUp, ch_b, sf_b,
                                           base_dbm, start_b,
                                           start_b + air_b);
            const ReceptionOutcome out_a = medium.end(id_a).outcome;
            const ReceptionOutcome out_b = medium.end(id_b).outcome;

            const bool interfere = !pat.disjoint && ch_b == 0 && sf_a == sf_b;
            ReceptionOutcome want_a = ReceptionOutcome::kReceived;
            ReceptionOutcome want_b = ReceptionOutcome::kReceived;
            if (interfere) {
              if (delta >= 6.0)
                want_b = ReceptionOutcome::kLostCollision;
              else if (delta <= -6.0)
                want_a = ReceptionOutcome::kLostCollision;
              else
                want_a = want_b = ReceptionOutcome::kLostCollision;
            }
            cases++;
            ok &= expect(out_a == want_a && out_b == want_b,
                         fmt("sf%d vs sf%d ch%d delta %+.3f %s: got %d/%d "
                             "want %d/%d",
                             sf_a, sf_b, ch_b, delta, pat.name,
                             static_cast<int>(out_a), static_cast<int>(out_b),
                             static_cast<int>(want_a),
                             static_cast<int>(want_b)));
          }
        }
      }
    }
  }
  note(fmt("%d pairwise cases checked", cases));
  return ok;
}

// 12. Uniform disc placement: the mean radius of 1e5 points sits within 1%
// of two thirds of the radius, every point stays inside the disc, and the
// four quadrants hold equal shares.
bool check_disc_placement() {
  const int n = 100000;
  const double radius = 5000.0;
  const auto pts = place_devices_uniform_disc(n, radius, 1);
  double sum_r = 0.0, max_r = 0.0;
  int quadrant[4] = {0, 0, 0, 0};
  for (const auto& [x, y] : pts) {
    const double r = std::hypot(x, y);
    sum_r += r;
    max_r = std::max(max_r, r);
    quadrant[(x >= 0.0 ? 0 : 1) + (y >= 0.0 ? 0 : 2)]++;
  }
  const double mean_r = sum_r / n;
  const double want_r = 2.0 * radius / 3.0;
  note(fmt("mean radius %.1f m (expect %.1f), max %.1f m", mean_r, want_r,
           max_r));
  note(fmt("quadrant shares %.4f %.4f %.4f %.4f",
           quadrant[0] / static_cast<double>(n),
           quadrant[1] / static_cast<double>(n),
           quadrant[2] / static_cast<double>(n),
           quadrant[3] / static_cast<double>(n)));
  bool ok = expect(std::fabs(mean_r - want_r) <= 0.01 * want_r,
                   "mean radius off by more than 1%");
  ok &= expect(max_r <= radius + 1e-9, "a point escaped the disc");
  for (int q = 0; q < 4; ++q)
    ok &= expect(std::fabs(quadrant[q] / static_cast<double>(n) - 0.25) <=
                     0.01,
                 fmt("quadrant %d share off by more than 0.01", q));
  return ok;
}

struct Criterion {
  int id;
  const char* title;
  bool (*fn)();
};

const Criterion kCriteria[] = {
    {1, "time on air matches closed-form references", check_airtime_references},
    {2, "duty cycle holds in every sliding window", check_duty_windows},
    {3, "frame rate tracks the closed-form sending rate", check_rate_oracle},
    {4, "delivery collapses at the expected distances", check_distance_cliff},
    {5, "throughput orders by spreading factor", check_throughput_ordering},
    {6, "utilization grows with population, unconfirmed ahead",
     check_population_utilization},
    {7, "utilization non-decreasing in offered intensity",
     check_intensity_utilization},
    {8, "retries never hurt delivery, channels equalize modes",
     check_retry_delivery},
    {9, "retries help small populations, copies hurt saturated ones",
     check_delivery_crossover},
    {10, "equal seeds replay byte-identical outputs", check_determinism},
    {11, "pairwise capture matrix follows the 6 dB rule", check_capture_matrix},
    {12, "disc placement is uniform", check_disc_placement},
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--check") == 0 && i + 1 < argc) {
      selected = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--check N]\n");
      return 2;
    }
  }

  int failures = 0;
  int matched = 0;
  for (const Criterion& c : kCriteria) {
    if (selected != 0 && c.id != selected) continue;
    matched++;
    const bool ok = c.fn();
    std::printf("%s %2d %s\n", ok ? "PASS" : "FAIL", c.id, c.title);
    if (!ok) failures++;
  }
  if (matched == 0) {
    std::fprintf(stderr, "no such check: %d\n", selected);
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
