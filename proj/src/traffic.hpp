#ifndef LORASIM_TRAFFIC_HPP
#define LORASIM_TRAFFIC_HPP

#include <limits>

#include "phy.hpp"
#include "rng.hpp"

namespace lorasim {

/// Rate that produces a given traffic intensity: intensity is the offered
/// airtime relative to the duty-cycle ceiling, so lambda = t_i * duty / airtime.
double lambda_from_intensity(double traffic_intensity, double airtime_s,
                             double duty);

/// Poisson packet arrivals for one device. A zero rate is a device that
/// never generates traffic.
class ArrivalProcess {
 public:
  ArrivalProcess(double lambda_pps, Rng rng) : lambda_(lambda_pps), rng_(rng) {
    if (lambda_pps < 0.0)
      throw ConfigError("lambda_pps must be non-negative");
  }

  double rate() const { return lambda_; }

  /// Next arrival strictly after `prev`; +inf when the rate is zero.
  double next_after(double prev) {
    if (lambda_ <= 0.0) return std::numeric_limits<double>::infinity();
    return prev + rng_.next_exponential(lambda_);
  }

 private:
  double lambda_;
  Rng rng_;
};

}  // namespace lorasim

#endif
