#include "traffic.hpp"

namespace lorasim {

double lambda_from_intensity(double traffic_intensity, double airtime_s,
                             double duty) {
  if (traffic_intensity < 0.0)
    throw ConfigError("traffic_intensity must be non-negative");
  if (airtime_s <= 0.0)
    throw ConfigError("airtime_s must be positive");
  if (duty <= 0.0)
    throw ConfigError("duty must be positive");
  return traffic_intensity * duty / airtime_s;
}

}  // namespace lorasim
