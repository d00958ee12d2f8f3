#include "tempograph/timespace.hpp"

#include <cmath>
#include <limits>

#include "tempograph/error.hpp"

namespace tempograph {

namespace {

double segment(const TimePoint &a, const TimePoint &b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double dz = b.z - a.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

void require_finite(const TimePoint &p, const char *what) {
  if (!is_finite(p))
    throw InvalidInput(std::string(what) + ": non-finite coordinate");
}

} // namespace

bool is_finite(const TimePoint &p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

InteractionSpeed::InteractionSpeed(double meters_per_second)
    : value_(meters_per_second) {
  if (!std::isfinite(meters_per_second) || meters_per_second <= 0.0)
    throw InvalidInput("interaction speed must be positive and finite");
}

double transfer_time(const TimePoint &from, const TimePoint &to,
                     std::span<const TimePoint> waypoints) {
  require_finite(from, "transfer_time");
  require_finite(to, "transfer_time");
  double total = 0.0;
  TimePoint at = from;
  for (const TimePoint &w : waypoints) {
    require_finite(w, "transfer_time waypoint");
    total += segment(at, w);
    at = w;
  }
  return total + segment(at, to);
}

TimePoint meters_to_timepoint(const std::array<double, 3> &coords_m,
                              InteractionSpeed speed) {
  const double v = speed.value();
  TimePoint p{coords_m[0] / v, coords_m[1] / v, coords_m[2] / v};
  require_finite(p, "meters_to_timepoint");
  return p;
}

double apparent_time(double t_p, double t_t) {
  if (!std::isfinite(t_p) || t_p <= 0.0)
    throw InvalidInput("apparent_time: processing time must be positive");
  if (!std::isfinite(t_t) || t_t < 0.0)
    throw InvalidInput("apparent_time: transfer time must be non-negative");
  return std::hypot(t_t, 2.0 * t_p + t_t);
}

ChainTiming chain_two(const ComputingElement &source,
                      const ComputingElement &observer,
                      std::span<const TimePoint> waypoints) {
  for (const ComputingElement *e : {&source, &observer}) {
    if (!std::isfinite(e->processing_time) || e->processing_time < 0.0)
      throw InvalidInput("chain_two: element '" + e->id +
                         "' has a negative processing time");
  }
  ChainTiming c;
  c.t_p_source = source.processing_time;
  c.t_p_observer = observer.processing_time;
  c.t_t = transfer_time(source.position, observer.position, waypoints);
  c.t_i = c.t_t;
  c.completion = c.t_p_source + c.t_t + c.t_p_observer;
  // Legs (t_t, completion); for equal processing times this is apparent_time.
  c.apparent = std::hypot(c.t_t, c.completion);
  if (c.t_p_source > 0.0)
    c.ratio_r = c.t_t / c.t_p_source;
  else
    c.ratio_r = c.t_t > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  return c;
}

} // namespace tempograph
