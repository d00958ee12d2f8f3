#pragma once

#include <array>
#include <span>
#include <string>

namespace tempograph {

// A position in time-space. Every coordinate is the time a signal at the
// interaction speed needs to cover that spatial offset, in seconds.
struct TimePoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const TimePoint &) const = default;
};

bool is_finite(const TimePoint &p);

struct ComputingElement {
  std::string id;
  TimePoint position;
  double processing_time = 0.0;
};

// Interaction (signal propagation) speed in m/s. Only needed when positions
// come in meters.
class InteractionSpeed {
public:
  static constexpr double kDefault = 3.0e8;

  InteractionSpeed() = default;
  explicit InteractionSpeed(double meters_per_second);

  double value() const { return value_; }

private:
  double value_ = kDefault;
};

// Timing of a source element feeding an observer element.
struct ChainTiming {
  double t_p_source = 0.0;
  double t_p_observer = 0.0;
  double t_t = 0.0;        // transfer
  double t_i = 0.0;        // idle waiting of the observer
  double completion = 0.0; // projection on the time axis
  double apparent = 0.0;   // length of the resultant time-space vector
  double ratio_r = 0.0;    // t_t / t_p_source
};

// Length of the polyline from -> waypoints... -> to.
double transfer_time(const TimePoint &from, const TimePoint &to,
                     std::span<const TimePoint> waypoints = {});

TimePoint meters_to_timepoint(const std::array<double, 3> &coords_m,
                              InteractionSpeed speed);

// sqrt(t_t^2 + (2 t_p + t_t)^2), i.e. t_p * sqrt(R^2 + (2 + R)^2).
double apparent_time(double t_p, double t_t);

ChainTiming chain_two(const ComputingElement &source,
                      const ComputingElement &observer,
                      std::span<const TimePoint> waypoints = {});

} // namespace tempograph
