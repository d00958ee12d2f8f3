#pragma once

#include <span>
#include <string>
#include <vector>

#include "tempograph/timespace.hpp"

namespace tempograph {

// Public processor data. SI units throughout: die_area in m^2, clock in Hz.
struct ProcessorSpec {
  std::string name;
  int year = 0;
  double transistor_count = 0.0;
  double die_area = 0.0;
  double clock_frequency = 0.0;
};

void validate(const ProcessorSpec &spec);

struct DispersionReport {
  double d_min = 0.0; // m
  double d_max = 0.0; // m
  double t_t_min = 0.0;
  double t_t_max = 0.0;
  double t_p = 0.0; // clock period
  double proc_transfer_rel = 0.0;
  double cache_transfer_rel = 0.0;
  double dispersion = 0.0;
};

// Geometry given directly, for cases (like EDVAC) where the minimum
// element distance is known rather than derived from area / count.
struct DispersionGeometry {
  double d_min = 0.0;
  double d_max = 0.0;
  double t_p = 0.0;
  InteractionSpeed speed;
};

double min_distance(const ProcessorSpec &spec);
double max_distance(const ProcessorSpec &spec);

DispersionReport dispersion_report(const DispersionGeometry &geometry);
DispersionReport dispersion_report(const ProcessorSpec &spec,
                                   InteractionSpeed speed);

// EDVAC calibration: 3000 tubes in a 300 m^2 room, 30 cm critical spacing,
// one microsecond per operation, electromagnetic signal speed.
DispersionGeometry edvac_preset();

struct HistoryRow {
  std::string name;
  int year = 0;
  double proc_transfer_rel = 0.0;
  double cache_transfer_rel = 0.0;
  double dispersion = 0.0;

  bool operator==(const HistoryRow &) const = default;
};

// One row per spec, stably sorted by year. Rows are computed in parallel.
std::vector<HistoryRow> history_table(std::span<const ProcessorSpec> specs,
                                      InteractionSpeed speed);

namespace serial {
std::vector<HistoryRow> history_table(std::span<const ProcessorSpec> specs,
                                      InteractionSpeed speed);
} // namespace serial

} // namespace tempograph
