#include "tempograph/dispersion.hpp"

#include <algorithm>
#include <cmath>

#include "tempograph/error.hpp"

namespace tempograph {

namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

HistoryRow make_row(const ProcessorSpec &spec, InteractionSpeed speed) {
  const DispersionReport r = dispersion_report(spec, speed);
  return {spec.name, spec.year, r.proc_transfer_rel, r.cache_transfer_rel,
          r.dispersion};
}

void sort_by_year(std::vector<HistoryRow> &rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const HistoryRow &a, const HistoryRow &b) {
                     return a.year < b.year;
                   });
}

void require_rows(std::span<const ProcessorSpec> specs) {
  if (specs.empty())
    throw InvalidInput("history_table: no processor specs");
  for (const ProcessorSpec &s : specs)
    validate(s);
}

} // namespace

void validate(const ProcessorSpec &spec) {
  const std::string who = "processor '" + spec.name + "': ";
  if (spec.year < 1940 || spec.year > 2100)
    throw InvalidInput(who + "year outside [1940, 2100]");
  if (!positive(spec.transistor_count))
    throw InvalidInput(who + "transistor count must be positive");
  if (!positive(spec.die_area))
    throw InvalidInput(who + "die area must be positive");
  if (!positive(spec.clock_frequency))
    throw InvalidInput(who + "clock frequency must be positive");
}

double min_distance(const ProcessorSpec &spec) {
  validate(spec);
  return std::sqrt(spec.die_area / spec.transistor_count);
}

double max_distance(const ProcessorSpec &spec) {
  validate(spec);
  return std::sqrt(spec.die_area);
}

DispersionReport dispersion_report(const DispersionGeometry &g) {
  if (!positive(g.d_min) || !positive(g.d_max) || g.d_min > g.d_max)
    throw InvalidInput("dispersion: need 0 < d_min <= d_max");
  if (!positive(g.t_p))
    throw InvalidInput("dispersion: processing time must be positive");
  const double v = g.speed.value();
  DispersionReport r;
  r.d_min = g.d_min;
  r.d_max = g.d_max;
  r.t_t_min = g.d_min / v;
  r.t_t_max = g.d_max / v;
  r.t_p = g.t_p;
  r.proc_transfer_rel = r.t_t_min / r.t_p;
  // Cache sits half a die away.
  r.cache_transfer_rel = (g.d_max / 2.0) / v / r.t_p;
  r.dispersion = std::sqrt(r.t_t_min * r.t_t_max) / r.t_p;
  return r;
}

DispersionReport dispersion_report(const ProcessorSpec &spec,
                                   InteractionSpeed speed) {
  return dispersion_report(DispersionGeometry{
      min_distance(spec), max_distance(spec), 1.0 / spec.clock_frequency,
      speed});
}

DispersionGeometry edvac_preset() {
  return DispersionGeometry{0.3, std::sqrt(300.0), 1.0e-6,
                            InteractionSpeed(3.0e8)};
}

std::vector<HistoryRow> history_table(std::span<const ProcessorSpec> specs,
                                      InteractionSpeed speed) {
  require_rows(specs);
  std::vector<HistoryRow> rows(specs.size());
  const auto n = static_cast<std::ptrdiff_t>(specs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    rows[i] = make_row(specs[i], speed);
  sort_by_year(rows);
  return rows;
}

namespace serial {

std::vector<HistoryRow> history_table(std::span<const ProcessorSpec> specs,
                                      InteractionSpeed speed) {
  require_rows(specs);
  std::vector<HistoryRow> rows;
  rows.reserve(specs.size());
  for (const ProcessorSpec &s : specs)
    rows.push_back(make_row(s, speed));
  sort_by_year(rows);
  return rows;
}

} // namespace serial

} // namespace tempograph
