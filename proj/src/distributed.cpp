#include "tempograph/distributed.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tempograph/error.hpp"

namespace tempograph {

namespace {

bool non_negative(double v) { return std::isfinite(v) && v >= 0.0; }

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw InvalidInput("parallel fraction must lie in [0, 1]");
}

void check_n(std::uint64_t n) {
  if (n < 1)
    throw InvalidInput("number of processing units must be at least 1");
}

double efficiency_unchecked(double alpha, std::uint64_t n) {
  // (1 - alpha) + alpha can round away from 1.
  if (n == 1)
    return 1.0;
  const double nd = static_cast<double>(n);
  return 1.0 / (nd * (1.0 - alpha) + alpha);
}

void check_grids(std::span<const double> alpha_grid,
                 std::span<const std::uint64_t> n_grid) {
  if (alpha_grid.empty() || n_grid.empty())
    throw InvalidInput("efficiency_surface: empty grid");
  std::for_each(alpha_grid.begin(), alpha_grid.end(), check_alpha);
  std::for_each(n_grid.begin(), n_grid.end(), check_n);
}

} // namespace

void validate(const DistributedScenario &s) {
  if (s.fellows.empty())
    throw InvalidInput("distributed scenario: no fellow processors");
  if (!non_negative(s.dispatch_time) || !non_negative(s.collect_time) ||
      !non_negative(s.closing_time))
    throw InvalidInput("distributed scenario: negative overhead time");
  auto check = [](const ComputingElement &e) {
    if (!is_finite(e.position))
      throw InvalidInput("distributed scenario: '" + e.id +
                         "' has a non-finite position");
    if (!non_negative(e.processing_time))
      throw InvalidInput("distributed scenario: '" + e.id +
                         "' has a negative work time");
  };
  check(s.orchestrator);
  std::for_each(s.fellows.begin(), s.fellows.end(), check);
}

DistributedTimeline simulate_distributed(const DistributedScenario &s) {
  validate(s);
  const std::size_t n = s.fellows.size();
  DistributedTimeline out;
  out.init_end = s.orchestrator.processing_time;
  out.fellows.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    FellowRecord &f = out.fellows[k];
    f.fellow = k;
    f.distance =
        transfer_time(s.orchestrator.position, s.fellows[k].position);
    f.command_sent = out.init_end + static_cast<double>(k) * s.dispatch_time;
    f.start = f.command_sent + f.distance;
    f.result_ready = f.start + s.fellows[k].processing_time;
    f.result_arrived = f.result_ready + f.distance;
  }
  out.dispatch_end = out.init_end + static_cast<double>(n) * s.dispatch_time;

  out.receive_order.resize(n);
  std::iota(out.receive_order.begin(), out.receive_order.end(), std::size_t{0});
  std::stable_sort(out.receive_order.begin(), out.receive_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return out.fellows[a].result_arrived <
                            out.fellows[b].result_arrived;
                   });

  // Receptions are serialized and cannot start while still dispatching.
  double busy_until = out.dispatch_end;
  for (std::size_t k : out.receive_order) {
    FellowRecord &f = out.fellows[k];
    f.receive_start = std::max(f.result_arrived, busy_until);
    f.receive_end = f.receive_start + s.collect_time;
    busy_until = f.receive_end;
  }
  out.closing_start = busy_until;
  out.total_time = out.closing_start + s.closing_time;

  out.critical_fellow = 0;
  for (std::size_t k = 1; k < n; ++k)
    if (out.fellows[k].result_arrived >
        out.fellows[out.critical_fellow].result_arrived)
      out.critical_fellow = k;
  return out;
}

double amdahl_efficiency(double alpha, std::uint64_t n) {
  check_alpha(alpha);
  check_n(n);
  return efficiency_unchecked(alpha, n);
}

AlphaEstimate alpha_from_efficiency(double e, std::uint64_t n) {
  if (n < 2)
    throw InvalidInput("alpha_from_efficiency: needs at least 2 units");
  if (!(e > 0.0) || !std::isfinite(e))
    throw InvalidInput("alpha_from_efficiency: efficiency must be positive");
  const double nd = static_cast<double>(n);
  AlphaEstimate a;
  a.raw = (1.0 / e - nd) / (1.0 - nd);
  a.alpha = std::clamp(a.raw, 0.0, 1.0);
  a.clamped = a.alpha != a.raw;
  return a;
}

std::vector<double> efficiency_surface(std::span<const double> alpha_grid,
                                       std::span<const std::uint64_t> n_grid) {
  check_grids(alpha_grid, n_grid);
  const auto rows = static_cast<std::ptrdiff_t>(alpha_grid.size());
  const auto cols = static_cast<std::ptrdiff_t>(n_grid.size());
  std::vector<double> out(alpha_grid.size() * n_grid.size());
#pragma omp parallel for collapse(2) schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i)
    for (std::ptrdiff_t j = 0; j < cols; ++j)
      out[i * cols + j] = efficiency_unchecked(alpha_grid[i], n_grid[j]);
  return out;
}

namespace serial {

std::vector<double> efficiency_surface(std::span<const double> alpha_grid,
                                       std::span<const std::uint64_t> n_grid) {
  check_grids(alpha_grid, n_grid);
  std::vector<double> out;
  out.reserve(alpha_grid.size() * n_grid.size());
  for (double alpha : alpha_grid)
    for (std::uint64_t n : n_grid)
      out.push_back(efficiency_unchecked(alpha, n));
  return out;
}

} // namespace serial

} // namespace tempograph
