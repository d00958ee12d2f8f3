#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tempograph/timespace.hpp"

namespace tempograph {

// Orchestrated "parallelized sequential" processing: the orchestrator does
// its initial sequential work, sends start commands one after the other,
// collects results one at a time and closes with sequential work.
struct DistributedScenario {
  ComputingElement orchestrator; // processing_time = initial sequential work
  std::vector<ComputingElement> fellows; // processing_time = parallel share
  double dispatch_time = 0.0; // orchestrator time per start command
  double collect_time = 0.0;  // orchestrator time per received result
  double closing_time = 0.0;
};

void validate(const DistributedScenario &scenario);

struct FellowRecord {
  std::size_t fellow = 0;
  double distance = 0.0;
  double command_sent = 0.0;
  double start = 0.0;
  double result_ready = 0.0;
  double result_arrived = 0.0;
  double receive_start = 0.0;
  double receive_end = 0.0;
};

struct DistributedTimeline {
  double init_end = 0.0;
  double dispatch_end = 0.0;
  std::vector<FellowRecord> fellows; // dispatch (= list) order
  std::vector<std::size_t> receive_order;
  double closing_start = 0.0;
  double total_time = 0.0;
  std::size_t critical_fellow = 0; // latest result arrival, lowest index on ties
};

DistributedTimeline simulate_distributed(const DistributedScenario &scenario);

// E = S / n with S = 1 / ((1 - alpha) + alpha / n).
double amdahl_efficiency(double alpha, std::uint64_t n);

struct AlphaEstimate {
  double alpha = 0.0; // clamped to [0, 1]
  double raw = 0.0;   // unclamped inverse
  bool clamped = false;
};

AlphaEstimate alpha_from_efficiency(double efficiency, std::uint64_t n);

// Row-major: result[i * n_grid.size() + j] = E(alpha_grid[i], n_grid[j]).
std::vector<double> efficiency_surface(std::span<const double> alpha_grid,
                                       std::span<const std::uint64_t> n_grid);

namespace serial {
std::vector<double> efficiency_surface(std::span<const double> alpha_grid,
                                       std::span<const std::uint64_t> n_grid);
} // namespace serial

} // namespace tempograph
