#include "tempograph/bus_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tempograph/error.hpp"

namespace tempograph {

namespace {

BusScenario replicate(const BusScenario &base, std::size_t n) {
  BusScenario s;
  s.bus_position = base.bus_position;
  s.word_transfer_time = base.word_transfer_time;
  s.cores.assign(n, base.cores.front());
  return s;
}

void require_sweep(const BusScenario &base,
                   std::span<const std::size_t> n_list) {
  validate(base);
  if (n_list.empty())
    throw InvalidInput("sweep_cores: empty list of core counts");
  for (std::size_t n : n_list)
    if (n == 0)
      throw InvalidInput("sweep_cores: core count must be at least 1");
}

} // namespace

void validate(const BusScenario &s) {
  if (s.cores.empty())
    throw InvalidInput("bus scenario: no cores");
  if (!is_finite(s.bus_position))
    throw InvalidInput("bus scenario: non-finite bus position");
  if (!std::isfinite(s.word_transfer_time) || s.word_transfer_time < 0.0)
    throw InvalidInput("bus scenario: negative word transfer time");
  for (const ComputingElement &c : s.cores) {
    if (!is_finite(c.position))
      throw InvalidInput("bus scenario: core '" + c.id +
                         "' has a non-finite position");
    if (!std::isfinite(c.processing_time) || c.processing_time < 0.0)
      throw InvalidInput("bus scenario: core '" + c.id +
                         "' has a negative processing time");
  }
}

BusTimeline simulate_bus(const BusScenario &s) {
  validate(s);
  const std::size_t n = s.cores.size();
  std::vector<double> dist(n);
  BusTimeline out;
  out.cores.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    dist[i] = transfer_time(s.cores[i].position, s.bus_position);
    CoreBusRecord &r = out.cores[i];
    r.core = i;
    r.request_sent = s.cores[i].processing_time;
    r.request_arrived = r.request_sent + dist[i];
  }

  out.grant_order.resize(n);
  std::iota(out.grant_order.begin(), out.grant_order.end(), std::size_t{0});
  std::stable_sort(out.grant_order.begin(), out.grant_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return out.cores[a].request_arrived <
                            out.cores[b].request_arrived;
                   });

  double bus_free = 0.0;
  for (std::size_t i : out.grant_order) {
    CoreBusRecord &r = out.cores[i];
    r.grant_issued = std::max(r.request_arrived, bus_free);
    r.grant_arrived = r.grant_issued + dist[i];
    r.data_at_bus = r.grant_arrived + dist[i];
    r.message_done = r.data_at_bus + s.word_transfer_time;
    bus_free = r.message_done;
    out.total_completion = std::max(out.total_completion, r.message_done);
  }
  return out;
}

std::vector<SweepPoint> sweep_cores(const BusScenario &base,
                                    std::span<const std::size_t> n_list) {
  require_sweep(base, n_list);
  std::vector<SweepPoint> out(n_list.size());
  const auto m = static_cast<std::ptrdiff_t>(n_list.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    const std::size_t n = n_list[i];
    out[i] = {n, simulate_bus(replicate(base, n)).total_completion};
  }
  return out;
}

namespace serial {

std::vector<SweepPoint> sweep_cores(const BusScenario &base,
                                    std::span<const std::size_t> n_list) {
  require_sweep(base, n_list);
  std::vector<SweepPoint> out;
  for (std::size_t n : n_list)
    out.push_back({n, simulate_bus(replicate(base, n)).total_completion});
  return out;
}

} // namespace serial

} // namespace tempograph
