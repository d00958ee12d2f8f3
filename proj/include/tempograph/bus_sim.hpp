#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tempograph/timespace.hpp"

namespace tempograph {

// Cores that all start computing at t = 0 and then each deliver one message
// over a single shared bus. The arbiter sits at the bus.
struct BusScenario {
  std::vector<ComputingElement> cores;
  TimePoint bus_position;
  double word_transfer_time = 0.0; // bus occupancy per message
};

void validate(const BusScenario &scenario);

struct CoreBusRecord {
  std::size_t core = 0;
  double request_sent = 0.0;
  double request_arrived = 0.0;
  double grant_issued = 0.0;
  double grant_arrived = 0.0;
  double data_at_bus = 0.0;
  double message_done = 0.0;

  bool operator==(const CoreBusRecord &) const = default;
};

struct BusTimeline {
  std::vector<CoreBusRecord> cores; // scenario order
  std::vector<std::size_t> grant_order;
  double total_completion = 0.0;
};

// Grants go out in request-arrival order (ties: lower core index); the next
// grant is issued when the message in flight has left the bus.
BusTimeline simulate_bus(const BusScenario &scenario);

struct SweepPoint {
  std::size_t n = 0;
  double total_completion = 0.0;

  bool operator==(const SweepPoint &) const = default;
};

// Replicates base.cores.front() n times at the same place, for each n.
// Points are computed in parallel; order follows n_list.
std::vector<SweepPoint> sweep_cores(const BusScenario &base,
                                    std::span<const std::size_t> n_list);

namespace serial {
std::vector<SweepPoint> sweep_cores(const BusScenario &base,
                                    std::span<const std::size_t> n_list);
} // namespace serial

} // namespace tempograph
