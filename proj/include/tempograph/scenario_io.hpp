#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "tempograph/bus_sim.hpp"
#include "tempograph/csv.hpp"
#include "tempograph/distributed.hpp"

namespace tempograph {

// Scenario files are JSON objects.
//
// Bus:
//   {"cores": [{"id": "c0", "x": -0.3, "y": 0, "t_p": 1}, ...],
//    "bus": {"x": 0, "y": 0.5},
//    "word_transfer_time": 0.1}
//
// Distributed:
//   {"orchestrator": {"x": 0, "y": 0.5, "t_init": 1},
//    "fellows": [{"id": "f0", "x": -0.5, "y": 0, "work": 3}, ...],
//    "dispatch_time": 0.1, "collect_time": 0.1, "closing_time": 1}
//
// "id" and "z" are optional everywhere.
BusScenario parse_bus_scenario(std::istream &in);
BusScenario read_bus_scenario(const std::string &path);
DistributedScenario parse_distributed_scenario(std::istream &in);
DistributedScenario read_distributed_scenario(const std::string &path);

CsvTable bus_csv(const BusTimeline &timeline);
CsvTable sweep_csv(std::span<const SweepPoint> points);
CsvTable distributed_csv(const DistributedTimeline &timeline);

} // namespace tempograph
