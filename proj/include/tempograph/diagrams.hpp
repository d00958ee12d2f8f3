#pragma once

#include "tempograph/bus_sim.hpp"
#include "tempograph/distributed.hpp"
#include "tempograph/gate_sim.hpp"
#include "tempograph/svg.hpp"

namespace tempograph {

// Lanes: inputs then gates. Each gate event becomes one payload (or
// provisional) arrow ending at the event time; each delivery of a value to a
// sink becomes one transfer.
Diagram gate_diagram(const Netlist &netlist, const Timeline &timeline);

// Lanes: cores then the bus.
Diagram bus_diagram(const BusScenario &scenario, const BusTimeline &timeline);

// Lanes: orchestrator then fellows.
Diagram distributed_diagram(const DistributedScenario &scenario,
                            const DistributedTimeline &timeline);

} // namespace tempograph
