#include "tempograph/diagrams.hpp"

#include <string>
#include <unordered_map>

#include "tempograph/error.hpp"

namespace tempograph {

Diagram gate_diagram(const Netlist &nl, const Timeline &timeline) {
  if (timeline.empty())
    throw InvalidInput("gate diagram: empty timeline");
  Diagram d;
  d.title = "gate timing";
  // net -> (driver lane, driver position)
  std::unordered_map<std::string, std::size_t> driver_lane;
  std::unordered_map<std::string, std::size_t> gate_lane;
  for (const InputTerminal &in : nl.inputs) {
    driver_lane[in.name] = d.lanes.size();
    d.lanes.push_back({in.name, "input", in.position});
  }
  for (const Gate &g : nl.gates) {
    driver_lane[g.output_net] = d.lanes.size();
    gate_lane[g.id] = d.lanes.size();
    d.lanes.push_back({g.id, "gate", g.position});
  }

  auto deliver = [&](const std::string &net, double t,
                     const std::string &label) {
    const std::size_t from = driver_lane.at(net);
    for (std::size_t gi = 0; gi < nl.gates.size(); ++gi) {
      const Gate &g = nl.gates[gi];
      for (const std::string &in : g.inputs) {
        if (in != net)
          continue;
        const double arrive =
            t + transfer_time(d.lanes[from].position, g.position);
        d.arrows.push_back({ArrowClass::Transfer, from, gate_lane.at(g.id), t,
                            arrive, label});
      }
    }
  };

  for (const Stimulus &s : nl.stimuli)
    deliver(s.input, s.time, s.input + "=" + to_char(s.value));
  for (const TimedEvent &e : timeline) {
    const Gate *g = nl.find_gate(e.gate_id);
    if (!g)
      throw InvalidInput("gate diagram: unknown gate '" + e.gate_id + "'");
    const std::size_t lane = gate_lane.at(g->id);
    const std::string label = e.net + "=" + to_char(e.value);
    d.arrows.push_back({e.provisional ? ArrowClass::Provisional
                                      : ArrowClass::Payload,
                        lane, lane, e.time - g->operating_time, e.time, label});
    deliver(e.net, e.time, label);
  }
  return d;
}

Diagram bus_diagram(const BusScenario &s, const BusTimeline &tl) {
  if (tl.cores.size() != s.cores.size() || tl.cores.empty())
    throw InvalidInput("bus diagram: timeline does not match scenario");
  Diagram d;
  d.title = "shared bus";
  for (const ComputingElement &c : s.cores)
    d.lanes.push_back({c.id, "core", c.position});
  const std::size_t bus = d.lanes.size();
  d.lanes.push_back({"bus", "bus", s.bus_position});

  for (const CoreBusRecord &r : tl.cores) {
    const std::size_t core = r.core;
    const std::string &id = s.cores[core].id;
    d.arrows.push_back(
        {ArrowClass::Payload, core, core, 0.0, r.request_sent, id + " compute"});
    d.arrows.push_back({ArrowClass::Transfer, core, bus, r.request_sent,
                        r.request_arrived, id + " request"});
    d.arrows.push_back({ArrowClass::Idle, core, core, r.request_sent,
                        r.grant_arrived, id + " waits for grant"});
    d.arrows.push_back({ArrowClass::Transfer, bus, core, r.grant_issued,
                        r.grant_arrived, id + " grant"});
    d.arrows.push_back({ArrowClass::Transfer, core, bus, r.grant_arrived,
                        r.data_at_bus, id + " data"});
    d.arrows.push_back({ArrowClass::Payload, bus, bus, r.data_at_bus,
                        r.message_done, id + " on bus"});
  }
  return d;
}

Diagram distributed_diagram(const DistributedScenario &s,
                            const DistributedTimeline &tl) {
  if (tl.fellows.size() != s.fellows.size() || tl.fellows.empty())
    throw InvalidInput("distributed diagram: timeline does not match scenario");
  Diagram d;
  d.title = "parallelized sequential processing";
  const std::size_t orch = 0;
  d.lanes.push_back({s.orchestrator.id, "orchestrator", s.orchestrator.position});
  for (const ComputingElement &f : s.fellows)
    d.lanes.push_back({f.id, "fellow", f.position});

  d.arrows.push_back({ArrowClass::Payload, orch, orch, 0.0, tl.init_end, "init"});
  for (const FellowRecord &r : tl.fellows) {
    const std::size_t lane = r.fellow + 1;
    const std::string &id = s.fellows[r.fellow].id;
    if (s.dispatch_time > 0.0)
      d.arrows.push_back({ArrowClass::Payload, orch, orch, r.command_sent,
                          r.command_sent + s.dispatch_time, "dispatch " + id});
    d.arrows.push_back({ArrowClass::Transfer, orch, lane, r.command_sent,
                        r.start, "start " + id});
    d.arrows.push_back(
        {ArrowClass::Idle, lane, lane, 0.0, r.start, id + " waits"});
    d.arrows.push_back(
        {ArrowClass::Payload, lane, lane, r.start, r.result_ready, id + " work"});
    d.arrows.push_back({ArrowClass::Transfer, lane, orch, r.result_ready,
                        r.result_arrived, "result " + id});
    if (r.receive_start > r.result_arrived)
      d.arrows.push_back({ArrowClass::Idle, orch, orch, r.result_arrived,
                          r.receive_start, "result " + id + " queued"});
    if (s.collect_time > 0.0)
      d.arrows.push_back({ArrowClass::Payload, orch, orch, r.receive_start,
                          r.receive_end, "collect " + id});
  }
  if (s.closing_time > 0.0)
    d.arrows.push_back({ArrowClass::Payload, orch, orch, tl.closing_start,
                        tl.total_time, "closing"});
  return d;
}

} // namespace tempograph
