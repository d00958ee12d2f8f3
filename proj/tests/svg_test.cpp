#include <doctest.h>

#include <algorithm>
#include <string>

#include "tempograph/diagrams.hpp"
#include "tempograph/error.hpp"
#include "tempograph/svg.hpp"

using namespace tempograph;

namespace {

std::size_t count(const std::string &hay, const std::string &needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos;
       p = hay.find(needle, p + 1))
    ++n;
  return n;
}

std::size_t count_kind(const Diagram &d, ArrowClass k) {
  return std::count_if(d.arrows.begin(), d.arrows.end(),
                       [k](const Arrow &a) { return a.kind == k; });
}

} // namespace

TEST_CASE("zero-distance adder diagram") {
  Netlist nl = build_one_bit_adder(adder_layout(AdderLayout::Zero), 1.0);
  set_adder_inputs(nl, true, true, false);
  const Timeline tl = simulate(nl);
  const Diagram d = gate_diagram(nl, tl);
  CHECK(std::count_if(d.lanes.begin(), d.lanes.end(),
                      [](const Lane &l) { return l.role == "gate"; }) == 5);
  double last_head = 0;
  for (const Arrow &a : d.arrows)
    if (a.kind == ArrowClass::Payload || a.kind == ArrowClass::Provisional)
      last_head = std::max(last_head, a.t1);
  CHECK(last_head == 3.0);
  // One arrow per event, of exactly one class.
  CHECK(count_kind(d, ArrowClass::Payload) + count_kind(d, ArrowClass::Provisional) ==
        tl.size());
  CHECK(count_kind(d, ArrowClass::Provisional) == 2);

  const std::string svg = render_svg(d);
  CHECK(count(svg, "class=\"lane gate\"") == 5);
  CHECK(count(svg, "class=\"lane input\"") == 3);
  CHECK(count(svg, "class=\"provisional\"") == 2);
  CHECK(svg.find("data-t1=\"3\"") != std::string::npos);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
  CHECK(render_svg(d) == svg);
}

TEST_CASE("single buffer diagram: two lanes, one transfer, one payload") {
  Netlist nl;
  nl.inputs = {{"src", {0, 0, 0}}};
  nl.gates = {{"B", GateKind::Buf, {1, 0, 0}, 0.5, {"src"}, "out"}};
  nl.stimuli = {{"src", 0, LogicValue::One}};
  const Diagram d = gate_diagram(nl, simulate(nl));
  CHECK(d.lanes.size() == 2);
  CHECK(count_kind(d, ArrowClass::Transfer) == 1);
  CHECK(count_kind(d, ArrowClass::Payload) == 1);
  const Arrow &transfer = *std::find_if(d.arrows.begin(), d.arrows.end(), [](auto &a) {
    return a.kind == ArrowClass::Transfer;
  });
  CHECK(transfer.from_lane != transfer.to_lane);
  CHECK(transfer.t0 == 0.0);
  CHECK(transfer.t1 == 1.0);
  const std::string svg = render_svg(d);
  CHECK(count(svg, "class=\"transfer\"") == 1);
  CHECK(count(svg, "class=\"payload\"") == 1);
}

TEST_CASE("bus diagram on the two-core geometry") {
  const BusScenario s{{{"c0", {-0.3, 0, 0}, 1.0}, {"c1", {0.6, 0, 0}, 1.0}},
                      {0, 0.5, 0},
                      0.1};
  const Diagram d = bus_diagram(s, simulate_bus(s));
  REQUIRE(d.lanes.size() == 3);
  CHECK(d.lanes[2].role == "bus");
  CHECK(d.lanes[2].position == TimePoint{0, 0.5, 0});
  std::size_t to_bus = 0, from_bus = 0;
  for (const Arrow &a : d.arrows) {
    if (a.kind != ArrowClass::Transfer)
      continue;
    CHECK(a.t1 > a.t0); // every hop crosses a nonzero distance
    to_bus += a.to_lane == 2;
    from_bus += a.from_lane == 2;
  }
  CHECK(to_bus == 4);   // request + data per core
  CHECK(from_bus == 2); // grants
  const std::string svg = render_svg(d);
  CHECK(count(svg, "class=\"transfer\"") == 6);
  CHECK(count(svg, "class=\"idle\"") == 0); // idle waiting stays blank
}

TEST_CASE("distributed diagram") {
  DistributedScenario s;
  s.orchestrator = {"orch", {0, 0.5, 0}, 1};
  s.fellows = {{"f0", {-0.5, 0, 0}, 3}, {"f1", {1, 0, 0}, 3}};
  s.dispatch_time = 0.1;
  s.collect_time = 0.2;
  s.closing_time = 1;
  const Diagram d = distributed_diagram(s, simulate_distributed(s));
  CHECK(d.lanes.size() == 3);
  CHECK(count_kind(d, ArrowClass::Transfer) == 4);
  CHECK(!render_svg(d).empty());
}

TEST_CASE("render errors") {
  CHECK_THROWS_AS(render_svg(Diagram{}), InvalidInput);
  Netlist nl;
  nl.inputs = {{"a", {}}, {"b", {}}};
  nl.gates = {{"G", GateKind::And, {}, 1, {"a", "b"}, "y"}};
  nl.stimuli = {{"a", 0, LogicValue::One}};
  CHECK_THROWS_AS(gate_diagram(nl, simulate(nl)), InvalidInput);

  Diagram d;
  d.lanes = {{"x", "gate", {}}};
  d.arrows = {{ArrowClass::Payload, 0, 0, 0, 1, ""}};
  RenderSpec tiny;
  tiny.width = 0;
  CHECK_THROWS_AS(render_svg(d, tiny), InvalidInput);
  d.arrows[0].to_lane = 4;
  CHECK_THROWS_AS(render_svg(d), InvalidInput);
}

TEST_CASE("labels are escaped") {
  Diagram d;
  d.title = "a<b & c";
  d.lanes = {{"x\"y", "gate", {}}};
  d.arrows = {{ArrowClass::Payload, 0, 0, 0, 1, "<tag>"}};
  const std::string svg = render_svg(d);
  CHECK(svg.find("a&lt;b &amp; c") != std::string::npos);
  CHECK(svg.find("x&quot;y") != std::string::npos);
  CHECK(svg.find("&lt;tag&gt;") != std::string::npos);
}
