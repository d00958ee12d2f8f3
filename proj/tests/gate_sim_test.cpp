#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "tempograph/error.hpp"
#include "tempograph/gate_sim.hpp"

using namespace tempograph;
using V = LogicValue;

namespace {

Netlist adder(AdderLayout layout, bool a, bool b, bool cin, double op = 1.0) {
  Netlist nl = build_one_bit_adder(adder_layout(layout), op);
  set_adder_inputs(nl, a, b, cin);
  return nl;
}

Netlist single_buf() {
  Netlist nl;
  nl.inputs = {{"src", {0, 0, 0}}};
  nl.gates = {{"B", GateKind::Buf, {1, 0, 0}, 0.5, {"src"}, "out"}};
  nl.outputs = {{"out", "out"}};
  nl.stimuli = {{"src", 0.0, V::One}};
  return nl;
}

V bit(bool b) { return b ? V::One : V::Zero; }

std::map<std::string, TimePoint> random_placement(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::map<std::string, TimePoint> m;
  for (const char *id : {"a", "b", "cin", "AND1", "XOR1", "AND2", "XOR2", "OR1"})
    m[id] = {u(rng), u(rng), 0.0};
  return m;
}

} // namespace

TEST_CASE("three-valued gate evaluation") {
  const std::vector<V> zu{V::Zero, V::Undefined};
  const std::vector<V> ou{V::One, V::Undefined};
  const std::vector<V> oo{V::One, V::One};
  CHECK(evaluate(GateKind::And, zu) == V::Zero);
  CHECK(evaluate(GateKind::And, ou) == V::Undefined);
  CHECK(evaluate(GateKind::And, oo) == V::One);
  CHECK(evaluate(GateKind::Or, ou) == V::One);
  CHECK(evaluate(GateKind::Or, zu) == V::Undefined);
  CHECK(evaluate(GateKind::Xor, ou) == V::Undefined);
  CHECK(evaluate(GateKind::Xor, oo) == V::Zero);
  CHECK(evaluate(GateKind::Xor, std::vector<V>{V::One, V::One, V::One}) == V::One);
  CHECK(evaluate(GateKind::Not, std::vector<V>{V::Undefined}) == V::Undefined);
  CHECK(evaluate(GateKind::Not, std::vector<V>{V::Zero}) == V::One);
  CHECK(evaluate(GateKind::Buf, std::vector<V>{V::Zero}) == V::Zero);
}

TEST_CASE("single buffer: one hop plus operating time") {
  const Timeline tl = simulate(single_buf());
  REQUIRE(tl.size() == 1);
  CHECK(tl[0] == TimedEvent{1.5, "B", "out", V::One, false});
  const auto settle = completion_times(tl, single_buf().outputs);
  CHECK(settle.at("out").settled);
  CHECK(settle.at("out").time == 1.5);
}

TEST_CASE("zero-distance adder 1+1+0: provisional carry before the final one") {
  const Netlist nl = adder(AdderLayout::Zero, true, true, false);
  const Timeline tl = simulate(nl);
  // Hand trace: t=1 first-level gates, t=2 sum and a provisional cout,
  // t=3 cout confirmed once cinANDaXORb is final.
  const Timeline expected{
      {1, "AND1", "aANDb", V::One, false},
      {1, "AND2", "cinANDaXORb", V::Zero, true},
      {1, "XOR1", "aXORb", V::Zero, false},
      {2, "AND2", "cinANDaXORb", V::Zero, false},
      {2, "OR1", "cout", V::One, true},
      {2, "XOR2", "sum", V::Zero, false},
      {3, "OR1", "cout", V::One, false},
  };
  CHECK(tl == expected);
  const auto settle = completion_times(tl, nl.outputs);
  CHECK(settle.at("sum").time == 2.0);
  CHECK(settle.at("sum").value == V::Zero);
  CHECK(settle.at("cout").time == 3.0);
  CHECK(settle.at("cout").value == V::One);
}

TEST_CASE("zero-distance adder all zeros") {
  const Netlist nl = adder(AdderLayout::Zero, false, false, false);
  const auto settle = completion_times(simulate(nl), nl.outputs);
  CHECK(settle.at("sum").value == V::Zero);
  CHECK(settle.at("cout").value == V::Zero);
  CHECK(settle.at("cout").time == 3.0);
  CHECK(settle.at("sum").time == 2.0);
}

TEST_CASE("zero-distance settle time is logic depth times operating time") {
  for (int v = 0; v < 8; ++v) {
    const Netlist nl = adder(AdderLayout::Zero, v & 1, v & 2, v & 4, 0.25);
    const auto settle = completion_times(simulate(nl), nl.outputs);
    CHECK(settle.at("sum").time == 0.5);
    CHECK(settle.at("cout").time == 0.75);
  }
}

TEST_CASE("no defined gate output means an empty timeline") {
  Netlist nl;
  nl.inputs = {{"a", {0, 0, 0}}, {"b", {1, 0, 0}}};
  nl.gates = {{"G", GateKind::And, {0, 1, 0}, 1.0, {"a", "b"}, "y"}};
  nl.outputs = {{"y", "y"}};
  nl.stimuli = {{"a", 0.0, V::One}};
  const Timeline tl = simulate(nl);
  CHECK(tl.empty());
  CHECK_FALSE(completion_times(tl, nl.outputs).at("y").settled);

  // With the flag the gate's undefined reaction becomes visible, once.
  const Timeline shown = simulate(nl, SimOptions{true});
  REQUIRE(shown.size() == 1);
  CHECK(shown[0].value == V::Undefined);
  CHECK(shown[0].time == 2.0);
  // b is never stimulated, so a's arrival is the last influence G can get.
  CHECK_FALSE(shown[0].provisional);
  const auto settle = completion_times(shown, nl.outputs);
  CHECK(settle.at("y").settled);
  CHECK(settle.at("y").value == V::Undefined);
}

TEST_CASE("exhaustive adder truth table against Boolean and timing oracles") {
  std::mt19937_64 rng(2024);
  std::vector<std::map<std::string, TimePoint>> layouts{
      adder_layout(AdderLayout::Zero), adder_layout(AdderLayout::Left),
      adder_layout(AdderLayout::Right)};
  for (int i = 0; i < 20; ++i)
    layouts.push_back(random_placement(rng));
  for (const auto &layout : layouts) {
    for (int v = 0; v < 8; ++v) {
      const bool a = v & 1, b = v & 2, cin = v & 4;
      Netlist nl = build_one_bit_adder(layout, 0.75);
      set_adder_inputs(nl, a, b, cin);
      const auto settle = completion_times(simulate(nl), nl.outputs);
      const int total = a + b + cin;
      const auto logic = oracle::boolean_eval(nl);
      const auto when = oracle::settle_times(nl);
      CHECK(settle.at("sum").settled);
      CHECK(settle.at("cout").settled);
      CHECK(settle.at("sum").value == bit(total & 1));
      CHECK(settle.at("cout").value == bit(total >= 2));
      CHECK(settle.at("sum").value == bit(logic.at("sum")));
      CHECK(settle.at("sum").time == when.at("sum"));
      CHECK(settle.at("cout").time == when.at("cout"));
    }
  }
}

TEST_CASE("moving XOR2 across the y axis changes when sum settles") {
  const Netlist left = adder(AdderLayout::Left, true, false, true);
  const Netlist right = adder(AdderLayout::Right, true, false, true);
  const double t_left = completion_times(simulate(left), left.outputs).at("sum").time;
  const double t_right =
      completion_times(simulate(right), right.outputs).at("sum").time;
  CHECK(t_left != t_right);
  // XOR1 sits at x=3, so the left position is 2 time units farther.
  CHECK(t_left - t_right == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("causality: nothing happens before the fastest possible path") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 30; ++i) {
    const auto layout = random_placement(rng);
    for (int v = 0; v < 8; ++v) {
      Netlist nl = build_one_bit_adder(layout, 0.5);
      set_adder_inputs(nl, v & 1, v & 2, v & 4, 1.0);
      // Earliest possible output time per gate (shortest path).
      std::map<std::string, double> earliest{{"a", 1.0}, {"b", 1.0}, {"cin", 1.0}};
      std::map<std::string, TimePoint> at;
      for (const auto &in : nl.inputs)
        at[in.name] = in.position;
      for (const Gate &g : nl.gates) { // already in dependency order
        double e = INFINITY;
        for (const auto &n : g.inputs)
          e = std::min(e, earliest.at(n) + oracle::dist(at.at(n), g.position));
        earliest[g.output_net] = e + g.operating_time;
        at[g.output_net] = g.position;
      }
      for (const TimedEvent &ev : simulate(nl))
        CHECK(ev.time >= earliest.at(ev.net) - 1e-12);
    }
  }
}

TEST_CASE("pushing a gate away from its neighbours never speeds anything up") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto layout = random_placement(rng);
    for (const char *moved : {"AND1", "XOR1", "AND2", "XOR2", "OR1"}) {
      auto farther = layout;
      farther[moved].z = 1.5; // everything else lies in z = 0
      for (int v = 0; v < 8; ++v) {
        Netlist base = build_one_bit_adder(layout, 0.5);
        Netlist pushed = build_one_bit_adder(farther, 0.5);
        set_adder_inputs(base, v & 1, v & 2, v & 4);
        set_adder_inputs(pushed, v & 1, v & 2, v & 4);
        const auto s0 = completion_times(simulate(base), base.outputs);
        const auto s1 = completion_times(simulate(pushed), pushed.outputs);
        CHECK(s1.at("sum").time >= s0.at("sum").time);
        CHECK(s1.at("cout").time >= s0.at("cout").time);
      }
    }
  }
}

TEST_CASE("simulation is deterministic and the batch matches serial runs") {
  std::mt19937_64 rng(17);
  std::vector<Netlist> batch;
  for (int i = 0; i < 40; ++i) {
    Netlist nl = build_one_bit_adder(random_placement(rng), 0.3);
    set_adder_inputs(nl, i & 1, i & 2, i & 4);
    batch.push_back(nl);
  }
  const auto par = simulate_batch(batch);
  const auto ser = serial::simulate_batch(batch);
  CHECK(par == ser);
  for (std::size_t i = 0; i < batch.size(); ++i)
    CHECK(simulate(batch[i]) == ser[i]);
}

TEST_CASE("timeline is ordered by time, then gate id, then net") {
  const Timeline tl = simulate(adder(AdderLayout::Zero, true, false, true));
  CHECK(std::is_sorted(tl.begin(), tl.end(), [](const auto &x, const auto &y) {
    return std::tie(x.time, x.gate_id, x.net) < std::tie(y.time, y.gate_id, y.net);
  }));
}

TEST_CASE("a later stimulus makes earlier reactions provisional") {
  Netlist nl = single_buf();
  nl.stimuli = {{"src", 0.0, V::Zero}, {"src", 2.0, V::One}};
  const Timeline tl = simulate(nl);
  REQUIRE(tl.size() == 2);
  CHECK(tl[0] == TimedEvent{1.5, "B", "out", V::Zero, true});
  CHECK(tl[1] == TimedEvent{3.5, "B", "out", V::One, false});
}

TEST_CASE("structural errors") {
  Netlist loop;
  loop.inputs = {{"a", {}}};
  loop.gates = {{"G1", GateKind::And, {}, 1, {"a", "n2"}, "n1"},
                {"G2", GateKind::Buf, {}, 1, {"n1"}, "n2"}};
  loop.stimuli = {{"a", 0, V::One}};
  try {
    simulate(loop);
    FAIL("expected a cycle error");
  } catch (const CycleError &e) {
    const std::string msg = e.what();
    CHECK(msg.find("G1") != std::string::npos);
    CHECK(msg.find("G2") != std::string::npos);
  }

  Netlist self = loop;
  self.gates = {{"G", GateKind::And, {}, 1, {"a", "y"}, "y"}};
  CHECK_THROWS_AS(simulate(self), CycleError);

  Netlist unknown = single_buf();
  unknown.gates[0].inputs = {"nowhere"};
  CHECK_THROWS_AS(simulate(unknown), InvalidInput);

  Netlist twice = single_buf();
  twice.gates.push_back({"C", GateKind::Buf, {}, 1, {"src"}, "out"});
  CHECK_THROWS_AS(validate(twice), InvalidInput);

  Netlist arity = single_buf();
  arity.gates[0].kind = GateKind::And;
  CHECK_THROWS_AS(validate(arity), InvalidInput);
  arity.gates[0].kind = GateKind::Not;
  arity.gates[0].inputs = {"src", "src"};
  CHECK_THROWS_AS(validate(arity), InvalidInput);

  Netlist no_stimuli = single_buf();
  no_stimuli.stimuli.clear();
  CHECK_THROWS_AS(simulate(no_stimuli), InvalidInput);

  Netlist bad_output = single_buf();
  bad_output.outputs = {{"o", "missing"}};
  CHECK_THROWS_AS(validate(bad_output), InvalidInput);

  CHECK_THROWS_AS(build_one_bit_adder({{"a", {}}}, 1.0), InvalidInput);
}
