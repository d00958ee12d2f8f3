#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tempograph/timespace.hpp"

namespace tempograph {

enum class LogicValue : std::uint8_t { Undefined, Zero, One };

enum class GateKind : std::uint8_t { And, Or, Xor, Not, Buf };

char to_char(LogicValue v);           // 'X', '0', '1'
std::string_view to_string(GateKind k); // "AND", ...
std::optional<GateKind> parse_gate_kind(std::string_view text);

// Three-valued evaluation: a controlling value (0 for AND, 1 for OR) decides
// the output even when other inputs are still Undefined.
LogicValue evaluate(GateKind kind, std::span<const LogicValue> inputs);

struct Gate {
  std::string id;
  GateKind kind = GateKind::Buf;
  TimePoint position;
  double operating_time = 0.0;
  std::vector<std::string> inputs;
  std::string output_net;
};

// A source terminal; it drives the net carrying its own name.
struct InputTerminal {
  std::string name;
  TimePoint position;
};

struct OutputPort {
  std::string name;
  std::string net;
};

struct Stimulus {
  std::string input;
  double time = 0.0;
  LogicValue value = LogicValue::Undefined;
};

struct Netlist {
  std::vector<Gate> gates;
  std::vector<InputTerminal> inputs;
  std::vector<OutputPort> outputs;
  std::vector<Stimulus> stimuli;

  const Gate *find_gate(std::string_view id) const;
  const InputTerminal *find_input(std::string_view name) const;
};

// Structural checks: pin counts, single driver per net, known nets, no
// combinational loop (CycleError names the loop).
void validate(const Netlist &netlist);

struct TimedEvent {
  double time = 0.0;
  std::string gate_id;
  std::string net;
  LogicValue value = LogicValue::Undefined;
  // Set while some input of the gate still carries a value that will be
  // superseded by a later stimulus effect.
  bool provisional = false;

  bool operator==(const TimedEvent &) const = default;
};

using Timeline = std::vector<TimedEvent>;

struct SimOptions {
  // Also emit Undefined-valued outputs (the "pointless" arrows of gates that
  // fired before seeing any defined input).
  bool emit_undefined = false;
};

Timeline simulate(const Netlist &netlist, const SimOptions &options = {});

// Independent runs, e.g. one per input combination. Parallel over netlists.
std::vector<Timeline> simulate_batch(std::span<const Netlist> netlists,
                                     const SimOptions &options = {});

namespace serial {
std::vector<Timeline> simulate_batch(std::span<const Netlist> netlists,
                                     const SimOptions &options = {});
} // namespace serial

struct Settle {
  bool settled = false; // false: never driven, or last event provisional
  double time = 0.0;
  LogicValue value = LogicValue::Undefined;
};

std::map<std::string, Settle> completion_times(const Timeline &timeline,
                                               std::span<const OutputPort> outputs);

// The five-gate full adder: aANDb, aXORb, cinANDaXORb, sum, cout.
// placement must hold AND1, XOR1, AND2, XOR2, OR1, a, b and cin.
Netlist build_one_bit_adder(const std::map<std::string, TimePoint> &placement,
                            double operating_time);

void set_adder_inputs(Netlist &adder, bool a, bool b, bool cin,
                      double time = 0.0);

enum class AdderLayout { Zero, Left, Right };

// Demo placements. Zero puts everything at the origin. Left/Right put inputs
// on the y axis (a, b, cin at y = 1, 2, 3) and the gates on the x axis
// (AND1 2, XOR1 3, AND2 4, OR1 5) with XOR2 at x = -1 or x = +1.
std::map<std::string, TimePoint> adder_layout(AdderLayout layout);

} // namespace tempograph
