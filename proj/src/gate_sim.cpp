#include "tempograph/gate_sim.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <utility>

#include "tempograph/error.hpp"

namespace tempograph {

char to_char(LogicValue v) {
  switch (v) {
  case LogicValue::Zero:
    return '0';
  case LogicValue::One:
    return '1';
  case LogicValue::Undefined:
    break;
  }
  return 'X';
}

std::string_view to_string(GateKind k) {
  switch (k) {
  case GateKind::And:
    return "AND";
  case GateKind::Or:
    return "OR";
  case GateKind::Xor:
    return "XOR";
  case GateKind::Not:
    return "NOT";
  case GateKind::Buf:
    break;
  }
  return "BUF";
}

std::optional<GateKind> parse_gate_kind(std::string_view text) {
  for (GateKind k : {GateKind::And, GateKind::Or, GateKind::Xor, GateKind::Not,
                     GateKind::Buf}) {
    if (to_string(k) == text)
      return k;
  }
  return std::nullopt;
}

LogicValue evaluate(GateKind kind, std::span<const LogicValue> in) {
  using V = LogicValue;
  const bool any_undef =
      std::find(in.begin(), in.end(), V::Undefined) != in.end();
  switch (kind) {
  case GateKind::Buf:
    return in.front();
  case GateKind::Not:
    if (in.front() == V::Undefined)
      return V::Undefined;
    return in.front() == V::One ? V::Zero : V::One;
  case GateKind::And:
    if (std::find(in.begin(), in.end(), V::Zero) != in.end())
      return V::Zero;
    return any_undef ? V::Undefined : V::One;
  case GateKind::Or:
    if (std::find(in.begin(), in.end(), V::One) != in.end())
      return V::One;
    return any_undef ? V::Undefined : V::Zero;
  case GateKind::Xor: {
    if (any_undef)
      return V::Undefined;
    const auto ones = std::count(in.begin(), in.end(), V::One);
    return ones % 2 ? V::One : V::Zero;
  }
  }
  return V::Undefined;
}

const Gate *Netlist::find_gate(std::string_view id) const {
  for (const Gate &g : gates)
    if (g.id == id)
      return &g;
  return nullptr;
}

const InputTerminal *Netlist::find_input(std::string_view name) const {
  for (const InputTerminal &i : inputs)
    if (i.name == name)
      return &i;
  return nullptr;
}

namespace {

// Driver encoding: gate index >= 0, input terminal i as -(i + 1).
struct NetInfo {
  int driver = 0;
  TimePoint position;
  std::vector<std::pair<int, int>> sinks; // (gate, pin)
  bool stimulated = false; // some stimulus in its transitive fan-in
};

struct Compiled {
  std::unordered_map<std::string, NetInfo> nets;
  std::vector<int> topo; // gate indices, drivers before sinks
};

Compiled compile(const Netlist &nl) {
  Compiled c;
  std::unordered_map<std::string, std::size_t> gate_ids;

  for (std::size_t i = 0; i < nl.inputs.size(); ++i) {
    const InputTerminal &in = nl.inputs[i];
    if (in.name.empty())
      throw InvalidInput("input terminal with empty name");
    if (!is_finite(in.position))
      throw InvalidInput("input '" + in.name + "': non-finite position");
    NetInfo info;
    info.driver = -static_cast<int>(i) - 1;
    info.position = in.position;
    if (!c.nets.emplace(in.name, std::move(info)).second)
      throw InvalidInput("net '" + in.name + "' has more than one driver");
  }
  for (std::size_t g = 0; g < nl.gates.size(); ++g) {
    const Gate &gate = nl.gates[g];
    if (!gate_ids.emplace(gate.id, g).second)
      throw InvalidInput("duplicate gate id '" + gate.id + "'");
    const bool unary = gate.kind == GateKind::Not || gate.kind == GateKind::Buf;
    if (unary && gate.inputs.size() != 1)
      throw InvalidInput("gate '" + gate.id + "': " +
                         std::string(to_string(gate.kind)) +
                         " takes exactly one input");
    if (!unary && gate.inputs.size() < 2)
      throw InvalidInput("gate '" + gate.id + "': " +
                         std::string(to_string(gate.kind)) +
                         " takes at least two inputs");
    if (std::find(gate.inputs.begin(), gate.inputs.end(), gate.output_net) !=
        gate.inputs.end())
      throw CycleError("gate '" + gate.id + "' feeds its own input: " +
                       gate.id + " -> " + gate.id);
    if (!std::isfinite(gate.operating_time) || gate.operating_time < 0.0)
      throw InvalidInput("gate '" + gate.id + "': negative operating time");
    if (!is_finite(gate.position))
      throw InvalidInput("gate '" + gate.id + "': non-finite position");
    NetInfo info;
    info.driver = static_cast<int>(g);
    info.position = gate.position;
    if (!c.nets.emplace(gate.output_net, std::move(info)).second)
      throw InvalidInput("net '" + gate.output_net +
                         "' has more than one driver");
  }
  for (std::size_t g = 0; g < nl.gates.size(); ++g) {
    const Gate &gate = nl.gates[g];
    for (std::size_t p = 0; p < gate.inputs.size(); ++p) {
      auto it = c.nets.find(gate.inputs[p]);
      if (it == c.nets.end())
        throw InvalidInput("gate '" + gate.id + "': unknown net '" +
                           gate.inputs[p] + "'");
      it->second.sinks.emplace_back(static_cast<int>(g), static_cast<int>(p));
    }
  }
  for (const OutputPort &o : nl.outputs) {
    if (!c.nets.count(o.net))
      throw InvalidInput("output '" + o.name + "': unknown net '" + o.net +
                         "'");
  }
  for (const Stimulus &s : nl.stimuli) {
    if (!nl.find_input(s.input))
      throw InvalidInput("stimulus on unknown input '" + s.input + "'");
    if (!std::isfinite(s.time))
      throw InvalidInput("stimulus on '" + s.input + "': non-finite time");
    if (s.value == LogicValue::Undefined)
      throw InvalidInput("stimulus on '" + s.input + "' must be 0 or 1");
    c.nets[s.input].stimulated = true;
  }

  // Depth-first topological order; a grey node reached again closes a loop.
  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(nl.gates.size(), Mark::White);
  std::vector<int> stack;
  auto visit = [&](auto &&self, int g) -> void {
    if (mark[g] == Mark::Black)
      return;
    if (mark[g] == Mark::Grey) {
      auto from = std::find(stack.begin(), stack.end(), g);
      std::string path;
      for (auto it = from; it != stack.end(); ++it)
        path += nl.gates[*it].id + " -> ";
      throw CycleError("combinational loop: " + path + nl.gates[g].id);
    }
    mark[g] = Mark::Grey;
    stack.push_back(g);
    for (const std::string &net : nl.gates[g].inputs) {
      const int d = c.nets.at(net).driver;
      if (d >= 0)
        self(self, d);
    }
    stack.pop_back();
    mark[g] = Mark::Black;
    c.topo.push_back(g);
  };
  for (std::size_t g = 0; g < nl.gates.size(); ++g)
    visit(visit, static_cast<int>(g));

  for (int g : c.topo) {
    const Gate &gate = nl.gates[g];
    bool stimulated = false;
    for (const std::string &net : gate.inputs)
      stimulated = stimulated || c.nets.at(net).stimulated;
    c.nets.at(gate.output_net).stimulated = stimulated;
  }
  return c;
}

struct Emission {
  int driver;
  LogicValue value;
  bool final;
};

struct Arrival {
  int gate;
  int pin;
  LogicValue value;
  bool final;
};

struct Step {
  std::vector<Emission> emissions;
  std::vector<Arrival> arrivals;
};

struct GateState {
  std::vector<LogicValue> pins;
  std::vector<bool> pin_final;
  std::optional<std::pair<LogicValue, bool>> last; // (value, final) scheduled
};

class Engine {
public:
  Engine(const Netlist &nl, const SimOptions &opt)
      : nl_(nl), opt_(opt), c_(compile(nl)) {
    state_.resize(nl.gates.size());
    for (std::size_t g = 0; g < nl.gates.size(); ++g) {
      const Gate &gate = nl.gates[g];
      GateState &s = state_[g];
      s.pins.assign(gate.inputs.size(), LogicValue::Undefined);
      s.pin_final.resize(gate.inputs.size());
      // A pin no stimulus can reach never changes again.
      for (std::size_t p = 0; p < gate.inputs.size(); ++p)
        s.pin_final[p] = !c_.nets.at(gate.inputs[p]).stimulated;
    }
  }

  Timeline run() {
    if (nl_.stimuli.empty())
      throw InvalidInput("simulate: netlist has no stimuli");
    schedule_stimuli();
    while (!queue_.empty()) {
      auto it = queue_.begin();
      const double t = it->first;
      Step &step = it->second;
      while (!step.emissions.empty() || !step.arrivals.empty()) {
        fire(t, std::exchange(step.emissions, {}));
        std::vector<int> dirty = apply(std::exchange(step.arrivals, {}));
        evaluate_dirty(t, dirty);
      }
      queue_.erase(queue_.begin());
    }
    std::stable_sort(timeline_.begin(), timeline_.end(),
                     [](const TimedEvent &a, const TimedEvent &b) {
                       if (a.time != b.time)
                         return a.time < b.time;
                       if (a.gate_id != b.gate_id)
                         return a.gate_id < b.gate_id;
                       return a.net < b.net;
                     });
    return std::move(timeline_);
  }

private:
  void schedule_stimuli() {
    // The last stimulus on an input is its final value.
    std::unordered_map<std::string, double> last_time;
    for (const Stimulus &s : nl_.stimuli) {
      auto [it, fresh] = last_time.emplace(s.input, s.time);
      if (!fresh)
        it->second = std::max(it->second, s.time);
    }
    std::unordered_map<std::string, std::size_t> last_index;
    for (std::size_t i = 0; i < nl_.stimuli.size(); ++i) {
      const Stimulus &s = nl_.stimuli[i];
      if (s.time == last_time.at(s.input))
        last_index[s.input] = i;
    }
    for (std::size_t i = 0; i < nl_.stimuli.size(); ++i) {
      const Stimulus &s = nl_.stimuli[i];
      const int driver = c_.nets.at(s.input).driver;
      queue_[s.time].emissions.push_back(
          {driver, s.value, last_index.at(s.input) == i});
    }
  }

  const std::string &driver_name(int driver) const {
    return driver >= 0 ? nl_.gates[driver].id
                       : nl_.inputs[-driver - 1].name;
  }

  const std::string &driven_net(int driver) const {
    return driver >= 0 ? nl_.gates[driver].output_net
                       : nl_.inputs[-driver - 1].name;
  }

  void fire(double t, std::vector<Emission> emissions) {
    std::stable_sort(emissions.begin(), emissions.end(),
                     [this](const Emission &a, const Emission &b) {
                       return driver_name(a.driver) < driver_name(b.driver);
                     });
    for (const Emission &e : emissions) {
      const std::string &net = driven_net(e.driver);
      if (e.driver >= 0)
        timeline_.push_back({t, nl_.gates[e.driver].id, net, e.value, !e.final});
      const NetInfo &info = c_.nets.at(net);
      for (const auto &[g, pin] : info.sinks) {
        const double arrive =
            t + transfer_time(info.position, nl_.gates[g].position);
        queue_[arrive].arrivals.push_back({g, pin, e.value, e.final});
      }
    }
  }

  std::vector<int> apply(const std::vector<Arrival> &arrivals) {
    std::vector<int> dirty;
    for (const Arrival &a : arrivals) {
      GateState &s = state_[a.gate];
      s.pins[a.pin] = a.value;
      s.pin_final[a.pin] = a.final;
      dirty.push_back(a.gate);
    }
    std::sort(dirty.begin(), dirty.end(), [this](int a, int b) {
      return nl_.gates[a].id < nl_.gates[b].id;
    });
    dirty.erase(std::unique(dirty.begin(), dirty.end()), dirty.end());
    return dirty;
  }

  void evaluate_dirty(double t, const std::vector<int> &dirty) {
    for (int g : dirty) {
      const Gate &gate = nl_.gates[g];
      GateState &s = state_[g];
      const LogicValue v = evaluate(gate.kind, s.pins);
      const bool final =
          std::all_of(s.pin_final.begin(), s.pin_final.end(),
                      [](bool f) { return f; });
      if (v == LogicValue::Undefined && !opt_.emit_undefined)
        continue;
      const std::pair<LogicValue, bool> next{v, final};
      if (s.last == next)
        continue;
      s.last = next;
      queue_[t + gate.operating_time].emissions.push_back({g, v, final});
    }
  }

  const Netlist &nl_;
  const SimOptions &opt_;
  Compiled c_;
  std::vector<GateState> state_;
  std::map<double, Step> queue_;
  Timeline timeline_;
};

} // namespace

void validate(const Netlist &netlist) { compile(netlist); }

Timeline simulate(const Netlist &netlist, const SimOptions &options) {
  return Engine(netlist, options).run();
}

std::vector<Timeline> simulate_batch(std::span<const Netlist> netlists,
                                     const SimOptions &options) {
  for (const Netlist &nl : netlists) {
    validate(nl);
    if (nl.stimuli.empty())
      throw InvalidInput("simulate: netlist has no stimuli");
  }
  std::vector<Timeline> out(netlists.size());
  const auto n = static_cast<std::ptrdiff_t>(netlists.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[i] = simulate(netlists[i], options);
  return out;
}

namespace serial {

std::vector<Timeline> simulate_batch(std::span<const Netlist> netlists,
                                     const SimOptions &options) {
  std::vector<Timeline> out;
  out.reserve(netlists.size());
  for (const Netlist &nl : netlists)
    out.push_back(simulate(nl, options));
  return out;
}

} // namespace serial

std::map<std::string, Settle>
completion_times(const Timeline &timeline, std::span<const OutputPort> outputs) {
  std::map<std::string, Settle> result;
  for (const OutputPort &o : outputs) {
    Settle s;
    for (const TimedEvent &e : timeline) {
      if (e.net != o.net)
        continue;
      s.settled = !e.provisional;
      s.time = e.time;
      s.value = e.value;
    }
    result[o.name] = s;
  }
  return result;
}

Netlist build_one_bit_adder(const std::map<std::string, TimePoint> &placement,
                            double operating_time) {
  auto at = [&](const std::string &id) {
    auto it = placement.find(id);
    if (it == placement.end())
      throw InvalidInput("adder placement lacks '" + id + "'");
    return it->second;
  };
  Netlist nl;
  for (const char *in : {"a", "b", "cin"})
    nl.inputs.push_back({in, at(in)});
  auto gate = [&](const char *id, GateKind kind, const char *out,
                  std::vector<std::string> ins) {
    nl.gates.push_back({id, kind, at(id), operating_time, std::move(ins), out});
  };
  gate("AND1", GateKind::And, "aANDb", {"a", "b"});
  gate("XOR1", GateKind::Xor, "aXORb", {"a", "b"});
  gate("AND2", GateKind::And, "cinANDaXORb", {"cin", "aXORb"});
  gate("XOR2", GateKind::Xor, "sum", {"aXORb", "cin"});
  gate("OR1", GateKind::Or, "cout", {"aANDb", "cinANDaXORb"});
  nl.outputs = {{"sum", "sum"}, {"cout", "cout"}};
  validate(nl);
  return nl;
}

void set_adder_inputs(Netlist &adder, bool a, bool b, bool cin, double time) {
  auto bit = [](bool v) { return v ? LogicValue::One : LogicValue::Zero; };
  adder.stimuli = {{"a", time, bit(a)}, {"b", time, bit(b)},
                   {"cin", time, bit(cin)}};
}

std::map<std::string, TimePoint> adder_layout(AdderLayout layout) {
  if (layout == AdderLayout::Zero) {
    std::map<std::string, TimePoint> m;
    for (const char *id : {"a", "b", "cin", "AND1", "XOR1", "AND2", "XOR2", "OR1"})
      m[id] = TimePoint{};
    return m;
  }
  return {
      {"a", {0, 1, 0}},
      {"b", {0, 2, 0}},
      {"cin", {0, 3, 0}},
      {"AND1", {2, 0, 0}},
      {"XOR1", {3, 0, 0}},
      {"AND2", {4, 0, 0}},
      {"OR1", {5, 0, 0}},
      {"XOR2", {layout == AdderLayout::Left ? -1.0 : 1.0, 0, 0}},
  };
}

} // namespace tempograph
