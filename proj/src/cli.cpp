#include "tempograph/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "tempograph/bus_sim.hpp"
#include "tempograph/csv.hpp"
#include "tempograph/diagrams.hpp"
#include "tempograph/dispersion.hpp"
#include "tempograph/distributed.hpp"
#include "tempograph/error.hpp"
#include "tempograph/gate_sim.hpp"
#include "tempograph/netlist_io.hpp"
#include "tempograph/scenario_io.hpp"
#include "tempograph/svg.hpp"

namespace tempograph::cli {

namespace {

// Writes to `path`, or to `fallback` when path is empty.
void write_text(const std::string &path, const std::string &text,
                std::ostream &fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw FileError("cannot write '" + path + "'");
  f << text;
  if (!f)
    throw FileError("write failed for '" + path + "'");
}

std::string csv_text(const CsvTable &t) {
  std::ostringstream ss;
  write_csv(ss, t);
  return ss.str();
}

InteractionSpeed default_speed() {
  if (const char *env = std::getenv("TEMPOGRAPH_SPEED")) {
    double v = 0.0;
    if (!parse_number(env, v))
      throw InvalidInput(std::string("TEMPOGRAPH_SPEED is not a number: ") + env);
    return InteractionSpeed(v);
  }
  return InteractionSpeed();
}

std::string sibling_csv(const std::string &svg_path) {
  const auto dot = svg_path.rfind('.');
  const auto slash = svg_path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return svg_path + ".csv";
  return svg_path.substr(0, dot) + ".csv";
}

CsvTable report_csv(const DispersionReport &r) {
  const auto f = format_number;
  return {{"d_min", "d_max", "t_t_min", "t_t_max", "t_p", "proc_transfer_rel",
           "cache_transfer_rel", "dispersion"},
          {{f(r.d_min), f(r.d_max), f(r.t_t_min), f(r.t_t_max), f(r.t_p),
            f(r.proc_transfer_rel), f(r.cache_transfer_rel),
            f(r.dispersion)}}};
}

CsvTable settle_csv(const std::map<std::string, Settle> &settle,
                    std::span<const OutputPort> outputs) {
  CsvTable t{{"output", "settled", "time", "value"}, {}};
  for (const OutputPort &o : outputs) {
    const Settle &s = settle.at(o.name);
    t.rows.push_back({o.name, s.settled ? "1" : "0",
                      s.settled ? format_number(s.time) : "",
                      std::string(1, to_char(s.value))});
  }
  return t;
}

struct Options {
  // dispersion
  std::string input;
  std::optional<double> speed;
  bool edvac = false;
  // adder / gates
  std::string layout = "zero";
  int a = 1, b = 1, cin = 0;
  double op_time = 1.0;
  std::string netlist;
  std::string timeline;
  std::string settle;
  bool emit_undefined = false;
  // bus / distributed
  std::string scenario;
  std::vector<std::size_t> sweep;
  std::string summary;
  // amdahl
  std::vector<double> alpha;
  std::vector<std::uint64_t> n;
  std::string overlay;
  // shared
  std::string out;
  std::string svg;
};

int cmd_dispersion(const Options &o, std::ostream &out) {
  if (o.edvac) {
    DispersionGeometry g = edvac_preset();
    if (o.speed)
      g.speed = InteractionSpeed(*o.speed);
    write_text(o.out, csv_text(report_csv(dispersion_report(g))), out);
    return 0;
  }
  if (o.input.empty())
    throw InvalidInput("dispersion: --input or --edvac is required");
  const InteractionSpeed speed = o.speed ? InteractionSpeed(*o.speed)
                                         : default_speed();
  const auto specs = read_processor_csv(o.input);
  write_text(o.out, csv_text(history_csv(history_table(specs, speed))), out);
  return 0;
}

void emit_gate_run(const Netlist &nl, const Options &o, std::ostream &out,
                   const std::string &timeline_path) {
  const Timeline tl = simulate(nl, SimOptions{o.emit_undefined});
  write_text(timeline_path, csv_text(timeline_csv(tl)), out);
  if (!o.svg.empty())
    write_text(o.svg, render_svg(gate_diagram(nl, tl)), out);
  if (!o.settle.empty())
    write_text(o.settle, csv_text(settle_csv(completion_times(tl, nl.outputs),
                                             nl.outputs)),
               out);
}

int cmd_adder(Options o, std::ostream &out) {
  AdderLayout layout;
  if (o.layout == "zero")
    layout = AdderLayout::Zero;
  else if (o.layout == "left")
    layout = AdderLayout::Left;
  else if (o.layout == "right")
    layout = AdderLayout::Right;
  else
    throw InvalidInput("adder: unknown layout '" + o.layout + "'");
  Netlist nl = build_one_bit_adder(adder_layout(layout), o.op_time);
  set_adder_inputs(nl, o.a != 0, o.b != 0, o.cin != 0);
  // --out names the diagram; the timeline CSV goes next to it.
  std::string timeline = o.timeline;
  if (!o.out.empty()) {
    o.svg = o.out;
    if (timeline.empty())
      timeline = sibling_csv(o.out);
  }
  emit_gate_run(nl, o, out, timeline);
  return 0;
}

int cmd_gates(const Options &o, std::ostream &out) {
  const Netlist nl = read_netlist_file(o.netlist);
  emit_gate_run(nl, o, out, o.out);
  return 0;
}

int cmd_bus(const Options &o, std::ostream &out) {
  const BusScenario s = read_bus_scenario(o.scenario);
  if (!o.sweep.empty()) {
    write_text(o.out, csv_text(sweep_csv(sweep_cores(s, o.sweep))), out);
    return 0;
  }
  const BusTimeline tl = simulate_bus(s);
  write_text(o.out, csv_text(bus_csv(tl)), out);
  if (!o.svg.empty())
    write_text(o.svg, render_svg(bus_diagram(s, tl)), out);
  if (!o.summary.empty()) {
    CsvTable t{{"total_completion", "first_granted"},
               {{format_number(tl.total_completion),
                 std::to_string(tl.grant_order.front())}}};
    write_text(o.summary, csv_text(t), out);
  }
  return 0;
}

int cmd_distributed(const Options &o, std::ostream &out) {
  const DistributedScenario s = read_distributed_scenario(o.scenario);
  const DistributedTimeline tl = simulate_distributed(s);
  write_text(o.out, csv_text(distributed_csv(tl)), out);
  if (!o.svg.empty())
    write_text(o.svg, render_svg(distributed_diagram(s, tl)), out);
  if (!o.summary.empty()) {
    CsvTable t{{"total_time", "critical_fellow"},
               {{format_number(tl.total_time),
                 std::to_string(tl.critical_fellow)}}};
    write_text(o.summary, csv_text(t), out);
  }
  return 0;
}

int cmd_amdahl(const Options &o, std::ostream &out, std::ostream &err) {
  if (!o.overlay.empty()) {
    // Measured points: name,n,efficiency -> implied parallel fraction.
    const CsvTable in = read_csv_file(o.overlay);
    if (in.header != std::vector<std::string>{"name", "n", "efficiency"})
      throw FileError("overlay csv: header must be name,n,efficiency");
    CsvTable t{{"name", "n", "efficiency", "alpha", "clamped"}, {}};
    for (std::size_t r = 0; r < in.rows.size(); ++r) {
      const auto &row = in.rows[r];
      const std::string where = "overlay csv row " + std::to_string(r + 2);
      double n = 0.0, e = 0.0;
      if (row.size() != 3 || !parse_number(row[1], n) ||
          !parse_number(row[2], e) || n < 1.0 ||
          n != static_cast<double>(static_cast<std::uint64_t>(n)))
        throw FileError(where + ": expected name,<integer n>,<efficiency>");
      const AlphaEstimate a =
          alpha_from_efficiency(e, static_cast<std::uint64_t>(n));
      if (a.clamped)
        err << where << ": implied parallel fraction " << format_number(a.raw)
            << " clamped to [0, 1]\n";
      t.rows.push_back({row[0], row[1], row[2], format_number(a.alpha),
                        a.clamped ? "1" : "0"});
    }
    write_text(o.out, csv_text(t), out);
    return 0;
  }
  if (o.alpha.empty() || o.n.empty())
    throw InvalidInput("amdahl: --alpha and --n are required");
  const std::vector<double> surface = efficiency_surface(o.alpha, o.n);
  CsvTable t{{"alpha", "n", "efficiency"}, {}};
  for (std::size_t i = 0; i < o.alpha.size(); ++i)
    for (std::size_t j = 0; j < o.n.size(); ++j)
      t.rows.push_back({format_number(o.alpha[i]), std::to_string(o.n[j]),
                        format_number(surface[i * o.n.size() + j])});
  write_text(o.out, csv_text(t), out);
  return 0;
}

} // namespace

int run(std::span<const std::string> args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Temporal behavior analysis of computing systems", "tempograph"};
  app.require_subcommand(1);
  Options o;

  auto *disp = app.add_subcommand("dispersion", "dispersion history table");
  disp->add_option("--input", o.input, "processor CSV");
  disp->add_option("--speed", o.speed, "interaction speed in m/s");
  disp->add_flag("--edvac", o.edvac, "report the EDVAC calibration case");
  disp->add_option("--out", o.out, "output CSV (default stdout)");

  auto *adder = app.add_subcommand("adder", "simulate the 1-bit full adder");
  adder->add_option("--layout", o.layout, "zero, left or right")
      ->check(CLI::IsMember({"zero", "left", "right"}));
  adder->add_option("--a", o.a)->check(CLI::Range(0, 1));
  adder->add_option("--b", o.b)->check(CLI::Range(0, 1));
  adder->add_option("--cin", o.cin)->check(CLI::Range(0, 1));
  adder->add_option("--op-time", o.op_time, "gate operating time");
  adder->add_option("--out", o.out, "SVG diagram; timeline CSV goes alongside");
  adder->add_option("--timeline", o.timeline, "timeline CSV path");
  adder->add_option("--settle", o.settle, "settle-time CSV path");
  adder->add_flag("--emit-undefined", o.emit_undefined);

  auto *gates = app.add_subcommand("gates", "simulate a netlist file");
  gates->add_option("--netlist", o.netlist)->required();
  gates->add_option("--out", o.out, "timeline CSV (default stdout)");
  gates->add_option("--svg", o.svg, "timing diagram");
  gates->add_option("--settle", o.settle, "settle-time CSV path");
  gates->add_flag("--emit-undefined", o.emit_undefined);

  auto *bus = app.add_subcommand("bus", "shared bus contention");
  bus->add_option("--scenario", o.scenario)->required();
  bus->add_option("--out", o.out, "timeline or sweep CSV (default stdout)");
  bus->add_option("--svg", o.svg, "timing diagram");
  bus->add_option("--summary", o.summary, "summary CSV path");
  bus->add_option("--sweep", o.sweep, "core counts, e.g. 1,2,4")
      ->delimiter(',');

  auto *dist = app.add_subcommand("distributed", "orchestrated processing");
  dist->add_option("--scenario", o.scenario)->required();
  dist->add_option("--out", o.out, "timeline CSV (default stdout)");
  dist->add_option("--svg", o.svg, "timing diagram");
  dist->add_option("--summary", o.summary, "summary CSV path");

  auto *amdahl = app.add_subcommand("amdahl", "Amdahl efficiency surface");
  amdahl->add_option("--alpha", o.alpha, "parallel fractions")->delimiter(',');
  amdahl->add_option("--n", o.n, "processing unit counts")->delimiter(',');
  amdahl->add_option("--overlay", o.overlay, "CSV name,n,efficiency");
  amdahl->add_option("--out", o.out, "output CSV (default stdout)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*disp)
      return cmd_dispersion(o, out);
    if (*adder)
      return cmd_adder(o, out);
    if (*gates)
      return cmd_gates(o, out);
    if (*bus)
      return cmd_bus(o, out);
    if (*dist)
      return cmd_distributed(o, out);
    return cmd_amdahl(o, out, err);
  } catch (const std::exception &e) {
    err << "tempograph: " << e.what() << "\n";
    return 1;
  }
}

int run(int argc, const char *const *argv) {
  std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
  return run(args, std::cout, std::cerr);
}

} // namespace tempograph::cli
