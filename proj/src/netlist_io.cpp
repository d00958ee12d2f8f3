#include "tempograph/netlist_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "tempograph/csv.hpp"
#include "tempograph/error.hpp"

namespace tempograph {

namespace {

std::vector<std::string> tokens(const std::string &line) {
  std::istringstream ss(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;)
    out.push_back(tok);
  return out;
}

} // namespace

Netlist parse_netlist(std::istream &in, const std::string &source) {
  Netlist nl;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty())
      continue;
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    auto num = [&](std::size_t i) {
      double v = 0.0;
      if (!parse_number(tok[i], v))
        throw FileError(where + "expected a number, got '" + tok[i] + "'");
      return v;
    };
    auto arity = [&](std::size_t n, bool at_least = false) {
      if (at_least ? tok.size() < n : tok.size() != n)
        throw FileError(where + tok[0] + ": wrong number of fields");
    };
    const std::string &kw = tok[0];
    if (kw == "INPUT") {
      arity(4);
      nl.inputs.push_back({tok[1], {num(2), num(3), 0.0}});
    } else if (kw == "GATE") {
      arity(8, true);
      auto kind = parse_gate_kind(tok[2]);
      if (!kind)
        throw FileError(where + "unknown gate kind '" + tok[2] + "'");
      Gate g;
      g.id = tok[1];
      g.kind = *kind;
      g.position = {num(3), num(4), 0.0};
      g.operating_time = num(5);
      g.output_net = tok[6];
      g.inputs.assign(tok.begin() + 7, tok.end());
      nl.gates.push_back(std::move(g));
    } else if (kw == "OUTPUT") {
      arity(3);
      nl.outputs.push_back({tok[1], tok[2]});
    } else if (kw == "SET") {
      arity(4);
      LogicValue v;
      if (tok[3] == "0")
        v = LogicValue::Zero;
      else if (tok[3] == "1")
        v = LogicValue::One;
      else
        throw FileError(where + "SET value must be 0 or 1");
      nl.stimuli.push_back({tok[1], num(2), v});
    } else {
      throw FileError(where + "unknown statement '" + kw + "'");
    }
  }
  return nl;
}

Netlist read_netlist_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw FileError("cannot open '" + path + "'");
  return parse_netlist(in, path);
}

void write_netlist(std::ostream &out, const Netlist &nl) {
  const auto n = format_number;
  for (const InputTerminal &i : nl.inputs)
    out << "INPUT " << i.name << ' ' << n(i.position.x) << ' '
        << n(i.position.y) << '\n';
  for (const Gate &g : nl.gates) {
    out << "GATE " << g.id << ' ' << to_string(g.kind) << ' '
        << n(g.position.x) << ' ' << n(g.position.y) << ' '
        << n(g.operating_time) << ' ' << g.output_net;
    for (const std::string &in : g.inputs)
      out << ' ' << in;
    out << '\n';
  }
  for (const OutputPort &o : nl.outputs)
    out << "OUTPUT " << o.name << ' ' << o.net << '\n';
  for (const Stimulus &s : nl.stimuli)
    out << "SET " << s.input << ' ' << n(s.time) << ' ' << to_char(s.value)
        << '\n';
}

} // namespace tempograph
