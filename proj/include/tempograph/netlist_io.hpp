#pragma once

#include <iosfwd>
#include <string>

#include "tempograph/gate_sim.hpp"

namespace tempograph {

// Line format, '#' starts a comment:
//   INPUT <name> <x> <y>
//   GATE <id> <AND|OR|XOR|NOT|BUF> <x> <y> <op_time> <out_net> <in_net...>
//   OUTPUT <name> <net>
//   SET <input_name> <time> <0|1>
Netlist parse_netlist(std::istream &in, const std::string &source = "<netlist>");
Netlist read_netlist_file(const std::string &path);
void write_netlist(std::ostream &out, const Netlist &netlist);

} // namespace tempograph
