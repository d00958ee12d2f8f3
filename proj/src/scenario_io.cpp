#include "tempograph/scenario_io.hpp"

#include <fstream>
#include <istream>

#include <json.hpp>

#include "tempograph/error.hpp"

namespace tempograph {

namespace {

using nlohmann::json;

json load(std::istream &in, const char *what) {
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw FileError(std::string(what) + ": " + e.what());
  }
}

double number(const json &obj, const char *key, const std::string &where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number())
    throw FileError(where + ": missing numeric key '" + key + "'");
  return it->get<double>();
}

double number_or(const json &obj, const char *key, double fallback,
                 const std::string &where) {
  return obj.contains(key) ? number(obj, key, where) : fallback;
}

const json &member(const json &obj, const char *key, const std::string &where) {
  if (!obj.is_object() || !obj.contains(key))
    throw FileError(where + ": missing key '" + key + "'");
  return obj.at(key);
}

TimePoint point(const json &obj, const std::string &where) {
  return {number(obj, "x", where), number(obj, "y", where),
          number_or(obj, "z", 0.0, where)};
}

std::string id_or(const json &obj, std::string fallback) {
  auto it = obj.find("id");
  return it != obj.end() && it->is_string() ? it->get<std::string>()
                                            : std::move(fallback);
}

std::ifstream open(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw FileError("cannot open '" + path + "'");
  return in;
}

} // namespace

BusScenario parse_bus_scenario(std::istream &in) {
  const json doc = load(in, "bus scenario");
  BusScenario s;
  const json &cores = member(doc, "cores", "bus scenario");
  if (!cores.is_array())
    throw FileError("bus scenario: 'cores' must be an array");
  for (std::size_t i = 0; i < cores.size(); ++i) {
    const std::string where = "bus scenario core " + std::to_string(i);
    s.cores.push_back({id_or(cores[i], "core" + std::to_string(i)),
                       point(cores[i], where),
                       number(cores[i], "t_p", where)});
  }
  s.bus_position = point(member(doc, "bus", "bus scenario"), "bus scenario bus");
  s.word_transfer_time = number(doc, "word_transfer_time", "bus scenario");
  validate(s);
  return s;
}

BusScenario read_bus_scenario(const std::string &path) {
  auto in = open(path);
  return parse_bus_scenario(in);
}

DistributedScenario parse_distributed_scenario(std::istream &in) {
  const json doc = load(in, "distributed scenario");
  DistributedScenario s;
  const std::string top = "distributed scenario";
  const json &orch = member(doc, "orchestrator", top);
  s.orchestrator = {id_or(orch, "orchestrator"),
                    point(orch, top + " orchestrator"),
                    number(orch, "t_init", top + " orchestrator")};
  const json &fellows = member(doc, "fellows", top);
  if (!fellows.is_array())
    throw FileError(top + ": 'fellows' must be an array");
  for (std::size_t i = 0; i < fellows.size(); ++i) {
    const std::string where = top + " fellow " + std::to_string(i);
    s.fellows.push_back({id_or(fellows[i], "fellow" + std::to_string(i)),
                         point(fellows[i], where),
                         number(fellows[i], "work", where)});
  }
  s.dispatch_time = number(doc, "dispatch_time", top);
  s.collect_time = number(doc, "collect_time", top);
  s.closing_time = number(doc, "closing_time", top);
  validate(s);
  return s;
}

DistributedScenario read_distributed_scenario(const std::string &path) {
  auto in = open(path);
  return parse_distributed_scenario(in);
}

CsvTable bus_csv(const BusTimeline &tl) {
  CsvTable t;
  t.header = {"core",          "request_sent", "request_arrived",
              "grant_issued",  "grant_arrived", "data_at_bus",
              "message_done"};
  const auto f = format_number;
  for (const CoreBusRecord &r : tl.cores)
    t.rows.push_back({std::to_string(r.core), f(r.request_sent),
                      f(r.request_arrived), f(r.grant_issued),
                      f(r.grant_arrived), f(r.data_at_bus),
                      f(r.message_done)});
  return t;
}

CsvTable sweep_csv(std::span<const SweepPoint> points) {
  CsvTable t;
  t.header = {"n", "total_completion"};
  for (const SweepPoint &p : points)
    t.rows.push_back({std::to_string(p.n), format_number(p.total_completion)});
  return t;
}

CsvTable distributed_csv(const DistributedTimeline &tl) {
  CsvTable t;
  t.header = {"fellow",        "distance",       "command_sent",
              "start",         "result_ready",   "result_arrived",
              "receive_start", "receive_end"};
  const auto f = format_number;
  for (const FellowRecord &r : tl.fellows)
    t.rows.push_back({std::to_string(r.fellow), f(r.distance),
                      f(r.command_sent), f(r.start), f(r.result_ready),
                      f(r.result_arrived), f(r.receive_start),
                      f(r.receive_end)});
  return t;
}

} // namespace tempograph
