#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tempograph/timespace.hpp"

namespace tempograph {

enum class ArrowClass { Payload, Transfer, Idle, Provisional };

std::string_view to_string(ArrowClass c);

// One vertical lane per element, placed at its projected spatial coordinate.
struct Lane {
  std::string id;
  std::string role; // input, gate, core, bus, orchestrator, fellow
  TimePoint position;
};

// Payload, idle and provisional arrows stay on one lane (from == to);
// transfers run from (from_lane, t0) to (to_lane, t1).
struct Arrow {
  ArrowClass kind = ArrowClass::Payload;
  std::size_t from_lane = 0;
  std::size_t to_lane = 0;
  double t0 = 0.0;
  double t1 = 0.0;
  std::string label;
};

struct Diagram {
  std::string title;
  std::vector<Lane> lanes;
  std::vector<Arrow> arrows;
};

struct RenderSpec {
  int width = 900;
  int height = 640;
  int margin = 60;
  std::string x_label = "x + k*y";
  std::string t_label = "t";
  double y_projection = 0.5; // k: lane coordinate = x + k * y
  double time_scale = 0.0;   // pixels per time unit; 0 fits the diagram
};

// Time runs upward. Idle arrows are kept in the model but left blank.
std::string render_svg(const Diagram &diagram, const RenderSpec &spec = {});

} // namespace tempograph
