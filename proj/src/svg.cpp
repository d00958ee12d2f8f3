#include "tempograph/svg.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "tempograph/csv.hpp"
#include "tempograph/error.hpp"

namespace tempograph {

std::string_view to_string(ArrowClass c) {
  switch (c) {
  case ArrowClass::Payload:
    return "payload";
  case ArrowClass::Transfer:
    return "transfer";
  case ArrowClass::Idle:
    return "idle";
  case ArrowClass::Provisional:
    break;
  }
  return "provisional";
}

namespace {

std::string escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
    case '&':
      out += "&amp;";
      break;
    case '<':
      out += "&lt;";
      break;
    case '>':
      out += "&gt;";
      break;
    case '"':
      out += "&quot;";
      break;
    default:
      out += ch;
    }
  }
  return out;
}

constexpr double kLaneGap = 14.0; // px between lanes sharing a coordinate

} // namespace

std::string render_svg(const Diagram &d, const RenderSpec &spec) {
  if (d.arrows.empty())
    throw InvalidInput("render_svg: empty timeline");
  if (spec.width <= 0 || spec.height <= 0 || spec.margin < 0 ||
      2 * spec.margin >= std::min(spec.width, spec.height))
    throw InvalidInput("render_svg: bad canvas dimensions");
  for (const Arrow &a : d.arrows)
    if (a.from_lane >= d.lanes.size() || a.to_lane >= d.lanes.size())
      throw InvalidInput("render_svg: arrow refers to a missing lane");

  std::vector<double> coord(d.lanes.size());
  for (std::size_t i = 0; i < d.lanes.size(); ++i)
    coord[i] = d.lanes[i].position.x + spec.y_projection * d.lanes[i].position.y;
  const auto [lo, hi] = std::minmax_element(coord.begin(), coord.end());
  const double u_min = *lo;
  const double u_span = *hi - *lo;

  double t_max = 0.0;
  for (const Arrow &a : d.arrows)
    t_max = std::max({t_max, a.t0, a.t1});
  const double plot_w = spec.width - 2.0 * spec.margin;
  const double plot_h = spec.height - 2.0 * spec.margin;
  const double t_scale =
      spec.time_scale > 0.0 ? spec.time_scale
                            : (t_max > 0.0 ? plot_h / t_max : 1.0);

  // Lanes sharing a coordinate are fanned out side by side.
  std::map<double, int> seen;
  std::vector<double> lane_px(d.lanes.size());
  for (std::size_t i = 0; i < d.lanes.size(); ++i) {
    const double base =
        spec.margin + (u_span > 0.0 ? (coord[i] - u_min) / u_span * plot_w
                                    : plot_w / 2.0);
    lane_px[i] = base + kLaneGap * seen[coord[i]]++;
  }
  const double y0 = spec.height - spec.margin;
  auto ty = [&](double t) { return y0 - t * t_scale; };

  std::string out;
  auto emit = [&]<typename... A>(fmt::format_string<A...> f, A &&...args) {
    fmt::format_to(std::back_inserter(out), f, std::forward<A>(args)...);
  };
  emit("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
       "viewBox=\"0 0 {} {}\">\n",
       spec.width, spec.height, spec.width, spec.height);
  emit("<style>\n"
       ".lane{{stroke:#c8c8c8;stroke-width:1}}\n"
       ".axis{{stroke:#000;stroke-width:1}}\n"
       ".payload{{stroke:#1a9e1a;stroke-width:3}}\n"
       ".provisional{{stroke:#1a9e1a;stroke-width:2;stroke-dasharray:6 4}}\n"
       ".transfer{{stroke:#2060c0;stroke-width:1.5;stroke-dasharray:2 3}}\n"
       "text{{font-family:sans-serif;font-size:11px}}\n"
       "</style>\n");
  emit("<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" "
       "refX=\"7\" refY=\"4\" orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\"/>"
       "</marker></defs>\n");
  if (!d.title.empty())
    emit("<text x=\"{}\" y=\"20\">{}</text>\n", spec.margin, escape(d.title));
  emit("<line class=\"axis\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" "
       "y2=\"{:.2f}\"/>\n",
       spec.margin / 2.0, y0, spec.width - spec.margin / 2.0, y0);
  emit("<line class=\"axis\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" "
       "y2=\"{:.2f}\" marker-end=\"url(#head)\"/>\n",
       spec.margin / 2.0, y0, spec.margin / 2.0, spec.margin / 2.0);
  emit("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", spec.margin / 2.0 + 4,
       spec.margin / 2.0 + 4, escape(spec.t_label));
  emit("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n",
       spec.width - spec.margin * 1.5, y0 + 30.0, escape(spec.x_label));
  emit("<text x=\"{:.2f}\" y=\"{:.2f}\">t={}</text>\n", 4.0, ty(t_max) + 4.0,
       format_number(t_max));

  for (std::size_t i = 0; i < d.lanes.size(); ++i) {
    const Lane &l = d.lanes[i];
    emit("<line class=\"lane {}\" data-id=\"{}\" x1=\"{:.2f}\" y1=\"{:.2f}\" "
         "x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n",
         escape(l.role), escape(l.id), lane_px[i], y0, lane_px[i],
         ty(t_max));
    emit("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", lane_px[i] - 8.0,
         y0 + 14.0 + 12.0 * (i % 2), escape(l.id));
  }

  for (const Arrow &a : d.arrows) {
    if (a.kind == ArrowClass::Idle)
      continue;
    emit("<line class=\"{}\" data-t0=\"{}\" data-t1=\"{}\" x1=\"{:.2f}\" "
         "y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" marker-end=\"url(#head)\"",
         to_string(a.kind), format_number(a.t0), format_number(a.t1),
         lane_px[a.from_lane], ty(a.t0), lane_px[a.to_lane], ty(a.t1));
    if (a.label.empty()) {
      emit("/>\n");
    } else {
      emit("><title>{}</title></line>\n", escape(a.label));
    }
  }
  emit("</svg>\n");
  return out;
}

} // namespace tempograph
