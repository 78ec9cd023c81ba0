// Copyright 2026 The parkfield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "parkfield/render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <span>
#include <string_view>

namespace parkfield
{

std::vector<PlacedRect> place_footprint(
  const VehicleFootprint & footprint, const Pose & pose, const ParkingSpot & spot)
{
  const auto t = compose(spot.frame, pose_transform(pose));
  std::vector<PlacedRect> out;
  for (const auto & rect : footprint.all_rects()) {
    PlacedRect placed{rect.label, rect.rect.corners()};
    for (auto & p : placed.corners) {
      p = apply_transform(t, p);
    }
    out.push_back(std::move(placed));
  }
  return out;
}

Bounds scene_bounds(const Scenario & scenario, double margin)
{
  constexpr double inf = std::numeric_limits<double>::infinity();
  Bounds b{{inf, inf}, {-inf, -inf}};
  const auto grow = [&b](Point2 p) {
    b.min = {std::min(b.min.x, p.x), std::min(b.min.y, p.y)};
    b.max = {std::max(b.max.x, p.x), std::max(b.max.y, p.y)};
  };
  for (const auto & spot : scenario.spots) {
    std::for_each(spot.corners.begin(), spot.corners.end(), grow);
  }
  for (const auto & obstacle : scenario.obstacles) {
    const auto v = obstacle.polygon.vertices();
    std::for_each(v.begin(), v.end(), grow);
  }
  b.min = b.min - Point2{margin, margin};
  b.max = b.max + Point2{margin, margin};
  return b;
}

std::vector<Polyline> scene_contours(const Scenario & scenario, const RenderConfig & config, Execution exec)
{
  const auto map =
    sample_field(scene_field_set(scenario), scene_bounds(scenario, config.margin), config.resolution, exec);
  return contour_lines(map, kContourLevels);
}

namespace
{

constexpr double kPixelsPerMeter = 100.0;

// From deep in free space (cool) to inside obstacles (warm).
constexpr std::array<std::string_view, kContourLevels.size()> kLevelColours{
  "#2c7bb6", "#00a6ca", "#00ccbc", "#90eb9d", "#f9d057", "#f29e2e", "#d7191c"};

class SvgWriter
{
public:
  explicit SvgWriter(const Bounds & view) : view_(view) {}

  void raw(std::string_view text) { out_ += text; }

  void number(double v)
  {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    out_ += std::string_view(buf) == "-0.000" ? "0.000" : buf;  // no negative zero
  }

  void coordinates(Point2 p)
  {
    number((p.x - view_.min.x) * kPixelsPerMeter);
    out_ += ',';
    number((view_.max.y - p.y) * kPixelsPerMeter);
  }

  void points(std::span<const Point2> pts)
  {
    out_ += " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0) {
        out_ += ' ';
      }
      coordinates(pts[i]);
    }
    out_ += '"';
  }

  void text(Point2 at, std::string_view body, std::string_view cls)
  {
    out_ += "<text class=\"";
    out_ += cls;
    out_ += "\" x=\"";
    number((at.x - view_.min.x) * kPixelsPerMeter);
    out_ += "\" y=\"";
    number((view_.max.y - at.y) * kPixelsPerMeter);
    out_ += "\">";
    escaped(body);
    out_ += "</text>\n";
  }

  void escaped(std::string_view body)
  {
    for (const char c : body) {
      switch (c) {
        case '<':
          out_ += "&lt;";
          break;
        case '>':
          out_ += "&gt;";
          break;
        case '&':
          out_ += "&amp;";
          break;
        case '"':
          out_ += "&quot;";
          break;
        default:
          out_ += c;
      }
    }
  }

  std::string take() { return std::move(out_); }

private:
  Bounds view_;
  std::string out_;
};

}  // namespace

std::string render_svg(const Scenario & scenario, const RenderLayers & layers, const RenderConfig & config)
{
  const Bounds view = scene_bounds(scenario, config.margin);
  SvgWriter svg(view);
  svg.raw("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"");
  svg.number(view.width() * kPixelsPerMeter);
  svg.raw("\" height=\"");
  svg.number(view.height() * kPixelsPerMeter);
  svg.raw(
    "\">\n<style>"
    ".spot{fill:none;stroke:#333;stroke-width:2;stroke-dasharray:8 4}"
    ".obstacle{fill:#888;stroke:#444;stroke-width:1}"
    ".contour{fill:none;stroke-width:1.5}"
    ".body{fill:#3b6fb6;fill-opacity:0.6;stroke:#1d3d6b;stroke-width:1.5}"
    ".maneuver{fill:#f0a030;fill-opacity:0.25;stroke:#b06000;stroke-width:1;stroke-dasharray:4 3}"
    ".nose{fill:none;stroke:#1d3d6b;stroke-width:3}"
    ".label{font:14px sans-serif;fill:#222}"
    "</style>\n"
    "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n");

  for (const auto & line : layers.contours) {
    const auto level = static_cast<std::size_t>(
      std::find(kContourLevels.begin(), kContourLevels.end(), line.level) - kContourLevels.begin());
    svg.raw(line.closed ? "<polygon" : "<polyline");
    svg.raw(" class=\"contour\" data-level=\"");
    svg.number(line.level);
    svg.raw("\" stroke=\"");
    svg.raw(level < kLevelColours.size() ? kLevelColours[level] : "#000000");
    svg.raw("\"");
    svg.points(line.points);
    svg.raw("/>\n");
  }
  for (const auto & obstacle : scenario.obstacles) {
    svg.raw("<polygon class=\"obstacle\" data-id=\"");
    svg.escaped(obstacle.id);
    svg.raw("\"");
    svg.points(obstacle.polygon.vertices());
    svg.raw("/>\n");
  }
  for (const auto & spot : scenario.spots) {
    svg.raw("<polygon class=\"spot\"");
    svg.points(spot.corners);
    svg.raw("/>\n");
    svg.text(spot.corners[0] + Point2{0.05, 0.05}, spot.id, "label");
  }
  for (const auto & vehicle : layers.vehicles) {
    for (std::size_t i = 0; i < vehicle.size(); ++i) {
      svg.raw(i == 0 ? "<polygon class=\"body\" data-label=\"" : "<polygon class=\"maneuver\" data-label=\"");
      svg.escaped(vehicle[i].label);
      svg.raw("\"");
      svg.points(vehicle[i].corners);
      svg.raw("/>\n");
    }
    if (!vehicle.empty()) {
      // nose marker: body centre to front-edge midpoint
      const auto & c = vehicle[0].corners;
      const std::array<Point2, 2> nose{0.25 * (c[0] + c[1] + c[2] + c[3]), 0.5 * (c[1] + c[2])};
      svg.raw("<polyline class=\"nose\"");
      svg.points(nose);
      svg.raw("/>\n");
    }
  }
  svg.raw("</svg>\n");
  return svg.take();
}

}  // namespace parkfield
