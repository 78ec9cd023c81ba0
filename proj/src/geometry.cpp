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

#include "parkfield/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <sstream>

#include "parkfield/errors.hpp"

namespace parkfield
{

double normalize_angle(double theta)
{
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double wrapped = std::remainder(theta, two_pi);  // [-pi, pi]
  if (wrapped <= -std::numbers::pi) {
    wrapped += two_pi;
  }
  return wrapped;
}

EdgeLine line_through(Point2 from, Point2 to)
{
  const Point2 d = to - from;
  const double length = norm(d);
  if (!(length > 0.0)) {
    throw DegenerateEdgeError(0, "degenerate edge: coincident vertices");
  }
  EdgeLine line;
  line.a = -d.y / length;
  line.b = d.x / length;
  line.c = -(line.a * from.x + line.b * from.y);
  line.alpha = std::atan2(d.y, d.x);
  return line;
}

std::vector<EdgeLine> edge_lines(std::span<const Point2> vertices)
{
  std::vector<EdgeLine> lines;
  lines.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::size_t next = (i + 1) % vertices.size();
    try {
      lines.push_back(line_through(vertices[i], vertices[next]));
    } catch (const DegenerateEdgeError &) {
      std::ostringstream msg;
      msg << "degenerate edge " << i << ": vertices " << i << " and " << next << " coincide";
      throw DegenerateEdgeError(i, msg.str());
    }
  }
  return lines;
}

double signed_area2(std::span<const Point2> vertices)
{
  double sum = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    sum += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  return sum;
}

bool is_convex_ccw(std::span<const Point2> vertices)
{
  const std::size_t n = vertices.size();
  if (n < 3 || !(signed_area2(vertices) > 0.0)) {
    return false;
  }
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 e0 = vertices[(i + 1) % n] - vertices[i];
    const Point2 e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
    const double turn = cross(e0, e1);
    if (turn < -1e-12 * norm(e0) * norm(e1)) {
      return false;
    }
    turning += std::atan2(turn, dot(e0, e1));
  }
  // a self-intersecting star still turns left everywhere but winds twice
  return std::abs(turning - 2.0 * std::numbers::pi) < 1e-6;
}

bool make_counter_clockwise(std::vector<Point2> & vertices)
{
  if (signed_area2(vertices) < 0.0) {
    std::reverse(vertices.begin(), vertices.end());
    return true;
  }
  return false;
}

double segment_distance(Point2 p, Point2 a, Point2 b)
{
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) {
    return distance(p, a);
  }
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

double polygon_distance(const Polygon & polygon, Point2 p)
{
  const auto verts = polygon.vertices();
  if (polygon.kind() == PolygonKind::obstacle) {
    bool inside = true;
    for (const auto & line : polygon.edges()) {
      if (eval_line(line, p) < 0.0) {
        inside = false;
        break;
      }
    }
    if (inside) {
      return 0.0;
    }
  }
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = polygon.kind() == PolygonKind::spot_edge ? 1 : verts.size();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, segment_distance(p, verts[i], verts[(i + 1) % verts.size()]));
  }
  return best;
}

Polygon::Polygon(PolygonKind kind, std::vector<Point2> vertices)
: kind_(kind), vertices_(std::move(vertices))
{
  for (const auto & v : vertices_) {
    if (!is_finite(v)) {
      throw GeometryError("polygon vertex is not finite");
    }
  }
  edges_ = edge_lines(vertices_);
}

Polygon Polygon::obstacle(std::vector<Point2> vertices)
{
  if (vertices.size() < 3) {
    throw GeometryError("obstacle polygon needs at least 3 vertices");
  }
  Polygon polygon(PolygonKind::obstacle, std::move(vertices));
  if (!is_convex_ccw(polygon.vertices_)) {
    throw GeometryError("obstacle polygon is not convex and counter-clockwise");
  }
  return polygon;
}

Polygon Polygon::spot_edge(Point2 from, Point2 to)
{
  return Polygon(PolygonKind::spot_edge, {from, to});
}

Point2 Polygon::centroid() const
{
  if (kind_ == PolygonKind::spot_edge) {
    return 0.5 * (vertices_[0] + vertices_[1]);
  }
  // area centroid; relative to the first vertex for conditioning
  const Point2 origin = vertices_.front();
  double area2 = 0.0;
  Point2 acc{};
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point2 p = vertices_[i] - origin;
    const Point2 q = vertices_[(i + 1) % vertices_.size()] - origin;
    const double w = cross(p, q);
    area2 += w;
    acc = acc + w * (p + q);
  }
  return origin + (1.0 / (3.0 * area2)) * acc;
}

std::pair<Point2, Point2> Polygon::bounds() const
{
  Point2 lo = vertices_.front();
  Point2 hi = vertices_.front();
  for (const auto & v : vertices_) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
  }
  return {lo, hi};
}

Point2 apply_transform(const RigidTransform & t, Point2 p_local)
{
  const double c = std::cos(t.theta);
  const double s = std::sin(t.theta);
  return {c * p_local.x - s * p_local.y + t.tx, s * p_local.x + c * p_local.y + t.ty};
}

Point2 inverse_transform(const RigidTransform & t, Point2 p_global)
{
  const double c = std::cos(t.theta);
  const double s = std::sin(t.theta);
  const double dx = p_global.x - t.tx;
  const double dy = p_global.y - t.ty;
  return {c * dx + s * dy, -s * dx + c * dy};
}

RigidTransform compose(const RigidTransform & outer, const RigidTransform & inner)
{
  const Point2 t = apply_transform(outer, {inner.tx, inner.ty});
  return {normalize_angle(outer.theta + inner.theta), t.x, t.y};
}

RigidTransform inverse(const RigidTransform & t)
{
  const Point2 origin = inverse_transform(t, {0.0, 0.0});
  return {normalize_angle(-t.theta), origin.x, origin.y};
}

Polygon transform_polygon(const RigidTransform & t, const Polygon & polygon)
{
  std::vector<Point2> moved;
  moved.reserve(polygon.vertices_.size());
  for (const auto & v : polygon.vertices_) {
    moved.push_back(apply_transform(t, v));
  }
  return Polygon(polygon.kind_, std::move(moved));
}

}  // namespace parkfield
