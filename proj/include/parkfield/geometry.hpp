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

#ifndef PARKFIELD__GEOMETRY_HPP_
#define PARKFIELD__GEOMETRY_HPP_

#include <cmath>
#include <span>
#include <utility>
#include <vector>

namespace parkfield
{

struct Point2
{
  double x{0.0};
  double y{0.0};

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::sqrt(p.x * p.x + p.y * p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Wraps an angle into (-pi, pi].
double normalize_angle(double theta);

/// Signed line a*x + b*y + c with (a, b) a unit normal, so the value is the
/// signed distance to the line. `alpha` is the direction angle of the edge
/// the line was built from.
struct EdgeLine
{
  double a{0.0};
  double b{0.0};
  double c{0.0};
  double alpha{0.0};
};

inline double eval_line(const EdgeLine & line, Point2 p) { return line.a * p.x + line.b * p.y + line.c; }

/// Line through `from` and `to`, normal pointing to the left of the
/// directed segment. Throws DegenerateEdgeError (index 0) when the points
/// coincide.
EdgeLine line_through(Point2 from, Point2 to);

/// Rotation by `theta` followed by translation (tx, ty): p_global = R p_local + t.
struct RigidTransform
{
  double theta{0.0};
  double tx{0.0};
  double ty{0.0};

  static RigidTransform identity() { return {}; }
};

enum class PolygonKind { obstacle, spot_edge };

/// Field-generating primitive. Obstacles are convex and counter-clockwise,
/// so every edge normal points inward; spot edges are two-vertex segments
/// ("rectangles with zero height").
class Polygon
{
public:
  /// Validates a convex CCW polygon with at least 3 vertices.
  static Polygon obstacle(std::vector<Point2> vertices);
  static Polygon spot_edge(Point2 from, Point2 to);

  PolygonKind kind() const noexcept { return kind_; }
  std::span<const Point2> vertices() const noexcept { return vertices_; }
  std::span<const EdgeLine> edges() const noexcept { return edges_; }

  Point2 centroid() const;
  /// Axis-aligned bounds as {min, max}.
  std::pair<Point2, Point2> bounds() const;

private:
  friend Polygon transform_polygon(const RigidTransform & t, const Polygon & polygon);

  Polygon(PolygonKind kind, std::vector<Point2> vertices);

  PolygonKind kind_;
  std::vector<Point2> vertices_;
  std::vector<EdgeLine> edges_;
};

/// One EdgeLine per cyclic vertex pair (i, i+1), the last pair wrapping to 0.
std::vector<EdgeLine> edge_lines(std::span<const Point2> vertices);

/// Twice the signed area; positive for counter-clockwise vertex order.
double signed_area2(std::span<const Point2> vertices);

/// True when the vertices form a strictly convex-or-collinear simple CCW
/// polygon (all turns non-negative, total turning one full revolution).
bool is_convex_ccw(std::span<const Point2> vertices);

/// Reverses clockwise input in place; returns true when it did so.
bool make_counter_clockwise(std::vector<Point2> & vertices);

/// Euclidean distance from `p` to the closed segment [a, b].
double segment_distance(Point2 p, Point2 a, Point2 b);

/// Euclidean distance from `p` to a convex polygon (0 inside).
double polygon_distance(const Polygon & polygon, Point2 p);

Point2 apply_transform(const RigidTransform & t, Point2 p_local);
Point2 inverse_transform(const RigidTransform & t, Point2 p_global);
/// `compose(outer, inner)` applies `inner` first.
RigidTransform compose(const RigidTransform & outer, const RigidTransform & inner);
RigidTransform inverse(const RigidTransform & t);

/// Maps every vertex of `polygon` through `t`; spot edges stay spot edges.
Polygon transform_polygon(const RigidTransform & t, const Polygon & polygon);

}  // namespace parkfield

#endif  // PARKFIELD__GEOMETRY_HPP_
