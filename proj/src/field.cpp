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

#include "parkfield/field.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "parkfield/errors.hpp"

namespace parkfield
{

namespace
{

// Signed distance to the segment given f, the signed distance to its line:
// -|f| or |f| beside the segment, the endpoint distance beyond it. Negative
// on the normal (inner) side, positive behind the edge.
double spot_edge_value(const Polygon & polygon, Point2 p, double f)
{
  const auto v = polygon.vertices();
  const Point2 ab = v[1] - v[0];
  const double along = dot(p - v[0], ab);
  double d = std::abs(f);
  if (along < 0.0) {
    d = distance(p, v[0]);
  } else if (along > dot(ab, ab)) {
    d = distance(p, v[1]);
  }
  return f >= 0.0 ? -d : d;
}

}  // namespace

double polygon_field(const Polygon & polygon, Point2 p)
{
  if (polygon.kind() == PolygonKind::spot_edge) {
    return spot_edge_value(polygon, p, eval_line(polygon.edges()[0], p));
  }
  double value = std::numeric_limits<double>::infinity();
  for (const auto & line : polygon.edges()) {
    value = std::min(value, eval_line(line, p));
  }
  return value;
}

FieldSet::FieldSet(std::vector<Polygon> polygons) : polygons_(std::move(polygons))
{
  if (polygons_.empty()) {
    throw GeometryError("field set needs at least one polygon");
  }
}

double FieldSet::gamma(Point2 p) const
{
  // Same value as the max over polygon_field, but a polygon is abandoned as
  // soon as a bound shows it cannot raise the running maximum.
  double value = -std::numeric_limits<double>::infinity();
  for (const auto & polygon : polygons_) {
    const auto edges = polygon.edges();
    if (polygon.kind() == PolygonKind::spot_edge) {
      const double f = eval_line(edges[0], p);
      if (f < 0.0 || -f > value) {  // otherwise the value is at most -f
        value = std::max(value, spot_edge_value(polygon, p, f));
      }
      continue;
    }
    double inner = std::numeric_limits<double>::infinity();
    for (const auto & line : edges) {
      inner = std::min(inner, eval_line(line, p));
      if (inner <= value) {
        break;
      }
    }
    value = std::max(value, inner);
  }
  return value;
}

Point2 FieldMap::cell_center(std::size_t r, std::size_t c) const
{
  return {
    origin.x + (static_cast<double>(c) + 0.5) * cell_size,
    origin.y + (static_cast<double>(r) + 0.5) * cell_size};
}

namespace
{

std::size_t cells_along(double extent, double resolution)
{
  return static_cast<std::size_t>(std::max(1.0, std::ceil(extent * resolution - 1e-9)));
}

// (2k+1) / (2 res) is exact-ratio arithmetic, so refining by an odd factor
// lands on bit-identical coarse centres.
double center_offset(std::size_t k, double resolution)
{
  return static_cast<double>(2 * k + 1) / (2.0 * resolution);
}

}  // namespace

FieldMap sample_field(
  const FieldSet & fields, const Bounds & bounds, double resolution, Execution exec)
{
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw GeometryError("field resolution must be positive");
  }
  if (!(bounds.width() > 0.0) || !(bounds.height() > 0.0)) {
    throw GeometryError("field bounds are degenerate");
  }
  const double cols_real = std::ceil(bounds.width() * resolution - 1e-9);
  const double rows_real = std::ceil(bounds.height() * resolution - 1e-9);
  if (cols_real * rows_real > static_cast<double>(kMaxFieldCells)) {
    throw BudgetError("field map would exceed 1e8 cells");
  }

  FieldMap map;
  map.origin = bounds.min;
  map.cell_size = 1.0 / resolution;
  map.cols = cells_along(bounds.width(), resolution);
  map.rows = cells_along(bounds.height(), resolution);
  map.values.resize(map.rows * map.cols);

  const auto total = static_cast<std::ptrdiff_t>(map.values.size());
  const auto cols = map.cols;
  auto kernel = [&](std::ptrdiff_t i) {
    const auto r = static_cast<std::size_t>(i) / cols;
    const auto c = static_cast<std::size_t>(i) % cols;
    const Point2 p{
      bounds.min.x + center_offset(c, resolution), bounds.min.y + center_offset(r, resolution)};
    map.values[static_cast<std::size_t>(i)] = fields.gamma(p);
  };

  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < total; ++i) {
      kernel(i);
    }
  } else {
    for (std::ptrdiff_t i = 0; i < total; ++i) {
      kernel(i);
    }
  }
  return map;
}

namespace
{

void put_double(std::ostream & out, double v)
{
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.write(buf, res.ptr - buf);
}

double parse_double(const std::string & token)
{
  double v = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
    throw ParseError("", "field map: bad number '" + token + "'");
  }
  return v;
}

}  // namespace

void write_field_map(std::ostream & out, const FieldMap & map)
{
  put_double(out, map.origin.x);
  out << ' ';
  put_double(out, map.origin.y);
  out << ' ';
  put_double(out, map.cell_size);
  out << ' ' << map.rows << ' ' << map.cols << '\n';
  for (std::size_t r = 0; r < map.rows; ++r) {
    for (std::size_t c = 0; c < map.cols; ++c) {
      if (c != 0) {
        out << ' ';
      }
      put_double(out, map.at(r, c));
    }
    out << '\n';
  }
}

FieldMap read_field_map(std::istream & in)
{
  FieldMap map;
  std::string header;
  if (!std::getline(in, header)) {
    throw ParseError("", "field map: missing header");
  }
  std::istringstream hs(header);
  std::string ox, oy, cs;
  long long rows = -1;
  long long cols = -1;
  if (!(hs >> ox >> oy >> cs >> rows >> cols) || rows < 0 || cols < 0) {
    throw ParseError("", "field map: malformed header");
  }
  map.origin = {parse_double(ox), parse_double(oy)};
  map.cell_size = parse_double(cs);
  if (!(map.cell_size > 0.0)) {
    throw ParseError("", "field map: cell_size must be positive");
  }
  map.rows = static_cast<std::size_t>(rows);
  map.cols = static_cast<std::size_t>(cols);
  map.values.reserve(map.rows * map.cols);
  std::string token;
  while (map.values.size() < map.rows * map.cols && in >> token) {
    map.values.push_back(parse_double(token));
  }
  if (map.values.size() != map.rows * map.cols) {
    throw ParseError("", "field map: expected rows*cols values");
  }
  return map;
}

}  // namespace parkfield
