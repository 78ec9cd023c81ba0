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

#ifndef PARKFIELD__FIELD_HPP_
#define PARKFIELD__FIELD_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "parkfield/execution.hpp"
#include "parkfield/geometry.hpp"

namespace parkfield
{

/// Force of one polygon at `p`. For a convex obstacle this is the minimum
/// over its edge lines: penetration depth inside, non-positive outside. For
/// a spot edge it is the distance to the segment, negated on the side the
/// edge normal points to (the spot interior for CCW spot outlines).
double polygon_field(const Polygon & polygon, Point2 p);

/// The set of polygons whose forces combine into the scalar field.
class FieldSet
{
public:
  /// Throws GeometryError when `polygons` is empty.
  explicit FieldSet(std::vector<Polygon> polygons);

  std::span<const Polygon> polygons() const noexcept { return polygons_; }
  std::size_t size() const noexcept { return polygons_.size(); }

  /// Strongest force at `p`: max over polygons of polygon_field.
  double gamma(Point2 p) const;

private:
  std::vector<Polygon> polygons_;
};

inline double gamma(const FieldSet & fields, Point2 p) { return fields.gamma(p); }

struct Bounds
{
  Point2 min;
  Point2 max;

  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
};

/// Row-major grid of field samples; row 0 is the lowest y. Sample (r, c)
/// sits at the centre of its cell.
struct FieldMap
{
  Point2 origin;
  double cell_size{1.0};
  std::size_t rows{0};
  std::size_t cols{0};
  std::vector<double> values;

  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
  Point2 cell_center(std::size_t r, std::size_t c) const;
};

inline constexpr std::size_t kMaxFieldCells = 100'000'000;

/// Samples gamma at every cell centre of `bounds` with `resolution` cells per
/// meter. Throws BudgetError above kMaxFieldCells, GeometryError on
/// degenerate bounds or non-positive resolution.
FieldMap sample_field(
  const FieldSet & fields, const Bounds & bounds, double resolution,
  Execution exec = Execution::parallel);

/// Text grid: a header line `origin_x origin_y cell_size rows cols`, then one
/// line per row of space-separated values (shortest round-trip decimals).
void write_field_map(std::ostream & out, const FieldMap & map);
FieldMap read_field_map(std::istream & in);

}  // namespace parkfield

#endif  // PARKFIELD__FIELD_HPP_
