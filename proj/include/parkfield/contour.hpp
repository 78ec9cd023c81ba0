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

#ifndef PARKFIELD__CONTOUR_HPP_
#define PARKFIELD__CONTOUR_HPP_

#include <array>
#include <span>
#include <vector>

#include "parkfield/field.hpp"
#include "parkfield/geometry.hpp"

namespace parkfield
{

/// Field heights drawn by `render --field`, in meters.
inline constexpr std::array<double, 7> kContourLevels{-2.0, -1.5, -1.0, -0.5, -0.1, 0.0, 0.25};

struct Polyline
{
  double level{0.0};
  std::vector<Point2> points;
  bool closed{false};  // last point joins the first
};

/// Marching squares over the cell-centre lattice of `map`. Nodes with
/// value >= level count as inside; saddles are resolved by the mean of the
/// four corners. Segments are chained into maximal polylines. Output order
/// is deterministic: by level, then by the first cell scanned row-major.
std::vector<Polyline> contour_lines(const FieldMap & map, std::span<const double> levels);

}  // namespace parkfield

#endif  // PARKFIELD__CONTOUR_HPP_
