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

#ifndef PARKFIELD__RENDER_HPP_
#define PARKFIELD__RENDER_HPP_

#include <array>
#include <string>
#include <vector>

#include "parkfield/config.hpp"
#include "parkfield/contour.hpp"
#include "parkfield/execution.hpp"
#include "parkfield/scenario.hpp"
#include "parkfield/strategy.hpp"

namespace parkfield
{

/// A footprint rectangle placed in the scene frame.
struct PlacedRect
{
  std::string label;
  std::array<Point2, 4> corners;
};

/// Body first, then maneuvering rectangles in footprint order.
std::vector<PlacedRect> place_footprint(
  const VehicleFootprint & footprint, const Pose & pose, const ParkingSpot & spot);

/// Spot corners and obstacle vertices, padded by `margin`.
Bounds scene_bounds(const Scenario & scenario, double margin);

/// Contours of the whole-scene field (all spot edges and obstacles).
std::vector<Polyline> scene_contours(
  const Scenario & scenario, const RenderConfig & config, Execution exec = Execution::parallel);

struct RenderLayers
{
  std::vector<Polyline> contours;
  std::vector<std::vector<PlacedRect>> vehicles;  // one footprint per shown pose
};

/// Deterministic SVG (fixed 3-decimal coordinates in 1/100 m units): spot
/// outlines with ids, obstacles, contour polylines, then vehicle footprints.
std::string render_svg(const Scenario & scenario, const RenderLayers & layers, const RenderConfig & config);

}  // namespace parkfield

#endif  // PARKFIELD__RENDER_HPP_
