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

#ifndef PARKFIELD__SCENARIO_HPP_
#define PARKFIELD__SCENARIO_HPP_

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parkfield/field.hpp"
#include "parkfield/geometry.hpp"

namespace parkfield
{

/// Spot-local edge facing the driving lane. The spot frame has its origin at
/// the first corner, x along the length and y along the width.
enum class ApproachSide { x_min, x_max, y_min, y_max };

struct ParkingSpot
{
  std::string id;
  std::array<Point2, 4> corners;  // global, CCW, corners[0] is the local origin
  double length{0.0};             // along local x
  double width{0.0};              // along local y
  RigidTransform frame;           // spot-local -> global
  ApproachSide approach_side{ApproachSide::x_min};

  Point2 to_local(Point2 global) const { return inverse_transform(frame, global); }
  Point2 to_global(Point2 local) const { return apply_transform(frame, local); }
  Point2 local_center() const { return {0.5 * length, 0.5 * width}; }
};

/// Builds a spot from four CCW corners; corners[0] -> corners[1] is the
/// length axis. Throws GeometryError carrying the max corner residual when
/// the corners are not a rectangle within `tolerance`.
ParkingSpot make_spot(
  std::string id, const std::array<Point2, 4> & corners, ApproachSide approach,
  double tolerance = 1e-6);

/// Builds a spot from centre, length, width and heading of the length axis.
ParkingSpot make_spot(
  std::string id, Point2 center, double length, double width, double heading,
  ApproachSide approach);

// Fixed five-seat layout. front_left is the driver.
enum class Seat { front_left, front_right, rear_left, rear_middle, rear_right };
inline constexpr std::size_t kSeatCount = 5;

enum class Occupant { empty, adult, baby };

struct CabinContext
{
  std::array<Occupant, kSeatCount> seats{};
  bool trunk_loaded{false};

  Occupant & operator[](Seat s) { return seats[static_cast<std::size_t>(s)]; }
  Occupant operator[](Seat s) const { return seats[static_cast<std::size_t>(s)]; }
  bool any_occupant() const;
};

struct ClearanceTable
{
  double adult_door{0.60};
  double baby_door{1.00};
  double trunk_empty{0.30};
  double trunk_loaded{0.90};
};

/// `body_only` drops every maneuvering rectangle (symmetric reference runs).
enum class FootprintMode { context, body_only };

struct VehicleSpec
{
  double body_length{4.4};
  double body_width{1.8};
  ClearanceTable clearance;
  FootprintMode footprint{FootprintMode::context};
};

/// Closed axis-aligned rectangle [x_min, x_max] x [y_min, y_max].
struct AxisRect
{
  double x_min{0.0};
  double x_max{0.0};
  double y_min{0.0};
  double y_max{0.0};

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
  std::array<Point2, 4> corners() const
  {
    return {{{x_min, y_min}, {x_max, y_min}, {x_max, y_max}, {x_min, y_max}}};
  }
};

/// Member of the integration set: the body or a maneuvering area.
struct FootprintRect
{
  AxisRect rect;
  std::string label;   // stable identifier, e.g. "rear_right_door"
  std::string reason;  // human description, e.g. "baby in rear right seat"
  double weight{1.0};
};

/// Vehicle-local frame: origin at the body centre, x forward, y left.
struct VehicleFootprint
{
  FootprintRect body;
  std::vector<FootprintRect> maneuver_rects;

  /// Largest distance from the origin to any rectangle corner.
  double reach() const;
  double total_area() const;
  /// Body first, then maneuvering areas in construction order.
  std::vector<FootprintRect> all_rects() const;
  /// Copy without the maneuvering rectangle at `index`.
  VehicleFootprint without(std::size_t index) const;
};

/// Body rectangle plus one maneuvering rectangle per used door side and one
/// for the trunk. An empty cabin with an empty trunk keeps only the driver
/// door band.
VehicleFootprint build_footprint(const CabinContext & context, const VehicleSpec & vehicle);

struct Obstacle
{
  std::string id;
  Polygon polygon;
};

struct Scenario
{
  std::vector<ParkingSpot> spots;
  std::vector<Obstacle> obstacles;
  CabinContext context;
  VehicleSpec vehicle;
  std::vector<std::string> warnings;
};

/// Parses and validates scenario JSON. Throws ParseError with the path of
/// the offending field.
Scenario load_scenario(std::string_view text);
/// Reads `path` and parses it; unreadable files raise ParseError too.
Scenario load_scenario_file(const std::filesystem::path & path);
std::string read_text_file(const std::filesystem::path & path);

/// Spot-local field set: the four spot edges followed by every obstacle
/// (in input order) that can reach the area the footprint may cover.
FieldSet spot_field_set(
  const ParkingSpot & spot, std::span<const Obstacle> obstacles, const VehicleFootprint & footprint);

/// Global-frame field set of the whole area (all spot edges and obstacles).
FieldSet scene_field_set(const Scenario & scenario);

std::string_view to_string(ApproachSide side);
std::string_view to_string(Seat seat);
std::string_view to_string(Occupant occupant);

}  // namespace parkfield

#endif  // PARKFIELD__SCENARIO_HPP_
