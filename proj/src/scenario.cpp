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

#include "parkfield/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "json_node.hpp"
#include "parkfield/errors.hpp"

namespace parkfield
{

std::string_view to_string(ApproachSide side)
{
  switch (side) {
    case ApproachSide::x_min: return "x_min";
    case ApproachSide::x_max: return "x_max";
    case ApproachSide::y_min: return "y_min";
    case ApproachSide::y_max: return "y_max";
  }
  return "x_min";
}

std::string_view to_string(Seat seat)
{
  switch (seat) {
    case Seat::front_left: return "front_left";
    case Seat::front_right: return "front_right";
    case Seat::rear_left: return "rear_left";
    case Seat::rear_middle: return "rear_middle";
    case Seat::rear_right: return "rear_right";
  }
  return "front_left";
}

std::string_view to_string(Occupant occupant)
{
  switch (occupant) {
    case Occupant::empty: return "empty";
    case Occupant::adult: return "adult";
    case Occupant::baby: return "baby";
  }
  return "empty";
}

ParkingSpot make_spot(
  std::string id, const std::array<Point2, 4> & corners, ApproachSide approach, double tolerance)
{
  for (const auto & c : corners) {
    if (!is_finite(c)) {
      throw GeometryError("spot '" + id + "': corner is not finite");
    }
  }
  const Point2 along = corners[1] - corners[0];
  const double length = norm(along);
  const double width = distance(corners[3], corners[0]);
  if (!(length > 0.0) || !(width > 0.0)) {
    throw GeometryError("spot '" + id + "': degenerate rectangle");
  }
  ParkingSpot spot;
  spot.id = std::move(id);
  spot.corners = corners;
  spot.length = length;
  spot.width = width;
  spot.frame = {std::atan2(along.y, along.x), corners[0].x, corners[0].y};
  spot.approach_side = approach;

  const std::array<Point2, 4> expected{
    {{0.0, 0.0}, {length, 0.0}, {length, width}, {0.0, width}}};
  double residual = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    residual = std::max(residual, distance(spot.to_global(expected[i]), corners[i]));
  }
  if (residual > tolerance) {
    std::ostringstream msg;
    msg << "spot '" << spot.id << "': corners are not a counter-clockwise rectangle (max corner residual "
        << residual << " m)";
    throw GeometryError(msg.str());
  }
  return spot;
}

ParkingSpot make_spot(
  std::string id, Point2 center, double length, double width, double heading,
  ApproachSide approach)
{
  if (!(length > 0.0) || !(width > 0.0)) {
    throw GeometryError("spot '" + id + "': length and width must be positive");
  }
  const RigidTransform placement{heading, center.x, center.y};
  const double hl = 0.5 * length;
  const double hw = 0.5 * width;
  const std::array<Point2, 4> corners{
    apply_transform(placement, {-hl, -hw}), apply_transform(placement, {hl, -hw}),
    apply_transform(placement, {hl, hw}), apply_transform(placement, {-hl, hw})};
  return make_spot(std::move(id), corners, approach, 1e-6 * std::max(1.0, length + width));
}

bool CabinContext::any_occupant() const
{
  return std::any_of(seats.begin(), seats.end(), [](Occupant o) { return o != Occupant::empty; });
}

double VehicleFootprint::reach() const
{
  double r = 0.0;
  for (const auto & fr : all_rects()) {
    for (const auto & c : fr.rect.corners()) {
      r = std::max(r, norm(c));
    }
  }
  return r;
}

double VehicleFootprint::total_area() const
{
  double a = 0.0;
  for (const auto & fr : all_rects()) {
    a += fr.rect.area();
  }
  return a;
}

std::vector<FootprintRect> VehicleFootprint::all_rects() const
{
  std::vector<FootprintRect> rects;
  rects.reserve(maneuver_rects.size() + 1);
  rects.push_back(body);
  rects.insert(rects.end(), maneuver_rects.begin(), maneuver_rects.end());
  return rects;
}

VehicleFootprint VehicleFootprint::without(std::size_t index) const
{
  VehicleFootprint copy = *this;
  if (index < copy.maneuver_rects.size()) {
    copy.maneuver_rects.erase(copy.maneuver_rects.begin() + static_cast<std::ptrdiff_t>(index));
  }
  return copy;
}

namespace
{

enum class DoorSide { left, right };
enum class DoorRow { front, rear };

struct Door
{
  DoorSide side;
  DoorRow row;
  const char * label;
};

// rear_middle exits through the rear-left door (away from a right-hand curb)
Door door_of(Seat seat)
{
  switch (seat) {
    case Seat::front_left: return {DoorSide::left, DoorRow::front, "driver_door"};
    case Seat::front_right: return {DoorSide::right, DoorRow::front, "front_passenger_door"};
    case Seat::rear_left: return {DoorSide::left, DoorRow::rear, "rear_left_door"};
    case Seat::rear_middle: return {DoorSide::left, DoorRow::rear, "rear_left_door"};
    case Seat::rear_right: return {DoorSide::right, DoorRow::rear, "rear_right_door"};
  }
  return {DoorSide::left, DoorRow::front, "driver_door"};
}

std::string seat_words(Seat seat)
{
  std::string s(to_string(seat));
  std::replace(s.begin(), s.end(), '_', ' ');
  return s;
}

AxisRect door_rect(const AxisRect & body, DoorSide side, DoorRow row, double depth)
{
  // doors occupy the middle 60% of the body length, split at the centre
  const double len = body.width();
  const double mid = 0.5 * (body.x_min + body.x_max);
  AxisRect r;
  r.x_min = row == DoorRow::front ? mid : mid - 0.3 * len;
  r.x_max = row == DoorRow::front ? mid + 0.3 * len : mid;
  r.y_min = side == DoorSide::left ? body.y_max : body.y_min - depth;
  r.y_max = side == DoorSide::left ? body.y_max + depth : body.y_min;
  return r;
}

}  // namespace

VehicleFootprint build_footprint(const CabinContext & context, const VehicleSpec & vehicle)
{
  VehicleFootprint fp;
  const double hl = 0.5 * vehicle.body_length;
  const double hw = 0.5 * vehicle.body_width;
  fp.body = {{-hl, hl, -hw, hw}, "body", "vehicle body", 1.0};
  if (vehicle.footprint == FootprintMode::body_only) {
    return fp;
  }
  const auto & table = vehicle.clearance;

  struct Pending
  {
    Door door;
    double depth;
    std::string reason;
  };
  std::vector<Pending> doors;
  auto add = [&](Door door, double depth, std::string reason) {
    for (auto & p : doors) {
      if (std::string_view(p.door.label) == door.label) {
        if (depth > p.depth) {
          p.depth = depth;
          p.reason = std::move(reason);
        }
        return;
      }
    }
    doors.push_back({door, depth, std::move(reason)});
  };

  if (!context.any_occupant()) {
    add(door_of(Seat::front_left), table.adult_door, "driver re-entry");
  }
  for (std::size_t i = 0; i < kSeatCount; ++i) {
    const auto seat = static_cast<Seat>(i);
    const Occupant who = context.seats[i];
    if (who == Occupant::empty) {
      continue;
    }
    const double depth = who == Occupant::baby ? table.baby_door : table.adult_door;
    add(door_of(seat), depth, std::string(to_string(who)) + " in " + seat_words(seat) + " seat");
  }
  for (const auto & p : doors) {
    fp.maneuver_rects.push_back(
      {door_rect(fp.body.rect, p.door.side, p.door.row, p.depth), p.door.label, p.reason, 1.0});
  }

  if (context.any_occupant() || context.trunk_loaded) {
    const double depth = context.trunk_loaded ? table.trunk_loaded : table.trunk_empty;
    fp.maneuver_rects.push_back(
      {{-hl - depth, -hl, -hw, hw},
       "trunk",
       context.trunk_loaded ? "loaded trunk" : "trunk access",
       1.0});
  }
  return fp;
}

// ---------------------------------------------------------------------------
// JSON ingestion

namespace
{

ApproachSide parse_approach(const Node & node)
{
  const auto s = node.string();
  for (auto side : {ApproachSide::x_min, ApproachSide::x_max, ApproachSide::y_min, ApproachSide::y_max}) {
    if (s == to_string(side)) {
      return side;
    }
  }
  node.fail("approach_side must be one of x_min, x_max, y_min, y_max");
}

ParkingSpot parse_spot(const Node & node)
{
  node.allow_keys({"id", "corners", "center", "length", "width", "heading", "approach_side"});
  const auto id = node.child("id").string();
  const auto approach =
    node.has("approach_side") ? parse_approach(node.child("approach_side")) : ApproachSide::x_min;
  try {
    if (node.has("corners")) {
      if (node.has("center") || node.has("length") || node.has("width") || node.has("heading")) {
        node.fail("give either corners or center/length/width/heading, not both");
      }
      const auto corners_node = node.child("corners");
      const auto pts = corners_node.points();
      if (pts.size() != 4) {
        corners_node.fail("expected exactly 4 corners");
      }
      return make_spot(id, {pts[0], pts[1], pts[2], pts[3]}, approach);
    }
    const Point2 center = node.child("center").point();
    const double length = node.child("length").positive();
    const double width = node.child("width").positive();
    const double heading = node.has("heading") ? node.child("heading").number() : 0.0;
    return make_spot(id, center, length, width, heading, approach);
  } catch (const GeometryError & e) {
    node.fail(e.what());
  }
}

Polygon parse_convex(const Node & node, const std::string & id, std::vector<std::string> & warnings)
{
  auto vertices = node.points();
  if (vertices.size() < 3) {
    node.fail("obstacle '" + id + "' needs at least 3 vertices");
  }
  if (make_counter_clockwise(vertices)) {
    warnings.push_back("obstacle '" + id + "' was listed clockwise; orientation reversed");
  }
  try {
    return Polygon::obstacle(std::move(vertices));
  } catch (const DegenerateEdgeError & e) {
    node.fail("obstacle '" + id + "': " + e.what());
  } catch (const GeometryError &) {
    node.fail(
      "obstacle '" + id + "' is not convex; split it into convex pieces under \"parts\"");
  }
}

void parse_obstacle(const Node & node, Scenario & scenario)
{
  node.allow_keys({"id", "vertices", "parts"});
  const auto id = node.child("id").string();
  if (node.has("vertices") == node.has("parts")) {
    node.fail("obstacle '" + id + "' needs exactly one of \"vertices\" or \"parts\"");
  }
  if (node.has("vertices")) {
    scenario.obstacles.push_back({id, parse_convex(node.child("vertices"), id, scenario.warnings)});
    return;
  }
  const auto parts = node.child("parts").elements();
  if (parts.empty()) {
    node.child("parts").fail("expected at least one part");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto part_id = id + "#" + std::to_string(i);
    scenario.obstacles.push_back({part_id, parse_convex(parts[i], part_id, scenario.warnings)});
  }
}

CabinContext parse_cabin(const Node & node)
{
  node.allow_keys({"seats", "trunk_loaded"});
  CabinContext cabin;
  if (auto seats = node.optional_child("seats")) {
    seats->expect_object();
    for (const auto & item : seats->value().items()) {
      const Node seat_node(item.value(), seats->path() + "/" + item.key());
      std::optional<Seat> seat;
      for (std::size_t i = 0; i < kSeatCount; ++i) {
        if (item.key() == to_string(static_cast<Seat>(i))) {
          seat = static_cast<Seat>(i);
        }
      }
      if (!seat) {
        seat_node.fail("unknown seat; expected front_left, front_right, rear_left, rear_middle, rear_right");
      }
      const auto who = seat_node.string();
      if (who == "empty") {
        cabin[*seat] = Occupant::empty;
      } else if (who == "adult") {
        cabin[*seat] = Occupant::adult;
      } else if (who == "baby") {
        cabin[*seat] = Occupant::baby;
      } else {
        seat_node.fail("occupant must be empty, adult or baby");
      }
    }
    if (cabin.any_occupant() && cabin[Seat::front_left] != Occupant::adult) {
      seats->fail("the driver seat (front_left) must hold an adult when anyone is on board");
    }
  }
  if (auto trunk = node.optional_child("trunk_loaded")) {
    cabin.trunk_loaded = trunk->boolean();
  }
  return cabin;
}

VehicleSpec parse_vehicle(const Node & node)
{
  node.allow_keys({"body_length", "body_width", "footprint", "clearance_table"});
  VehicleSpec v;
  if (auto n = node.optional_child("body_length")) {
    v.body_length = n->positive();
  }
  if (auto n = node.optional_child("body_width")) {
    v.body_width = n->positive();
  }
  if (auto n = node.optional_child("footprint")) {
    const auto mode = n->string();
    if (mode == "context") {
      v.footprint = FootprintMode::context;
    } else if (mode == "body_only") {
      v.footprint = FootprintMode::body_only;
    } else {
      n->fail("footprint must be \"context\" or \"body_only\"");
    }
  }
  if (auto table = node.optional_child("clearance_table")) {
    table->allow_keys({"adult_door", "baby_door", "trunk_empty", "trunk_loaded"});
    auto & c = v.clearance;
    if (auto n = table->optional_child("adult_door")) c.adult_door = n->positive();
    if (auto n = table->optional_child("baby_door")) c.baby_door = n->positive();
    if (auto n = table->optional_child("trunk_empty")) c.trunk_empty = n->positive();
    if (auto n = table->optional_child("trunk_loaded")) c.trunk_loaded = n->positive();
    if (c.baby_door < c.adult_door) {
      table->fail("baby_door must be at least adult_door");
    }
  }
  return v;
}

}  // namespace

Scenario load_scenario(std::string_view text)
{
  const json doc = parse_json_text(text);
  const Node root(doc, "");
  root.allow_keys({"version", "spots", "obstacles", "cabin", "vehicle"});
  if (auto version = root.optional_child("version")) {
    if (!version->value().is_number_integer() || version->value().get<int>() != 1) {
      version->fail("unsupported version (expected 1)");
    }
  }

  Scenario scenario;
  const auto spots = root.child("spots").elements();
  if (spots.empty()) {
    root.child("spots").fail("at least one spot is required");
  }
  for (const auto & s : spots) {
    auto spot = parse_spot(s);
    for (const auto & existing : scenario.spots) {
      if (existing.id == spot.id) {
        s.child("id").fail("duplicate spot id '" + spot.id + "'");
      }
    }
    scenario.spots.push_back(std::move(spot));
  }
  if (auto obstacles = root.optional_child("obstacles")) {
    for (const auto & o : obstacles->elements()) {
      parse_obstacle(o, scenario);
    }
  }
  if (auto cabin = root.optional_child("cabin")) {
    scenario.context = parse_cabin(*cabin);
  }
  if (auto vehicle = root.optional_child("vehicle")) {
    scenario.vehicle = parse_vehicle(*vehicle);
  }
  return scenario;
}

std::string read_text_file(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("", "cannot read '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Scenario load_scenario_file(const std::filesystem::path & path)
{
  return load_scenario(read_text_file(path));
}

// ---------------------------------------------------------------------------
// Field sets

namespace
{

std::vector<Polygon> spot_edges_local(const ParkingSpot & spot)
{
  const Point2 c0{0.0, 0.0};
  const Point2 c1{spot.length, 0.0};
  const Point2 c2{spot.length, spot.width};
  const Point2 c3{0.0, spot.width};
  return {
    Polygon::spot_edge(c0, c1), Polygon::spot_edge(c1, c2), Polygon::spot_edge(c2, c3),
    Polygon::spot_edge(c3, c0)};
}

// Upper bound of a convex obstacle's field over a rectangle: each edge line
// is linear, so its max over the rectangle sits at a corner.
double field_upper_bound(const Polygon & polygon, const AxisRect & region)
{
  double bound = std::numeric_limits<double>::infinity();
  for (const auto & line : polygon.edges()) {
    double line_max = -std::numeric_limits<double>::infinity();
    for (const auto & c : region.corners()) {
      line_max = std::max(line_max, eval_line(line, c));
    }
    bound = std::min(bound, line_max);
  }
  return bound;
}

}  // namespace

FieldSet spot_field_set(
  const ParkingSpot & spot, std::span<const Obstacle> obstacles, const VehicleFootprint & footprint)
{
  auto polygons = spot_edges_local(spot);
  const double reach = footprint.reach();
  const AxisRect region{-reach, spot.length + reach, -reach, spot.width + reach};
  // lowest spot-edge field anywhere in the region: at the inflated corners or
  // at the spot centre
  const double spot_floor = -std::max(reach * std::sqrt(2.0), 0.5 * std::min(spot.length, spot.width));

  const RigidTransform to_local = inverse(spot.frame);
  for (const auto & obstacle : obstacles) {
    Polygon local = transform_polygon(to_local, obstacle.polygon);
    const auto [lo, hi] = local.bounds();
    const bool overlaps = lo.x <= region.x_max && hi.x >= region.x_min && lo.y <= region.y_max &&
                          hi.y >= region.y_min;
    if (overlaps || !(field_upper_bound(local, region) < spot_floor)) {
      polygons.push_back(std::move(local));
    }
  }
  return FieldSet(std::move(polygons));
}

FieldSet scene_field_set(const Scenario & scenario)
{
  std::vector<Polygon> polygons;
  for (const auto & spot : scenario.spots) {
    for (std::size_t i = 0; i < 4; ++i) {
      polygons.push_back(Polygon::spot_edge(spot.corners[i], spot.corners[(i + 1) % 4]));
    }
  }
  for (const auto & obstacle : scenario.obstacles) {
    polygons.push_back(obstacle.polygon);
  }
  return FieldSet(std::move(polygons));
}

}  // namespace parkfield
