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

#include "parkfield/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parkfield/errors.hpp"

namespace parkfield
{

std::string_view to_string(Direction d)
{
  return d == Direction::forwards ? "forwards" : "backwards";
}

std::string_view to_string(LateralBias b)
{
  switch (b) {
    case LateralBias::maximize_left: return "maximize_left";
    case LateralBias::maximize_right: return "maximize_right";
    case LateralBias::centered: return "centered";
  }
  return "centered";
}

std::string_view to_string(LongitudinalBias b)
{
  switch (b) {
    case LongitudinalBias::maximize_front: return "maximize_front";
    case LongitudinalBias::maximize_back: return "maximize_back";
    case LongitudinalBias::centered: return "centered";
  }
  return "centered";
}

VehicleOffset vehicle_offset(const Pose & pose, const ParkingSpot & spot)
{
  const Point2 d = Point2{pose.x, pose.y} - spot.local_center();
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  return {d.x * c + d.y * s, -d.x * s + d.y * c};
}

namespace
{

// Signed free distance from `p` to the spot outline along the spot axis
// closest to direction `u`.
double gap_along(Point2 p, Point2 u, const ParkingSpot & spot)
{
  if (std::abs(u.x) >= std::abs(u.y)) {
    return u.x > 0.0 ? spot.length - p.x : p.x;
  }
  return u.y > 0.0 ? spot.width - p.y : p.y;
}

}  // namespace

SideClearance side_clearance(const Pose & pose, const ParkingSpot & spot, const VehicleFootprint & footprint)
{
  const auto & body = footprint.body.rect;
  const RigidTransform t = pose_transform(pose);
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  const Point2 fwd{c, s};
  const Point2 left{-s, c};

  auto side = [&](Point2 a, Point2 b, Point2 u) {
    return std::min(gap_along(apply_transform(t, a), u, spot), gap_along(apply_transform(t, b), u, spot));
  };
  SideClearance out;
  out.left = side({body.x_min, body.y_max}, {body.x_max, body.y_max}, left);
  out.right = side({body.x_min, body.y_min}, {body.x_max, body.y_min}, -1.0 * left);
  out.front = side({body.x_max, body.y_min}, {body.x_max, body.y_max}, fwd);
  out.back = side({body.x_min, body.y_min}, {body.x_min, body.y_max}, -1.0 * fwd);
  return out;
}

Direction direction_of(const Pose & pose, const ParkingSpot & spot)
{
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  Point2 outward{};
  switch (spot.approach_side) {
    case ApproachSide::x_min: outward = {-1.0, 0.0}; break;
    case ApproachSide::x_max: outward = {1.0, 0.0}; break;
    case ApproachSide::y_min: outward = {0.0, -1.0}; break;
    case ApproachSide::y_max: outward = {0.0, 1.0}; break;
  }
  const double toward = c * outward.x + s * outward.y;
  if (std::abs(toward) > 1e-9) {
    return toward > 0.0 ? Direction::backwards : Direction::forwards;
  }
  // heading parallel to the lane: the lane runs along +x (or +y)
  const bool lane_along_x = outward.x == 0.0;
  return (lane_along_x ? c : s) < 0.0 ? Direction::backwards : Direction::forwards;
}

bool is_perpendicular(const ParkingSpot & spot)
{
  const bool lane_on_short_axis =
    spot.approach_side == ApproachSide::x_min || spot.approach_side == ApproachSide::x_max;
  const double lane_edge = lane_on_short_axis ? spot.width : spot.length;
  const double depth = lane_on_short_axis ? spot.length : spot.width;
  return lane_edge <= depth;
}

Pose to_global(const Pose & pose, const ParkingSpot & spot)
{
  const auto t = compose(spot.frame, pose_transform(pose));
  return {t.tx, t.ty, normalize_angle(t.theta)};
}

ParkingStrategy round_strategy(
  const SolveResult & result, const ParkingSpot & spot, const VehicleFootprint & /*footprint*/,
  const StrategyConfig & config)
{
  ParkingStrategy s;
  s.spot_id = spot.id;
  s.pose = result.pose;
  s.global_pose = to_global(result.pose, spot);
  s.score = result.score;
  s.solve = result;
  s.direction = direction_of(result.pose, spot);

  const auto offset = vehicle_offset(result.pose, spot);
  if (offset.left < -config.eps_lateral) {
    s.lateral = LateralBias::maximize_left;
  } else if (offset.left > config.eps_lateral) {
    s.lateral = LateralBias::maximize_right;
  }
  if (offset.forward > config.eps_longitudinal) {
    s.longitudinal = LongitudinalBias::maximize_back;
  } else if (offset.forward < -config.eps_longitudinal) {
    s.longitudinal = LongitudinalBias::maximize_front;
  }
  s.explanation = describe(s, spot);
  return s;
}

std::string describe(const ParkingStrategy & strategy, const ParkingSpot & spot)
{
  std::string text = is_perpendicular(spot) ? "perpendicular spot, " : "parallel spot, ";
  text += to_string(strategy.direction);
  std::vector<std::string> sides;
  if (strategy.lateral == LateralBias::maximize_left) {
    sides.emplace_back("on the left");
  } else if (strategy.lateral == LateralBias::maximize_right) {
    sides.emplace_back("on the right");
  }
  if (strategy.longitudinal == LongitudinalBias::maximize_front) {
    sides.emplace_back("in front");
  } else if (strategy.longitudinal == LongitudinalBias::maximize_back) {
    sides.emplace_back("at the back");
  }
  if (sides.empty()) {
    text += ", centered";
  } else {
    text += ", maximizing remaining space " + sides.front();
    if (sides.size() == 2) {
      text += " and " + sides.back();
    }
  }
  return text;
}

std::vector<std::string> ablation_drivers(
  const ParkingStrategy & strategy, const FieldSet & fields, const VehicleFootprint & footprint,
  const ParkingSpot & spot, const SpotSolver & solve, const StrategyConfig & config)
{
  std::vector<std::string> drivers;
  for (std::size_t i = 0; i < footprint.maneuver_rects.size(); ++i) {
    const auto reduced = footprint.without(i);
    const auto rerounded = round_strategy(solve(fields, reduced, spot), spot, reduced, config);
    if (rerounded.lateral != strategy.lateral || rerounded.longitudinal != strategy.longitudinal) {
      drivers.push_back(footprint.maneuver_rects[i].label);
    }
  }
  return drivers;
}

std::vector<std::string> ablation_drivers(
  const ParkingStrategy & strategy, const FieldSet & fields, const VehicleFootprint & footprint,
  const ParkingSpot & spot, const SamplingPlan & plan, const SolverConfig & solver_config,
  const StrategyConfig & config, Execution exec)
{
  return ablation_drivers(strategy, fields, footprint, spot, minimizer(plan, solver_config, exec), config);
}

SpotSolver minimizer(const SamplingPlan & plan, const SolverConfig & config, Execution exec)
{
  return [plan, config, exec](const FieldSet & f, const VehicleFootprint & fp, const ParkingSpot & spot) {
    return minimize(f, fp, spot, plan, config, exec);
  };
}

RankedStrategies rank_spots(
  const Scenario & scenario, const SpotSolver & solve, const StrategyConfig & config)
{
  RankedStrategies ranked;
  const auto footprint = build_footprint(scenario.context, scenario.vehicle);
  for (const auto & spot : scenario.spots) {
    try {
      const auto fields = spot_field_set(spot, scenario.obstacles, footprint);
      auto strategy = round_strategy(solve(fields, footprint, spot), spot, footprint, config);
      if (config.explain) {
        strategy.drivers = ablation_drivers(strategy, fields, footprint, spot, solve, config);
        if (!strategy.drivers.empty()) {
          strategy.explanation += "; driven by ";
          for (std::size_t i = 0; i < strategy.drivers.size(); ++i) {
            const auto it = std::find_if(
              footprint.maneuver_rects.begin(), footprint.maneuver_rects.end(),
              [&](const FootprintRect & r) { return r.label == strategy.drivers[i]; });
            strategy.explanation += (i == 0 ? "" : ", ") + it->reason + " (" + it->label + ")";
          }
        }
      }
      ranked.strategies.push_back(std::move(strategy));
    } catch (const InfeasibleError & e) {
      ranked.infeasible.push_back({spot.id, e.dimension(), e.what()});
    }
  }
  std::sort(
    ranked.strategies.begin(), ranked.strategies.end(),
    [](const ParkingStrategy & a, const ParkingStrategy & b) {
      if (a.score != b.score) {
        return a.score < b.score;
      }
      return a.spot_id < b.spot_id;
    });
  return ranked;
}

RankedStrategies rank_spots(
  const Scenario & scenario, const SamplingPlan & plan, const SolverConfig & solver_config,
  const StrategyConfig & config, Execution exec)
{
  return rank_spots(scenario, minimizer(plan, solver_config, exec), config);
}

}  // namespace parkfield
