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

#ifndef PARKFIELD__STRATEGY_HPP_
#define PARKFIELD__STRATEGY_HPP_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "parkfield/scenario.hpp"
#include "parkfield/solver.hpp"

namespace parkfield
{

enum class Direction { forwards, backwards };
enum class LateralBias { maximize_left, maximize_right, centered };
enum class LongitudinalBias { maximize_front, maximize_back, centered };

std::string_view to_string(Direction d);
std::string_view to_string(LateralBias b);
std::string_view to_string(LongitudinalBias b);

struct StrategyConfig
{
  double eps_lateral{0.10};
  double eps_longitudinal{0.10};
  bool explain{true};
};

struct ParkingStrategy
{
  std::string spot_id;
  Pose pose;         // spot-local
  Pose global_pose;  // scene frame
  double score{0.0};
  Direction direction{Direction::forwards};
  LateralBias lateral{LateralBias::centered};
  LongitudinalBias longitudinal{LongitudinalBias::centered};
  std::vector<std::string> drivers;  // labels of maneuvering rectangles behind the biases
  std::string explanation;
  SolveResult solve;
};

struct InfeasibleSpot
{
  std::string spot_id;
  std::string dimension;
  std::string reason;
};

struct RankedStrategies
{
  std::vector<ParkingStrategy> strategies;  // ascending (score, spot_id)
  std::vector<InfeasibleSpot> infeasible;   // input order

  bool has_strategy() const { return !strategies.empty(); }
};

/// Offset of the body centre from the spot centre, in the vehicle frame.
struct VehicleOffset
{
  double forward{0.0};
  double left{0.0};
};
VehicleOffset vehicle_offset(const Pose & pose, const ParkingSpot & spot);

/// Free space between the body and the spot outline on each vehicle side,
/// measured along the vehicle axes (negative when the body overhangs).
struct SideClearance
{
  double left{0.0};
  double right{0.0};
  double front{0.0};
  double back{0.0};
};
SideClearance side_clearance(const Pose & pose, const ParkingSpot & spot, const VehicleFootprint & footprint);

/// Spot-local pose expressed in the scene frame.
Pose to_global(const Pose & pose, const ParkingSpot & spot);

/// Backwards iff the nose points toward the approach edge.
Direction direction_of(const Pose & pose, const ParkingSpot & spot);

bool is_perpendicular(const ParkingSpot & spot);

/// Rounds a continuous optimum into discrete directives. Pure in
/// (pose, spot, config); the explanation lists no drivers.
ParkingStrategy round_strategy(
  const SolveResult & result, const ParkingSpot & spot, const VehicleFootprint & footprint,
  const StrategyConfig & config = {});

/// Per-spot solve step: minimize, or the lattice oracle.
using SpotSolver =
  std::function<SolveResult(const FieldSet &, const VehicleFootprint &, const ParkingSpot &)>;

SpotSolver minimizer(
  const SamplingPlan & plan, const SolverConfig & config = {}, Execution exec = Execution::parallel);

/// Labels of maneuvering rectangles whose removal (re-solve, re-round)
/// changes the lateral or longitudinal bias of `strategy`.
std::vector<std::string> ablation_drivers(
  const ParkingStrategy & strategy, const FieldSet & fields, const VehicleFootprint & footprint,
  const ParkingSpot & spot, const SpotSolver & solve, const StrategyConfig & config = {});

std::vector<std::string> ablation_drivers(
  const ParkingStrategy & strategy, const FieldSet & fields, const VehicleFootprint & footprint,
  const ParkingSpot & spot, const SamplingPlan & plan, const SolverConfig & solver_config,
  const StrategyConfig & config = {}, Execution exec = Execution::parallel);

/// Summary sentence, e.g. "perpendicular spot, backwards, maximizing
/// remaining space on the left and at the back".
std::string describe(const ParkingStrategy & strategy, const ParkingSpot & spot);

/// Solves every spot, rounds and explains each result, and sorts feasible
/// spots by (score, id). Infeasible spots are listed, never dropped.
RankedStrategies rank_spots(
  const Scenario & scenario, const SpotSolver & solve, const StrategyConfig & config = {});

RankedStrategies rank_spots(
  const Scenario & scenario, const SamplingPlan & plan, const SolverConfig & solver_config = {},
  const StrategyConfig & config = {}, Execution exec = Execution::parallel);

}  // namespace parkfield

#endif  // PARKFIELD__STRATEGY_HPP_
