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

#ifndef PARKFIELD__SOLVER_HPP_
#define PARKFIELD__SOLVER_HPP_

#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "parkfield/execution.hpp"
#include "parkfield/field.hpp"
#include "parkfield/scenario.hpp"

namespace parkfield
{

/// Body-centre position and heading in spot-local coordinates.
struct Pose
{
  double x{0.0};
  double y{0.0};
  double theta{0.0};
};

/// Spot-local pose of a footprint point: rotate by theta, then translate.
inline RigidTransform pose_transform(const Pose & pose) { return {pose.theta, pose.x, pose.y}; }

enum class SamplingMode { grid, monte_carlo };

/// How each footprint rectangle is integrated.
///
/// `grid` places round(w*sqrt(density)) x round(h*sqrt(density)) samples at
/// cell centres (at least one per axis). `monte_carlo` draws `count` points
/// per rectangle from a seeded generator; a fraction `edge_bias` of them lie
/// on the rectangle outline, the rest uniformly inside.
struct SamplingPlan
{
  SamplingMode mode{SamplingMode::grid};
  double density{100.0};  // samples per square meter (grid)
  int count{16};          // points per rectangle (monte_carlo)
  std::uint64_t seed{1};
  double edge_bias{0.8};
};

/// Which spot-aligned headings the coarse stage may use.
enum class HeadingChoice { both, forwards, backwards };

struct SolverConfig
{
  double grid_pitch{0.125};
  int grid_heading_steps{2};  // coarse headings per side of each base
  int starts{10};
  double step_init_xy{0.03};
  double step_init_theta{0.02};
  double step_min_xy{0.0005};
  double step_min_theta{0.00025};
  double theta_range{10.0 * std::numbers::pi / 180.0};
  HeadingChoice headings{HeadingChoice::both};
  int polish_radius{3};  // final lattice check, in step_min units; 0 disables
  long max_evaluations{200'000};
};

struct SolveResult
{
  Pose pose;
  double score{0.0};
  long evaluations{0};
  bool converged{false};
};

/// Precomputed sample set of a footprint under a plan; evaluates the
/// objective (sum over rectangles of area * mean field) at any pose.
class Integrator
{
public:
  Integrator(FieldSet fields, const VehicleFootprint & footprint, const SamplingPlan & plan);

  double operator()(const Pose & pose) const;

  const FieldSet & fields() const noexcept { return fields_; }
  std::size_t sample_count() const noexcept { return points_.size(); }
  /// Vehicle-local sample points, grouped by rectangle.
  std::span<const Point2> points() const noexcept { return points_; }

private:
  struct Group
  {
    std::size_t begin;
    std::size_t end;
    double scale;  // weight * area / samples
  };

  FieldSet fields_;
  std::vector<Point2> points_;
  std::vector<Group> groups_;
};

/// Vehicle-local sample points for one rectangle (exposed for tests).
std::vector<Point2> sample_rect(const AxisRect & rect, const SamplingPlan & plan, std::uint64_t stream);

/// Objective at one pose. Deterministic; builds a fresh Integrator.
double objective(
  const FieldSet & fields, const VehicleFootprint & footprint, const Pose & pose,
  const SamplingPlan & plan);

/// Objective at many poses. Poses are independent, so the parallel kernel
/// returns exactly the serial values.
std::vector<double> evaluate_poses(
  const Integrator & integrator, std::span<const Pose> poses, Execution exec = Execution::parallel);

/// Spot-aligned base headings for which the body fits the spot. Throws
/// InfeasibleError when it fits in neither orientation.
std::vector<double> base_headings(
  const VehicleFootprint & footprint, const ParkingSpot & spot, const SolverConfig & config);

/// Coarse (x, y, heading) grid, then compass search from up to
/// `config.starts` coarse local minima per base heading, heading free
/// within `config.theta_range` of its base. The best refinement wins under
/// ranks_before.
SolveResult minimize(
  const FieldSet & fields, const VehicleFootprint & footprint, const ParkingSpot & spot,
  const SamplingPlan & plan, const SolverConfig & config = {},
  Execution exec = Execution::parallel);

struct LatticeResolution
{
  double xy{0.05};
  double theta{0.05};
};

inline constexpr long kMaxLatticePoses = 10'000'000;

/// Lattice pose count brute_force_minimize would evaluate.
long lattice_size(
  const VehicleFootprint & footprint, const ParkingSpot & spot, const LatticeResolution & resolution,
  const SolverConfig & config);

/// Exhaustive lattice search over the same box and heading ranges as
/// minimize. Test oracle; throws BudgetError beyond kMaxLatticePoses.
SolveResult brute_force_minimize(
  const FieldSet & fields, const VehicleFootprint & footprint, const ParkingSpot & spot,
  const SamplingPlan & plan, const LatticeResolution & resolution, const SolverConfig & config = {},
  Execution exec = Execution::parallel);

/// Total order used to pick among candidate poses: lower score, then smaller
/// heading deviation from `base`, then farther from the approach edge, then
/// lexicographic (x, y). Returns true when `a` ranks before `b`.
struct PoseCandidate
{
  Pose pose;
  double base{0.0};
  double score{0.0};
};
bool ranks_before(const PoseCandidate & a, const PoseCandidate & b, const ParkingSpot & spot);

/// Distance from the pose position to the spot's approach edge.
double approach_distance(const Pose & pose, const ParkingSpot & spot);

}  // namespace parkfield

#endif  // PARKFIELD__SOLVER_HPP_
