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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "parkfield/errors.hpp"
#include "parkfield/execution.hpp"
#include "parkfield/solver.hpp"
#include "test_support.hpp"

namespace parkfield
{
namespace
{

constexpr double kPi = std::numbers::pi;

VehicleFootprint body(double length, double width)
{
  VehicleSpec v;
  v.body_length = length;
  v.body_width = width;
  v.footprint = FootprintMode::body_only;
  return build_footprint(CabinContext{}, v);
}

SamplingPlan grid(double density)
{
  SamplingPlan plan;
  plan.density = density;
  return plan;
}

SamplingPlan monte_carlo(int count, std::uint64_t seed)
{
  SamplingPlan plan;
  plan.mode = SamplingMode::monte_carlo;
  plan.count = count;
  plan.seed = seed;
  return plan;
}

struct Prepared
{
  Scenario scenario;
  VehicleFootprint footprint;
  FieldSet fields;
};

Prepared prepare(const std::string & name)
{
  auto s = testing::load_golden(name);
  auto fp = build_footprint(s.context, s.vehicle);
  auto fields = spot_field_set(s.spots[0], s.obstacles, fp);
  return {std::move(s), std::move(fp), std::move(fields)};
}

TEST(SampleRect, GridIsCellCentred)
{
  const AxisRect r{0.0, 2.0, 0.0, 1.0};
  const auto pts = sample_rect(r, grid(100.0), 0);
  ASSERT_EQ(pts.size(), 200u);
  EXPECT_DOUBLE_EQ(pts.front().x, 0.05);
  EXPECT_DOUBLE_EQ(pts.front().y, 0.05);
  EXPECT_DOUBLE_EQ(pts.back().x, 1.95);
  EXPECT_DOUBLE_EQ(pts.back().y, 0.95);
}

TEST(SampleRect, GridKeepsOneSamplePerAxis)
{
  EXPECT_EQ(sample_rect({0.0, 0.01, 0.0, 0.01}, grid(100.0), 0).size(), 1u);
  EXPECT_TRUE(sample_rect({0.0, 0.0, 0.0, 1.0}, grid(100.0), 0).empty());
}

TEST(SampleRect, MonteCarloIsSeededAndInside)
{
  const AxisRect r{-1.0, 2.0, 0.5, 1.5};
  const auto a = sample_rect(r, monte_carlo(200, 5), 3);
  const auto b = sample_rect(r, monte_carlo(200, 5), 3);
  const auto c = sample_rect(r, monte_carlo(200, 6), 3);
  const auto d = sample_rect(r, monte_carlo(200, 5), 4);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_NE(a, d);
  int on_outline = 0;
  for (const auto p : a) {
    EXPECT_GE(p.x, r.x_min);
    EXPECT_LE(p.x, r.x_max);
    EXPECT_GE(p.y, r.y_min);
    EXPECT_LE(p.y, r.y_max);
    if (p.x == r.x_min || p.x == r.x_max || p.y == r.y_min || p.y == r.y_max) {
      ++on_outline;
    }
  }
  // default edge bias 0.8: about 160 of 200 on the outline
  EXPECT_GT(on_outline, 130);
  EXPECT_LT(on_outline, 190);
}

TEST(Objective, ZeroAreaRectangleContributesNothing)
{
  VehicleFootprint fp = body(1.0, 1.0);
  fp.body.rect = {0.0, 0.0, -0.5, 0.5};
  const FieldSet fields({Polygon::spot_edge({0, 0}, {4, 0})});
  EXPECT_EQ(objective(fields, fp, {2.0, 0.0, 0.0}, grid(100.0)), 0.0);
}

TEST(Objective, LinearFieldMatchesClosedFormIntegral)
{
  // -y integrated over [0,1] x [2,3] is -2.5
  const FieldSet fields({Polygon::spot_edge({-10, 0}, {10, 0})});
  const auto fp = body(1.0, 1.0);
  for (double density : {400.0, 900.0, 2500.0}) {
    EXPECT_NEAR(objective(fields, fp, {0.5, 2.5, 0.0}, grid(density)), -2.5, 0.01) << density;
  }
}

TEST(Objective, IndependentSumOverSamples)
{
  const auto p = prepare("fig4");
  const SamplingPlan plan = grid(64.0);
  const Pose pose{2.3, 1.1, 0.07};
  double expected = 0.0;
  for (const auto & fr : p.footprint.all_rects()) {
    const auto pts = sample_rect(fr.rect, plan, 0);
    double sum = 0.0;
    for (const auto q : pts) {
      sum += p.fields.gamma(apply_transform(pose_transform(pose), q));
    }
    expected += fr.rect.area() * sum / static_cast<double>(pts.size());
  }
  EXPECT_NEAR(objective(p.fields, p.footprint, pose, plan), expected, 1e-9);
}

TEST(Objective, GridConvergesUnderFourfoldDensity)
{
  for (const auto * name : {"fig4", "fig6", "fig7a", "fig7b", "fig7c", "fig7d", "fig7e", "fig7f"}) {
    SCOPED_TRACE(name);
    const auto p = prepare(name);
    const auto & spot = p.scenario.spots[0];
    for (const Pose pose : {Pose{2.5, 1.25, 0.0}, Pose{2.2, 1.4, kPi}, Pose{2.7, 1.0, 0.1}}) {
      (void)spot;
      const double coarse = objective(p.fields, p.footprint, pose, grid(100.0));
      const double fine = objective(p.fields, p.footprint, pose, grid(400.0));
      EXPECT_LT(std::abs(coarse - fine) / std::max(1.0, std::abs(fine)), 0.02);
    }
  }
}

TEST(Objective, AddingObstacleNeverLowersObjective)
{
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int scene = 0; scene < 20; ++scene) {
    auto s = testing::random_small_scene(rng);
    const auto before = spot_field_set(s.spot, s.obstacles, s.footprint);
    s.obstacles.push_back({"extra", Polygon::obstacle({{0.5, 0.2}, {1.0, 0.2}, {0.8, 0.7}})});
    const auto after = spot_field_set(s.spot, s.obstacles, s.footprint);
    for (int i = 0; i < 50; ++i) {
      const Pose pose{u(rng) * s.spot.length, u(rng) * s.spot.width, (u(rng) - 0.5) * 0.4};
      EXPECT_GE(
        objective(after, s.footprint, pose, grid(100.0)), objective(before, s.footprint, pose, grid(100.0)));
    }
  }
}

TEST(EvaluatePoses, SerialAndParallelAreBitIdentical)
{
  const auto p = prepare("fig7e");
  const Integrator integrator(p.fields, p.footprint, grid(100.0));
  std::vector<Pose> poses;
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 400; ++i) {
    poses.push_back({5.0 * u(rng), 2.5 * u(rng), 2 * kPi * u(rng) - kPi});
  }
  const auto serial = evaluate_poses(integrator, poses, Execution::serial);
  for (int threads : {1, 2, 4, 7}) {
    set_threads(threads);
    EXPECT_EQ(serial, evaluate_poses(integrator, poses, Execution::parallel)) << threads;
  }
  set_threads(max_threads());
  for (std::size_t i = 0; i < poses.size(); i += 37) {
    EXPECT_EQ(serial[i], integrator(poses[i]));
  }
}

TEST(BaseHeadings, ForwardsAndBackwardsPerApproach)
{
  const auto fp = body(4.4, 1.8);
  const SolverConfig config;
  const auto x_min = base_headings(fp, make_spot("A", Point2{0, 0}, 5, 2.5, 0, ApproachSide::x_min), config);
  ASSERT_EQ(x_min.size(), 2u);
  EXPECT_DOUBLE_EQ(x_min[0], 0.0);
  EXPECT_DOUBLE_EQ(x_min[1], kPi);
  const auto x_max = base_headings(fp, make_spot("A", Point2{0, 0}, 5, 2.5, 0, ApproachSide::x_max), config);
  EXPECT_DOUBLE_EQ(x_max[0], kPi);

  SolverConfig only_backwards;
  only_backwards.headings = HeadingChoice::backwards;
  const auto back = base_headings(fp, make_spot("A", Point2{0, 0}, 5, 2.5, 0, ApproachSide::x_min), only_backwards);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_DOUBLE_EQ(back[0], kPi);
}

TEST(BaseHeadings, CrosswiseWhenOnlyThatFits)
{
  const auto fp = body(4.4, 1.8);
  const auto wide = make_spot("W", Point2{0, 0}, 2.5, 5.0, 0, ApproachSide::y_min);
  const auto bases = base_headings(fp, wide, SolverConfig{});
  ASSERT_EQ(bases.size(), 2u);
  EXPECT_DOUBLE_EQ(std::abs(bases[0]), kPi / 2);
  EXPECT_DOUBLE_EQ(std::abs(bases[1]), kPi / 2);
}

TEST(BaseHeadings, InfeasibleNamesDimension)
{
  const auto fp = body(4.4, 1.8);
  try {
    base_headings(fp, make_spot("S", Point2{0, 0}, 4.0, 2.5, 0, ApproachSide::x_min), SolverConfig{});
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError & e) {
    EXPECT_EQ(e.dimension(), "length");
    EXPECT_DOUBLE_EQ(e.required(), 4.4);
    EXPECT_DOUBLE_EQ(e.available(), 4.0);
  }
  EXPECT_THROW(
    base_headings(fp, make_spot("N", Point2{0, 0}, 5.0, 1.5, 0, ApproachSide::x_min), SolverConfig{}),
    InfeasibleError);
}

TEST(RanksBefore, TieBreakOrder)
{
  const auto spot = make_spot("A", Point2{2.5, 1.25}, 5, 2.5, 0, ApproachSide::x_min);
  const PoseCandidate low{{1.0, 1.0, 0.0}, 0.0, -2.0};
  const PoseCandidate high{{1.0, 1.0, 0.0}, 0.0, -1.0};
  EXPECT_TRUE(ranks_before(low, high, spot));
  EXPECT_FALSE(ranks_before(high, low, spot));
  const PoseCandidate aligned{{1.0, 1.0, 0.0}, 0.0, -1.0};
  const PoseCandidate tilted{{1.0, 1.0, 0.05}, 0.0, -1.0};
  EXPECT_TRUE(ranks_before(aligned, tilted, spot));
  const PoseCandidate deep{{3.0, 1.0, 0.0}, 0.0, -1.0};
  EXPECT_TRUE(ranks_before(deep, aligned, spot));
  const PoseCandidate lower_y{{1.0, 0.5, 0.0}, 0.0, -1.0};
  EXPECT_TRUE(ranks_before(lower_y, aligned, spot));
  EXPECT_FALSE(ranks_before(aligned, aligned, spot));
}

TEST(Minimize, EmptySpotIsCentred)
{
  const auto p = prepare("fig7a");
  const auto r = minimize(p.fields, p.footprint, p.scenario.spots[0], grid(100.0));
  EXPECT_NEAR(r.pose.x, 2.5, 0.01);
  EXPECT_NEAR(r.pose.y, 1.25, 0.01);
  EXPECT_LT(std::abs(std::sin(r.pose.theta)), 0.05);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.score, objective(p.fields, p.footprint, r.pose, grid(100.0)), 1e-9);
}

TEST(Minimize, CornerObstaclePushesPoseAway)
{
  const auto empty = prepare("fig7a");
  auto with = prepare("fig7b");
  // same footprint for both, so only the obstacle differs
  const auto fields = spot_field_set(with.scenario.spots[0], with.scenario.obstacles, empty.footprint);
  const auto base = minimize(empty.fields, empty.footprint, empty.scenario.spots[0], grid(100.0));
  const auto pushed = minimize(fields, empty.footprint, with.scenario.spots[0], grid(100.0));
  const Point2 c = with.scenario.obstacles[0].polygon.centroid();
  EXPECT_GT(distance({pushed.pose.x, pushed.pose.y}, c), distance({base.pose.x, base.pose.y}, c));
  EXPECT_GT(pushed.score, base.score);
}

TEST(Minimize, DeterministicAcrossThreadsAndExecution)
{
  const auto p = prepare("fig7d");
  const auto serial = minimize(p.fields, p.footprint, p.scenario.spots[0], grid(100.0), {}, Execution::serial);
  for (int threads : {1, 3}) {
    set_threads(threads);
    const auto par = minimize(p.fields, p.footprint, p.scenario.spots[0], grid(100.0), {}, Execution::parallel);
    EXPECT_EQ(par.pose.x, serial.pose.x);
    EXPECT_EQ(par.pose.y, serial.pose.y);
    EXPECT_EQ(par.pose.theta, serial.pose.theta);
    EXPECT_EQ(par.score, serial.score);
    EXPECT_EQ(par.evaluations, serial.evaluations);
  }
  set_threads(max_threads());
}

Scenario transformed(const Scenario & in, const RigidTransform & t)
{
  Scenario out = in;
  out.spots.clear();
  for (const auto & spot : in.spots) {
    std::array<Point2, 4> corners;
    for (std::size_t i = 0; i < 4; ++i) {
      corners[i] = apply_transform(t, spot.corners[i]);
    }
    out.spots.push_back(make_spot(spot.id, corners, spot.approach_side));
  }
  for (auto & o : out.obstacles) {
    o.polygon = transform_polygon(t, o.polygon);
  }
  return out;
}

// Reflection across the spot's long axis (y -> width - y) of a spot at the origin.
Scenario mirrored(const Scenario & in, double width)
{
  Scenario out = in;
  for (auto & o : out.obstacles) {
    std::vector<Point2> v;
    for (const auto p : o.polygon.vertices()) {
      v.push_back({p.x, width - p.y});
    }
    make_counter_clockwise(v);
    o.polygon = Polygon::obstacle(v);
  }
  return out;
}

TEST(Minimize, RigidMotionOfSceneKeepsLocalPose)
{
  const auto base = testing::load_golden("fig7d");
  const auto fp = build_footprint(base.context, base.vehicle);
  const auto ref = minimize(spot_field_set(base.spots[0], base.obstacles, fp), fp, base.spots[0], grid(100.0));
  for (const RigidTransform t : {RigidTransform{0.9, 12.0, -4.0}, RigidTransform{-2.5, -30.0, 7.5}}) {
    const auto moved = transformed(base, t);
    const auto r = minimize(spot_field_set(moved.spots[0], moved.obstacles, fp), fp, moved.spots[0], grid(100.0));
    EXPECT_NEAR(r.pose.x, ref.pose.x, 0.01);
    EXPECT_NEAR(r.pose.y, ref.pose.y, 0.01);
    EXPECT_NEAR(r.pose.theta, ref.pose.theta, 0.005);
    EXPECT_NEAR(r.score, ref.score, 1e-6);
  }
}

TEST(Minimize, MirroredSceneGivesMirroredPose)
{
  auto base = testing::load_golden("fig7d");
  base.vehicle.footprint = FootprintMode::body_only;  // symmetric footprint
  const auto fp = build_footprint(base.context, base.vehicle);
  const auto & spot = base.spots[0];
  const auto mirror = mirrored(base, spot.width);
  const auto a = minimize(spot_field_set(spot, base.obstacles, fp), fp, spot, grid(100.0));
  const auto b = minimize(spot_field_set(spot, mirror.obstacles, fp), fp, spot, grid(100.0));
  EXPECT_NEAR(b.pose.x, a.pose.x, 0.01);
  EXPECT_NEAR(b.pose.y, spot.width - a.pose.y, 0.01);
  // a body-only footprint is symmetric under a half turn, so compare axes
  EXPECT_NEAR(std::sin(2 * b.pose.theta), -std::sin(2 * a.pose.theta), 0.01);
  EXPECT_NEAR(std::cos(2 * b.pose.theta), std::cos(2 * a.pose.theta), 0.01);
  EXPECT_NEAR(b.score, a.score, 1e-6);
}

TEST(Minimize, MonteCarloIsReproducible)
{
  const auto p = prepare("fig7f");
  const auto a = minimize(p.fields, p.footprint, p.scenario.spots[0], monte_carlo(8, 3));
  const auto b = minimize(p.fields, p.footprint, p.scenario.spots[0], monte_carlo(8, 3));
  EXPECT_EQ(a.pose.x, b.pose.x);
  EXPECT_EQ(a.pose.y, b.pose.y);
  EXPECT_EQ(a.score, b.score);
}

TEST(Minimize, ThetaStaysNormalizedAndWithinRange)
{
  const auto p = prepare("fig7e");
  const SolverConfig config;
  const auto r = minimize(p.fields, p.footprint, p.scenario.spots[0], grid(100.0), config);
  EXPECT_GT(r.pose.theta, -kPi);
  EXPECT_LE(r.pose.theta, kPi);
  const double dev = std::min(std::abs(normalize_angle(r.pose.theta)), std::abs(normalize_angle(r.pose.theta - kPi)));
  EXPECT_LE(dev, config.theta_range + 1e-12);
  EXPECT_GE(r.pose.x, 0.0);
  EXPECT_LE(r.pose.x, 5.0);
  EXPECT_GE(r.pose.y, 0.0);
  EXPECT_LE(r.pose.y, 2.5);
}

TEST(Oracle, EmptySpotCentreMatchesMinimize)
{
  const auto p = prepare("fig7a");
  const auto& spot = p.scenario.spots[0];
  const LatticeResolution res{0.05, 0.05};
  const auto oracle = brute_force_minimize(p.fields, p.footprint, spot, grid(100.0), res);
  const auto solved = minimize(p.fields, p.footprint, spot, grid(100.0));
  // Midpoint sampling makes the objective exactly flat within half a sample
  // pitch of the centre, so the centre is an argmin and the lattice winner
  // lies within one lattice cell of it.
  const double centre = objective(p.fields, p.footprint, {2.5, 1.25, 0.0}, grid(100.0));
  EXPECT_NEAR(oracle.score, centre, 1e-9);
  EXPECT_LE(std::abs(oracle.pose.x - 2.5), res.xy + 1e-9);
  EXPECT_LE(std::abs(oracle.pose.y - 1.25), res.xy + 1e-9);
  EXPECT_LE(std::abs(solved.pose.x - 2.5), 0.01);
  EXPECT_LE(std::abs(solved.pose.y - 1.25), 0.01);
  EXPECT_LE(solved.score, oracle.score + 1e-6);
}

TEST(Oracle, BoundHoldsOnRandomSmallScenes)
{
  std::mt19937_64 rng(2026);
  for (int scene = 0; scene < 6; ++scene) {
    const auto s = testing::random_small_scene(rng);
    const auto fields = spot_field_set(s.spot, s.obstacles, s.footprint);
    const auto plan = grid(64.0);
    const auto oracle = brute_force_minimize(fields, s.footprint, s.spot, plan, {0.05, 0.05});
    const auto solved = minimize(fields, s.footprint, s.spot, plan);
    EXPECT_LE(solved.score, oracle.score + 1e-6) << "scene " << scene;
  }
}

TEST(Oracle, ObstacleMonotonicityAtArgmin)
{
  std::mt19937_64 rng(77);
  for (int scene = 0; scene < 4; ++scene) {
    auto s = testing::random_small_scene(rng);
    const auto plan = grid(64.0);
    const auto without = brute_force_minimize(
      spot_field_set(s.spot, s.obstacles, s.footprint), s.footprint, s.spot, plan, {0.1, 0.05});
    s.obstacles.push_back({"extra", Polygon::obstacle({{0.2, 0.2}, {0.6, 0.2}, {0.6, 0.6}, {0.2, 0.6}})});
    const auto with = brute_force_minimize(
      spot_field_set(s.spot, s.obstacles, s.footprint), s.footprint, s.spot, plan, {0.1, 0.05});
    EXPECT_GE(with.score, without.score);
  }
}

TEST(Oracle, BudgetIsEnforced)
{
  const auto p = prepare("fig7a");
  const LatticeResolution tiny{0.001, 0.0001};
  EXPECT_THROW(
    brute_force_minimize(p.fields, p.footprint, p.scenario.spots[0], grid(100.0), tiny), BudgetError);
  EXPECT_THROW(lattice_size(p.footprint, p.scenario.spots[0], {0.0, 0.05}, SolverConfig{}), BudgetError);
  const long n = lattice_size(p.footprint, p.scenario.spots[0], {0.05, 0.05}, SolverConfig{});
  // 101 x 51 positions, 9 heading offsets (4 steps each side of 10 degrees), two bases
  EXPECT_EQ(n, 101L * 51L * 9L * 2L);
}

}  // namespace
}  // namespace parkfield
