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

// Shared fixtures: scenario paths and randomized small scenes.

#ifndef PARKFIELD__TEST_SUPPORT_HPP_
#define PARKFIELD__TEST_SUPPORT_HPP_

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "parkfield/scenario.hpp"
#include "parkfield/solver.hpp"

namespace parkfield::testing
{

inline std::filesystem::path scenario_path(const std::string & name)
{
  return std::filesystem::path(PARKFIELD_SCENARIO_DIR) / (name + ".scenario");
}

inline Scenario load_golden(const std::string & name) { return load_scenario_file(scenario_path(name)); }

/// A small spot (2-3 m long) with a proportionally small vehicle and up to
/// two square obstacles: cheap enough for exhaustive lattice search.
struct SmallScene
{
  ParkingSpot spot;
  VehicleFootprint footprint;
  std::vector<Obstacle> obstacles;
};

inline SmallScene random_small_scene(std::mt19937_64 & rng)
{
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SmallScene s;
  const double l = 2.0 + u(rng);
  const double w = 1.2 + 0.5 * u(rng);
  s.spot = make_spot("s", Point2{l / 2, w / 2}, l, w, 0.0, ApproachSide::x_min);
  VehicleSpec v;
  v.body_length = 1.4 + 0.4 * u(rng);
  v.body_width = 0.7 + 0.3 * u(rng);
  v.clearance = {0.3, 0.5, 0.15, 0.45};
  CabinContext cabin;
  cabin[Seat::front_left] = Occupant::adult;
  if (u(rng) < 0.5) {
    cabin[Seat::rear_right] = Occupant::baby;
  }
  cabin.trunk_loaded = u(rng) < 0.5;
  s.footprint = build_footprint(cabin, v);
  const int n = static_cast<int>(u(rng) * 3);
  for (int i = 0; i < n; ++i) {
    const double cx = u(rng) * l;
    const double cy = u(rng) * w;
    const double r = 0.1 + 0.3 * u(rng);
    s.obstacles.push_back(
      {"o" + std::to_string(i),
       Polygon::obstacle({{cx - r, cy - r}, {cx + r, cy - r}, {cx + r, cy + r}, {cx - r, cy + r}})});
  }
  return s;
}

}  // namespace parkfield::testing

#endif  // PARKFIELD__TEST_SUPPORT_HPP_
