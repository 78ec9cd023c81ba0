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

// Serial reference vs OpenMP kernel for the two data-parallel loops:
// batched objective evaluation and field-map sampling. Run with
// OMP_NUM_THREADS=<n> to vary the parallel width.

#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>
#include <vector>

#include "parkfield/execution.hpp"
#include "parkfield/field.hpp"
#include "parkfield/scenario.hpp"
#include "parkfield/solver.hpp"

namespace parkfield
{
namespace
{

Scenario golden(const char * name)
{
  return load_scenario_file(std::filesystem::path(PARKFIELD_SCENARIO_DIR) / (std::string(name) + ".scenario"));
}

std::vector<Pose> random_poses(const ParkingSpot & spot, std::size_t n)
{
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Pose> poses(n);
  for (auto & p : poses) {
    p = {u(rng) * spot.length, u(rng) * spot.width, (u(rng) - 0.5) * 0.35};
  }
  return poses;
}

void evaluate_poses_kernel(benchmark::State & state, Execution exec)
{
  const auto s = golden("fig7e");
  const auto fp = build_footprint(s.context, s.vehicle);
  const Integrator integrator(spot_field_set(s.spots[0], s.obstacles, fp), fp, SamplingPlan{});
  const auto poses = random_poses(s.spots[0], static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto scores = evaluate_poses(integrator, poses, exec);
    benchmark::DoNotOptimize(scores.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = exec == Execution::parallel ? max_threads() : 1;
}

void sample_field_kernel(benchmark::State & state, Execution exec)
{
  const auto s = golden("fig7d");
  const auto fields = scene_field_set(s);
  const Bounds bounds{{-1.0, -1.5}, {6.0, 3.5}};
  const double resolution = static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto map = sample_field(fields, bounds, resolution, exec);
    benchmark::DoNotOptimize(map.values.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(7.0 * resolution * 5.0 * resolution));
  state.counters["threads"] = exec == Execution::parallel ? max_threads() : 1;
}

void minimize_fig7a(benchmark::State & state)
{
  const auto s = golden("fig7a");
  const auto fp = build_footprint(s.context, s.vehicle);
  const auto fields = spot_field_set(s.spots[0], s.obstacles, fp);
  for (auto _ : state) {
    auto r = minimize(fields, fp, s.spots[0], SamplingPlan{});
    benchmark::DoNotOptimize(r.score);
  }
}

BENCHMARK_CAPTURE(evaluate_poses_kernel, serial, Execution::serial)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(evaluate_poses_kernel, parallel, Execution::parallel)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sample_field_kernel, serial, Execution::serial)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sample_field_kernel, parallel, Execution::parallel)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(minimize_fig7a)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace parkfield

BENCHMARK_MAIN();
