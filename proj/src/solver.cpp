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

#include "parkfield/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "parkfield/errors.hpp"

namespace parkfield
{

namespace
{

double unit_uniform(std::mt19937_64 & rng)
{
  // 53 random mantissa bits; identical on every standard library
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<Point2> sample_rect(const AxisRect & rect, const SamplingPlan & plan, std::uint64_t stream)
{
  std::vector<Point2> pts;
  const double w = rect.width();
  const double h = rect.height();
  if (!(w > 0.0) || !(h > 0.0)) {
    return pts;
  }
  if (plan.mode == SamplingMode::grid) {
    const double per_meter = std::sqrt(plan.density);
    const auto nx = std::max<long>(1, std::lround(w * per_meter));
    const auto ny = std::max<long>(1, std::lround(h * per_meter));
    pts.reserve(static_cast<std::size_t>(nx * ny));
    for (long j = 0; j < ny; ++j) {
      const double y = rect.y_min + h * (static_cast<double>(2 * j + 1) / static_cast<double>(2 * ny));
      for (long i = 0; i < nx; ++i) {
        const double x = rect.x_min + w * (static_cast<double>(2 * i + 1) / static_cast<double>(2 * nx));
        pts.push_back({x, y});
      }
    }
    return pts;
  }

  std::mt19937_64 rng(plan.seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
  const double perimeter = 2.0 * (w + h);
  pts.reserve(static_cast<std::size_t>(std::max(plan.count, 0)));
  for (int k = 0; k < plan.count; ++k) {
    if (unit_uniform(rng) < plan.edge_bias) {
      double t = unit_uniform(rng) * perimeter;
      if (t < w) {
        pts.push_back({rect.x_min + t, rect.y_min});
      } else if ((t -= w) < h) {
        pts.push_back({rect.x_max, rect.y_min + t});
      } else if ((t -= h) < w) {
        pts.push_back({rect.x_max - t, rect.y_max});
      } else {
        t -= w;
        pts.push_back({rect.x_min, rect.y_max - t});
      }
    } else {
      const double u = unit_uniform(rng);
      const double v = unit_uniform(rng);
      pts.push_back({rect.x_min + u * w, rect.y_min + v * h});
    }
  }
  return pts;
}

Integrator::Integrator(FieldSet fields, const VehicleFootprint & footprint, const SamplingPlan & plan)
: fields_(std::move(fields))
{
  const auto rects = footprint.all_rects();
  for (std::size_t i = 0; i < rects.size(); ++i) {
    auto pts = sample_rect(rects[i].rect, plan, i);
    if (pts.empty()) {
      continue;
    }
    const std::size_t begin = points_.size();
    points_.insert(points_.end(), pts.begin(), pts.end());
    groups_.push_back({begin, points_.size(), rects[i].weight * rects[i].rect.area()});
  }
}

double Integrator::operator()(const Pose & pose) const
{
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  double total = 0.0;
  for (const auto & g : groups_) {
    double sum = 0.0;
    for (std::size_t i = g.begin; i < g.end; ++i) {
      const Point2 p = points_[i];
      sum += fields_.gamma({c * p.x - s * p.y + pose.x, s * p.x + c * p.y + pose.y});
    }
    total += g.scale * (sum / static_cast<double>(g.end - g.begin));
  }
  return total;
}

double objective(
  const FieldSet & fields, const VehicleFootprint & footprint, const Pose & pose,
  const SamplingPlan & plan)
{
  return Integrator(fields, footprint, plan)(pose);
}

std::vector<double> evaluate_poses(
  const Integrator & integrator, std::span<const Pose> poses, Execution exec)
{
  std::vector<double> scores(poses.size());
  const auto n = static_cast<std::ptrdiff_t>(poses.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      scores[static_cast<std::size_t>(i)] = integrator(poses[static_cast<std::size_t>(i)]);
    }
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      scores[static_cast<std::size_t>(i)] = integrator(poses[static_cast<std::size_t>(i)]);
    }
  }
  return scores;
}

double approach_distance(const Pose & pose, const ParkingSpot & spot)
{
  switch (spot.approach_side) {
    case ApproachSide::x_min: return pose.x;
    case ApproachSide::x_max: return spot.length - pose.x;
    case ApproachSide::y_min: return pose.y;
    case ApproachSide::y_max: return spot.width - pose.y;
  }
  return pose.x;
}

bool ranks_before(const PoseCandidate & a, const PoseCandidate & b, const ParkingSpot & spot)
{
  if (a.score != b.score) {
    return a.score < b.score;
  }
  const double dev_a = std::abs(normalize_angle(a.pose.theta - a.base));
  const double dev_b = std::abs(normalize_angle(b.pose.theta - b.base));
  if (dev_a != dev_b) {
    return dev_a < dev_b;
  }
  const double dist_a = approach_distance(a.pose, spot);
  const double dist_b = approach_distance(b.pose, spot);
  if (dist_a != dist_b) {
    return dist_a > dist_b;
  }
  if (a.pose.x != b.pose.x) {
    return a.pose.x < b.pose.x;
  }
  if (a.pose.y != b.pose.y) {
    return a.pose.y < b.pose.y;
  }
  return normalize_angle(a.pose.theta) < normalize_angle(b.pose.theta);
}

std::vector<double> base_headings(
  const VehicleFootprint & footprint, const ParkingSpot & spot, const SolverConfig & config)
{
  const double body_len = footprint.body.rect.width();
  const double body_wid = footprint.body.rect.height();
  const bool lengthwise = body_len <= spot.length && body_wid <= spot.width;
  const bool crosswise = body_len <= spot.width && body_wid <= spot.length;
  if (!lengthwise && !crosswise) {
    const bool length_short = body_len > spot.length;
    std::ostringstream msg;
    msg << "spot '" << spot.id << "' is too small: body "
        << (length_short ? "length " : "width ") << (length_short ? body_len : body_wid)
        << " m exceeds spot " << (length_short ? "length " : "width ")
        << (length_short ? spot.length : spot.width) << " m";
    throw InfeasibleError(
      length_short ? "length" : "width", length_short ? body_len : body_wid,
      length_short ? spot.length : spot.width, msg.str());
  }
  const double pi = std::numbers::pi;
  // forwards means the nose points away from the approach edge; for lane-side
  // approaches the lane is taken to run along +x
  double forwards = lengthwise ? 0.0 : 0.5 * pi;
  if (lengthwise && spot.approach_side == ApproachSide::x_max) {
    forwards = pi;
  } else if (!lengthwise && spot.approach_side == ApproachSide::y_max) {
    forwards = -0.5 * pi;
  }
  const double backwards = normalize_angle(forwards + pi);
  switch (config.headings) {
    case HeadingChoice::forwards: return {forwards};
    case HeadingChoice::backwards: return {backwards};
    case HeadingChoice::both: break;
  }
  return {forwards, backwards};
}

namespace
{

std::vector<double> linspace_even(double extent, double pitch)
{
  // an even number of intervals keeps the midpoint on the grid
  const auto half = std::max<long>(1, static_cast<long>(std::ceil(extent / (2.0 * pitch) - 1e-9)));
  const long intervals = 2 * half;
  std::vector<double> v(static_cast<std::size_t>(intervals + 1));
  for (long i = 0; i <= intervals; ++i) {
    v[static_cast<std::size_t>(i)] = extent * static_cast<double>(i) / static_cast<double>(intervals);
  }
  return v;
}

struct Refinement
{
  PoseCandidate best;
  long evaluations{0};
  bool converged{false};
};

Refinement compass_search(
  const Integrator & integrator, const ParkingSpot & spot, const SolverConfig & config,
  PoseCandidate start)
{
  Refinement out{start, 0, false};
  double step_xy = config.step_init_xy;
  double step_theta = config.theta_range > 0.0 ? config.step_init_theta : 0.0;
  const double theta_lo = start.base - config.theta_range;
  const double theta_hi = start.base + config.theta_range;

  auto clamp_pose = [&](Pose p) {
    p.x = std::clamp(p.x, 0.0, spot.length);
    p.y = std::clamp(p.y, 0.0, spot.width);
    p.theta = std::clamp(p.theta, theta_lo, theta_hi);
    return p;
  };

  std::vector<Pose> polls;
  int restarts_left = 1;
  bool improved_since_restart = false;
  while (true) {
    bool move_xy = step_xy >= config.step_min_xy;
    bool move_theta = step_theta >= config.step_min_theta;
    if (!move_xy && !move_theta) {
      // one restart at full step from the converged point; kinks of the
      // sampled objective can stall a single pass
      if (restarts_left > 0 && improved_since_restart) {
        --restarts_left;
        improved_since_restart = false;
        step_xy = config.step_init_xy;
        step_theta = config.theta_range > 0.0 ? config.step_init_theta : 0.0;
        continue;
      }
      out.converged = true;
      break;
    }
    if (out.evaluations >= config.max_evaluations) {
      break;
    }
    polls.clear();
    const Pose c = out.best.pose;
    // every combination of {-1, 0, +1} per coordinate, except the centre
    const int t_span = move_theta ? 1 : 0;
    const int xy_span = move_xy ? 1 : 0;
    for (int dt = -t_span; dt <= t_span; ++dt) {
      for (int dx = -xy_span; dx <= xy_span; ++dx) {
        for (int dy = -xy_span; dy <= xy_span; ++dy) {
          if (dx == 0 && dy == 0 && dt == 0) {
            continue;
          }
          polls.push_back(
            clamp_pose({c.x + dx * step_xy, c.y + dy * step_xy, c.theta + dt * step_theta}));
        }
      }
    }

    PoseCandidate best_poll = out.best;
    for (const auto & p : polls) {
      const PoseCandidate cand{p, start.base, integrator(p)};
      ++out.evaluations;
      if (cand.score < out.best.score && ranks_before(cand, best_poll, spot)) {
        best_poll = cand;
      }
    }
    if (best_poll.score < out.best.score) {
      out.best = best_poll;
      improved_since_restart = true;
    } else {
      step_xy *= 0.5;
      step_theta *= 0.5;
    }
  }
  return out;
}

// Dense check of the step_min lattice around the incumbent. Compass search on
// a piecewise-linear sampled objective can stop at a kink whose descent cone
// none of the poll directions hit.
bool lattice_polish(
  const Integrator & integrator, const ParkingSpot & spot, const SolverConfig & config,
  Refinement & state)
{
  const int half_xy = config.polish_radius;
  const int half_t = config.theta_range > 0.0 ? config.polish_radius : 0;
  const Pose c = state.best.pose;
  const double theta_lo = state.best.base - config.theta_range;
  const double theta_hi = state.best.base + config.theta_range;
  PoseCandidate best = state.best;
  for (int dt = -half_t; dt <= half_t; ++dt) {
    for (int dx = -half_xy; dx <= half_xy; ++dx) {
      for (int dy = -half_xy; dy <= half_xy; ++dy) {
        if (dx == 0 && dy == 0 && dt == 0) {
          continue;
        }
        const Pose p{
          std::clamp(c.x + dx * config.step_min_xy, 0.0, spot.length),
          std::clamp(c.y + dy * config.step_min_xy, 0.0, spot.width),
          std::clamp(c.theta + dt * config.step_min_theta, theta_lo, theta_hi)};
        const PoseCandidate cand{p, state.best.base, integrator(p)};
        ++state.evaluations;
        if (cand.score < state.best.score && ranks_before(cand, best, spot)) {
          best = cand;
        }
      }
    }
  }
  if (best.score < state.best.score) {
    state.best = best;
    return true;
  }
  return false;
}

Refinement refine(
  const Integrator & integrator, const ParkingSpot & spot, const SolverConfig & config,
  PoseCandidate start)
{
  Refinement state = compass_search(integrator, spot, config, start);
  if (config.polish_radius <= 0) {
    return state;
  }
  while (state.evaluations < config.max_evaluations && lattice_polish(integrator, spot, config, state)) {
    const long spent = state.evaluations;
    SolverConfig fine = config;
    fine.step_init_xy = 2.0 * config.step_min_xy;
    fine.step_init_theta = 2.0 * config.step_min_theta;
    fine.max_evaluations = config.max_evaluations - spent;
    state = compass_search(integrator, spot, fine, state.best);
    state.evaluations += spent;
  }
  return state;
}

}  // namespace

SolveResult minimize(
  const FieldSet & fields, const VehicleFootprint & footprint, const ParkingSpot & spot,
  const SamplingPlan & plan, const SolverConfig & config, Execution exec)
{
  const auto bases = base_headings(footprint, spot, config);
  const Integrator integrator(fields, footprint, plan);

  const auto xs = linspace_even(spot.length, config.grid_pitch);
  const auto ys = linspace_even(spot.width, config.grid_pitch);
  const int half = config.theta_range > 0.0 ? std::max(config.grid_heading_steps, 0) : 0;
  std::vector<double> offsets;
  for (int t = -half; t <= half; ++t) {
    offsets.push_back(half == 0 ? 0.0 : config.theta_range * t / half);
  }
  const std::size_t nx = xs.size();
  const std::size_t ny = ys.size();
  const std::size_t nt = offsets.size();
  const std::size_t per_base = nx * ny * nt;
  std::vector<PoseCandidate> coarse;
  coarse.reserve(bases.size() * per_base);
  for (double base : bases) {
    for (double x : xs) {
      for (double y : ys) {
        for (double off : offsets) {
          coarse.push_back({{x, y, base + off}, base, 0.0});
        }
      }
    }
  }
  std::vector<Pose> poses(coarse.size());
  std::transform(coarse.begin(), coarse.end(), poses.begin(), [](const auto & c) { return c.pose; });
  const auto scores = evaluate_poses(integrator, poses, exec);
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    coarse[i].score = scores[i];
  }

  const auto by_rank = [&](const PoseCandidate & a, const PoseCandidate & b) {
    return ranks_before(a, b, spot);
  };
  const auto by_index_rank = [&](std::size_t a, std::size_t b) { return by_rank(coarse[a], coarse[b]); };

  // Starts, per base heading: coarse cells that no (x, y) neighbour at the
  // same heading beats, best first, so the refinements land in different basins; topped up with
  // the best remaining cells of that heading.
  const auto k = std::min<std::size_t>(static_cast<std::size_t>(std::max(config.starts, 1)), per_base);
  const auto in_range = [](std::ptrdiff_t v, std::size_t n) {
    return v >= 0 && v < static_cast<std::ptrdiff_t>(n);
  };
  std::vector<std::size_t> order;
  for (std::size_t b = 0; b < bases.size(); ++b) {
    std::vector<std::size_t> minima;
    std::vector<std::size_t> rest;
    for (std::size_t ix = 0; ix < nx; ++ix) {
      for (std::size_t iy = 0; iy < ny; ++iy) {
        for (std::size_t it = 0; it < nt; ++it) {
          const std::size_t i = ((b * nx + ix) * ny + iy) * nt + it;
          bool local_min = true;
          for (int d = 0; d < 9 && local_min; ++d) {
            const int dx = d / 3 - 1;
            const int dy = d % 3 - 1;
            const auto jx = static_cast<std::ptrdiff_t>(ix) + dx;
            const auto jy = static_cast<std::ptrdiff_t>(iy) + dy;
            if (d == 4 || !in_range(jx, nx) || !in_range(jy, ny)) {
              continue;
            }
            const auto j = ((b * nx + static_cast<std::size_t>(jx)) * ny + static_cast<std::size_t>(jy)) * nt + it;
            local_min = !by_rank(coarse[j], coarse[i]);
          }
          (local_min ? minima : rest).push_back(i);
        }
      }
    }
    std::sort(minima.begin(), minima.end(), by_index_rank);
    std::sort(rest.begin(), rest.end(), by_index_rank);
    minima.insert(minima.end(), rest.begin(), rest.end());
    order.insert(order.end(), minima.begin(), minima.begin() + static_cast<std::ptrdiff_t>(k));
  }
  std::vector<PoseCandidate> seeds;
  for (std::size_t i : order) {
    seeds.push_back(coarse[i]);
  }

  std::vector<Refinement> refined(seeds.size());
  const auto ns = static_cast<std::ptrdiff_t>(seeds.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < ns; ++i) {
      refined[static_cast<std::size_t>(i)] =
        refine(integrator, spot, config, seeds[static_cast<std::size_t>(i)]);
    }
  } else {
    for (std::ptrdiff_t i = 0; i < ns; ++i) {
      refined[static_cast<std::size_t>(i)] =
        refine(integrator, spot, config, seeds[static_cast<std::size_t>(i)]);
    }
  }

  SolveResult result;
  result.evaluations = static_cast<long>(coarse.size());
  result.converged = true;
  const PoseCandidate * best = nullptr;
  for (const auto & r : refined) {
    result.evaluations += r.evaluations;
    result.converged = result.converged && r.converged;
    if (best == nullptr || ranks_before(r.best, *best, spot)) {
      best = &r.best;
    }
  }
  result.pose = best->pose;
  result.pose.theta = normalize_angle(best->pose.theta);
  result.score = best->score;
  return result;
}

namespace
{

struct Lattice
{
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> offsets;
  std::vector<double> bases;

  long size() const
  {
    return static_cast<long>(xs.size() * ys.size() * offsets.size() * bases.size());
  }
};

std::vector<double> inclusive_range(double extent, double step)
{
  const auto intervals = std::max<long>(1, std::lround(extent / step));
  std::vector<double> v(static_cast<std::size_t>(intervals + 1));
  for (long i = 0; i <= intervals; ++i) {
    v[static_cast<std::size_t>(i)] = extent * static_cast<double>(i) / static_cast<double>(intervals);
  }
  return v;
}

Lattice make_lattice(
  const VehicleFootprint & footprint, const ParkingSpot & spot, const LatticeResolution & resolution,
  const SolverConfig & config)
{
  if (!(resolution.xy > 0.0) || !(resolution.theta > 0.0)) {
    throw BudgetError("lattice resolution must be positive");
  }
  Lattice lat;
  lat.bases = base_headings(footprint, spot, config);
  const double extent_x = spot.length / resolution.xy;
  const double extent_y = spot.width / resolution.xy;
  const double extent_t = config.theta_range / resolution.theta;
  if (extent_x * extent_y * (2.0 * extent_t + 1.0) * static_cast<double>(lat.bases.size()) >
      4.0 * static_cast<double>(kMaxLatticePoses)) {
    throw BudgetError("oracle lattice would exceed 1e7 poses");
  }
  lat.xs = inclusive_range(spot.length, resolution.xy);
  lat.ys = inclusive_range(spot.width, resolution.xy);
  if (config.theta_range > 0.0) {
    const auto half = std::max<long>(1, static_cast<long>(std::ceil(extent_t - 1e-9)));
    for (long i = -half; i <= half; ++i) {
      lat.offsets.push_back(config.theta_range * static_cast<double>(i) / static_cast<double>(half));
    }
  } else {
    lat.offsets.push_back(0.0);
  }
  return lat;
}

}  // namespace

long lattice_size(
  const VehicleFootprint & footprint, const ParkingSpot & spot, const LatticeResolution & resolution,
  const SolverConfig & config)
{
  return make_lattice(footprint, spot, resolution, config).size();
}

SolveResult brute_force_minimize(
  const FieldSet & fields, const VehicleFootprint & footprint, const ParkingSpot & spot,
  const SamplingPlan & plan, const LatticeResolution & resolution, const SolverConfig & config,
  Execution exec)
{
  const auto lat = make_lattice(footprint, spot, resolution, config);
  if (lat.size() > kMaxLatticePoses) {
    throw BudgetError(
      "oracle lattice has " + std::to_string(lat.size()) + " poses (limit 1e7)");
  }
  const Integrator integrator(fields, footprint, plan);

  PoseCandidate best{};
  bool have_best = false;
  std::vector<Pose> row;
  for (double base : lat.bases) {
    for (double x : lat.xs) {
      row.clear();
      for (double y : lat.ys) {
        for (double off : lat.offsets) {
          row.push_back({x, y, base + off});
        }
      }
      const auto scores = evaluate_poses(integrator, row, exec);
      for (std::size_t i = 0; i < row.size(); ++i) {
        const PoseCandidate cand{row[i], base, scores[i]};
        if (!have_best || ranks_before(cand, best, spot)) {
          best = cand;
          have_best = true;
        }
      }
    }
  }

  SolveResult result;
  result.pose = best.pose;
  result.pose.theta = normalize_angle(best.pose.theta);
  result.score = best.score;
  result.evaluations = lat.size();
  result.converged = true;
  return result;
}

}  // namespace parkfield
