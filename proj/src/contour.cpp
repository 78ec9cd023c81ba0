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

#include "parkfield/contour.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace parkfield
{

namespace
{

// Cell sides in the order bottom, right, top, left.
enum Side : int { kBottom = 0, kRight = 1, kTop = 2, kLeft = 3 };

struct Segment
{
  std::int64_t edge[2];
};

class Lattice
{
public:
  Lattice(const FieldMap & map, double level) : map_(map), level_(level) {}

  bool inside(std::size_t r, std::size_t c) const { return map_.at(r, c) >= level_; }

  // Horizontal edge (r,c)-(r,c+1) is 2k, vertical edge (r,c)-(r+1,c) is 2k+1.
  std::int64_t edge_id(std::size_t r, std::size_t c, Side side) const
  {
    const auto k = [this](std::size_t rr, std::size_t cc) {
      return static_cast<std::int64_t>(rr * map_.cols + cc);
    };
    switch (side) {
      case kBottom:
        return 2 * k(r, c);
      case kRight:
        return 2 * k(r, c + 1) + 1;
      case kTop:
        return 2 * k(r + 1, c);
      case kLeft:
        break;
    }
    return 2 * k(r, c) + 1;
  }

  Point2 crossing(std::int64_t id) const
  {
    const auto node = static_cast<std::size_t>(id / 2);
    const std::size_t r0 = node / map_.cols;
    const std::size_t c0 = node % map_.cols;
    const bool vertical = (id % 2) != 0;
    const std::size_t r1 = vertical ? r0 + 1 : r0;
    const std::size_t c1 = vertical ? c0 : c0 + 1;
    const double v0 = map_.at(r0, c0);
    const double v1 = map_.at(r1, c1);
    const double t = (level_ - v0) / (v1 - v0);  // v0 != v1: the edge straddles the level
    const Point2 p0 = map_.cell_center(r0, c0);
    const Point2 p1 = map_.cell_center(r1, c1);
    return p0 + t * (p1 - p0);
  }

private:
  const FieldMap & map_;
  double level_;
};

// Side pairs crossed by the level for each corner configuration (bit 0
// bottom-left, 1 bottom-right, 2 top-right, 3 top-left). For the saddles
// (5, 10) this is the pairing used when the cell centre is outside.
struct CaseEntry
{
  int count;
  Side sides[4];
};

constexpr CaseEntry kCases[16] = {
  {0, {}},
  {1, {kLeft, kBottom}},
  {1, {kBottom, kRight}},
  {1, {kLeft, kRight}},
  {1, {kRight, kTop}},
  {2, {kLeft, kBottom, kRight, kTop}},
  {1, {kBottom, kTop}},
  {1, {kLeft, kTop}},
  {1, {kTop, kLeft}},
  {1, {kBottom, kTop}},
  {2, {kBottom, kRight, kTop, kLeft}},
  {1, {kRight, kTop}},
  {1, {kLeft, kRight}},
  {1, {kBottom, kRight}},
  {1, {kLeft, kBottom}},
  {0, {}},
};

// Saddles with the centre inside: the two outside corners are cut off.
constexpr CaseEntry kSaddle5Inside{2, {kBottom, kRight, kTop, kLeft}};
constexpr CaseEntry kSaddle10Inside{2, {kLeft, kBottom, kRight, kTop}};

void trace_level(const FieldMap & map, double level, std::vector<Polyline> & out)
{
  const Lattice lattice(map, level);
  std::vector<Segment> segments;
  for (std::size_t r = 0; r + 1 < map.rows; ++r) {
    for (std::size_t c = 0; c + 1 < map.cols; ++c) {
      const int index = (lattice.inside(r, c) ? 1 : 0) | (lattice.inside(r, c + 1) ? 2 : 0) |
                        (lattice.inside(r + 1, c + 1) ? 4 : 0) | (lattice.inside(r + 1, c) ? 8 : 0);
      const CaseEntry * entry = &kCases[index];
      if (index == 5 || index == 10) {
        const double centre =
          0.25 * (map.at(r, c) + map.at(r, c + 1) + map.at(r + 1, c + 1) + map.at(r + 1, c));
        if (centre >= level) {
          entry = index == 5 ? &kSaddle5Inside : &kSaddle10Inside;
        }
      }
      for (int s = 0; s < entry->count; ++s) {
        segments.push_back(
          {{lattice.edge_id(r, c, entry->sides[2 * s]), lattice.edge_id(r, c, entry->sides[2 * s + 1])}});
      }
    }
  }

  // Each lattice edge borders at most two cells, hence at most two segments.
  std::vector<std::pair<std::int64_t, std::size_t>> ends;
  ends.reserve(2 * segments.size());
  for (std::size_t i = 0; i < segments.size(); ++i) {
    ends.emplace_back(segments[i].edge[0], i);
    ends.emplace_back(segments[i].edge[1], i);
  }
  std::sort(ends.begin(), ends.end());
  const auto neighbour = [&](std::int64_t edge, std::size_t self) -> std::ptrdiff_t {
    auto it = std::lower_bound(ends.begin(), ends.end(), std::make_pair(edge, std::size_t{0}));
    for (; it != ends.end() && it->first == edge; ++it) {
      if (it->second != self) {
        return static_cast<std::ptrdiff_t>(it->second);
      }
    }
    return -1;
  };

  std::vector<bool> used(segments.size(), false);
  // Follows the chain leaving `seg` through `edge`, appending crossed edges.
  const auto walk = [&](std::size_t seg, std::int64_t edge, std::vector<std::int64_t> & chain) {
    for (;;) {
      const auto next = neighbour(edge, seg);
      if (next < 0 || used[static_cast<std::size_t>(next)]) {
        return;
      }
      seg = static_cast<std::size_t>(next);
      used[seg] = true;
      const auto & e = segments[seg].edge;
      edge = e[0] == edge ? e[1] : e[0];
      chain.push_back(edge);
    }
  };

  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (used[i]) {
      continue;
    }
    used[i] = true;
    std::vector<std::int64_t> chain{segments[i].edge[0], segments[i].edge[1]};
    walk(i, segments[i].edge[1], chain);
    Polyline line;
    line.level = level;
    if (chain.size() > 2 && chain.back() == chain.front()) {
      chain.pop_back();
      line.closed = true;
    } else {
      std::vector<std::int64_t> backward;
      walk(i, segments[i].edge[0], backward);
      chain.insert(chain.begin(), backward.rbegin(), backward.rend());
    }
    for (const auto id : chain) {
      line.points.push_back(lattice.crossing(id));
    }
    out.push_back(std::move(line));
  }
}

}  // namespace

std::vector<Polyline> contour_lines(const FieldMap & map, std::span<const double> levels)
{
  std::vector<Polyline> out;
  for (const double level : levels) {
    trace_level(map, level, out);
  }
  return out;
}

}  // namespace parkfield
