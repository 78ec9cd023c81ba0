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

#include "parkfield/report.hpp"

#include <array>
#include <cstdio>

#include "config_json.hpp"

namespace parkfield
{

std::uint64_t fnv1a64(std::string_view bytes)
{
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string content_digest(std::string_view bytes)
{
  std::array<char, 17> hex{};
  std::snprintf(hex.data(), hex.size(), "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return "fnv1a64:" + std::string(hex.data());
}

namespace
{

json pose_json(const Pose & p) { return {{"x", p.x}, {"y", p.y}, {"theta", p.theta}}; }

json strategy_json(const ParkingStrategy & s, std::size_t rank)
{
  return {
    {"rank", rank},
    {"spot_id", s.spot_id},
    {"score", s.score},
    {"pose", pose_json(s.pose)},
    {"global_pose", pose_json(s.global_pose)},
    {"direction", to_string(s.direction)},
    {"lateral_bias", to_string(s.lateral)},
    {"longitudinal_bias", to_string(s.longitudinal)},
    {"drivers", s.drivers},
    {"explanation", s.explanation},
    {"stats", {{"evaluations", s.solve.evaluations}, {"converged", s.solve.converged}}},
  };
}

json infeasible_json(const InfeasibleSpot & i)
{
  return {{"spot_id", i.spot_id}, {"dimension", i.dimension}, {"reason", i.reason}};
}

std::string_view status_of(const RunReport & r) { return r.ranked.has_strategy() ? "ok" : "no_strategy"; }

}  // namespace

std::string format_report(const RunReport & r, ReportFormat format)
{
  json strategies = json::array();
  for (std::size_t i = 0; i < r.ranked.strategies.size(); ++i) {
    strategies.push_back(strategy_json(r.ranked.strategies[i], i + 1));
  }
  json infeasible = json::array();
  for (const auto & i : r.ranked.infeasible) {
    infeasible.push_back(infeasible_json(i));
  }
  const json scenario = {{"path", r.scenario_path}, {"digest", r.digest}};

  if (format == ReportFormat::report) {
    const json doc = {
      {"schema", kReportSchema},
      {"verb", r.verb},
      {"status", status_of(r)},
      {"scenario", scenario},
      {"config", to_json(r.config)},
      {"warnings", r.warnings},
      {"strategies", strategies},
      {"infeasible", infeasible},
      {"wall_time_s", r.wall_seconds},
    };
    return doc.dump(2) + "\n";
  }

  std::string out;
  const auto line = [&out](const json & record) { out += record.dump() + "\n"; };
  line({{"type", "run"},
        {"schema", kReportSchema},
        {"verb", r.verb},
        {"scenario", scenario},
        {"config", to_json(r.config)},
        {"warnings", r.warnings}});
  for (auto & s : strategies) {
    s["type"] = "strategy";
    line(s);
  }
  for (auto & i : infeasible) {
    i["type"] = "infeasible";
    line(i);
  }
  line({{"type", "summary"},
        {"status", status_of(r)},
        {"strategies", strategies.size()},
        {"infeasible", infeasible.size()},
        {"wall_time_s", r.wall_seconds}});
  return out;
}

}  // namespace parkfield
