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

#include "parkfield/config.hpp"

#include <string>

#include "config_json.hpp"
#include "json_node.hpp"

namespace parkfield
{

namespace
{

std::string_view mode_name(SamplingMode mode) { return mode == SamplingMode::grid ? "grid" : "mc"; }

std::string_view heading_name(HeadingChoice h)
{
  switch (h) {
    case HeadingChoice::forwards:
      return "forwards";
    case HeadingChoice::backwards:
      return "backwards";
    case HeadingChoice::both:
      break;
  }
  return "both";
}

long integer(const Node & node)
{
  if (!node.value().is_number_integer()) {
    node.fail("expected an integer");
  }
  return node.value().get<long>();
}

void parse_sampling(const Node & node, SamplingPlan & plan)
{
  node.allow_keys({"mode", "density", "count", "seed", "edge_bias"});
  if (auto n = node.optional_child("mode")) {
    const auto m = n->string();
    if (m == "grid") {
      plan.mode = SamplingMode::grid;
    } else if (m == "mc") {
      plan.mode = SamplingMode::monte_carlo;
    } else {
      n->fail("expected \"grid\" or \"mc\"");
    }
  }
  if (auto n = node.optional_child("density")) plan.density = n->number();
  if (auto n = node.optional_child("count")) plan.count = static_cast<int>(integer(*n));
  if (auto n = node.optional_child("seed")) {
    if (!n->value().is_number_unsigned()) {
      n->fail("expected a non-negative integer");
    }
    plan.seed = n->value().get<std::uint64_t>();
  }
  if (auto n = node.optional_child("edge_bias")) plan.edge_bias = n->number();
}

void parse_solver(const Node & node, SolverConfig & c)
{
  node.allow_keys(
    {"grid_pitch", "grid_heading_steps", "starts", "step_init_xy", "step_init_theta", "step_min_xy",
     "step_min_theta", "theta_range", "headings", "polish_radius", "max_evaluations"});
  if (auto n = node.optional_child("grid_pitch")) c.grid_pitch = n->number();
  if (auto n = node.optional_child("grid_heading_steps")) c.grid_heading_steps = static_cast<int>(integer(*n));
  if (auto n = node.optional_child("starts")) c.starts = static_cast<int>(integer(*n));
  if (auto n = node.optional_child("step_init_xy")) c.step_init_xy = n->number();
  if (auto n = node.optional_child("step_init_theta")) c.step_init_theta = n->number();
  if (auto n = node.optional_child("step_min_xy")) c.step_min_xy = n->number();
  if (auto n = node.optional_child("step_min_theta")) c.step_min_theta = n->number();
  if (auto n = node.optional_child("theta_range")) c.theta_range = n->number();
  if (auto n = node.optional_child("headings")) {
    const auto h = n->string();
    if (h == "both") {
      c.headings = HeadingChoice::both;
    } else if (h == "forwards") {
      c.headings = HeadingChoice::forwards;
    } else if (h == "backwards") {
      c.headings = HeadingChoice::backwards;
    } else {
      n->fail("expected \"both\", \"forwards\" or \"backwards\"");
    }
  }
  if (auto n = node.optional_child("polish_radius")) c.polish_radius = static_cast<int>(integer(*n));
  if (auto n = node.optional_child("max_evaluations")) c.max_evaluations = integer(*n);
}

void parse_strategy(const Node & node, StrategyConfig & c)
{
  node.allow_keys({"eps_lateral", "eps_longitudinal", "explain"});
  if (auto n = node.optional_child("eps_lateral")) c.eps_lateral = n->number();
  if (auto n = node.optional_child("eps_longitudinal")) c.eps_longitudinal = n->number();
  if (auto n = node.optional_child("explain")) c.explain = n->boolean();
}

void parse_oracle(const Node & node, LatticeResolution & r)
{
  node.allow_keys({"resolution_xy", "resolution_theta"});
  if (auto n = node.optional_child("resolution_xy")) r.xy = n->number();
  if (auto n = node.optional_child("resolution_theta")) r.theta = n->number();
}

void parse_render(const Node & node, RenderConfig & r)
{
  node.allow_keys({"resolution", "margin"});
  if (auto n = node.optional_child("resolution")) r.resolution = n->number();
  if (auto n = node.optional_child("margin")) r.margin = n->number();
}

void require(bool ok, const std::string & path, const std::string & what)
{
  if (!ok) {
    throw ParseError(path, what);
  }
}

}  // namespace

void validate(const RunConfig & c)
{
  const auto & s = c.sampling;
  require(s.density > 0.0, "/sampling/density", "must be positive");
  require(s.count > 0, "/sampling/count", "must be positive");
  require(s.edge_bias >= 0.0 && s.edge_bias <= 1.0, "/sampling/edge_bias", "must lie in [0, 1]");

  const auto & v = c.solver;
  require(v.grid_pitch > 0.0, "/solver/grid_pitch", "must be positive");
  require(v.grid_heading_steps >= 0, "/solver/grid_heading_steps", "must be non-negative");
  require(v.starts >= 1, "/solver/starts", "must be at least 1");
  require(v.step_min_xy > 0.0, "/solver/step_min_xy", "must be positive");
  require(v.step_min_theta > 0.0, "/solver/step_min_theta", "must be positive");
  require(v.step_init_xy >= v.step_min_xy, "/solver/step_init_xy", "must be at least step_min_xy");
  require(
    v.step_init_theta >= v.step_min_theta, "/solver/step_init_theta", "must be at least step_min_theta");
  require(
    v.theta_range >= 0.0 && v.theta_range < std::numbers::pi / 2.0, "/solver/theta_range",
    "must lie in [0, pi/2) radians");
  require(v.polish_radius >= 0, "/solver/polish_radius", "must be non-negative");
  require(v.max_evaluations > 0, "/solver/max_evaluations", "must be positive");

  require(c.strategy.eps_lateral >= 0.0, "/strategy/eps_lateral", "must be non-negative");
  require(c.strategy.eps_longitudinal >= 0.0, "/strategy/eps_longitudinal", "must be non-negative");
  require(c.oracle.xy > 0.0, "/oracle/resolution_xy", "must be positive");
  require(c.oracle.theta > 0.0, "/oracle/resolution_theta", "must be positive");
  require(c.render.resolution > 0.0, "/render/resolution", "must be positive");
  require(c.render.margin >= 0.0, "/render/margin", "must be non-negative");
}

RunConfig load_config(std::string_view text)
{
  const json doc = parse_json_text(text);
  const Node root(doc, "");
  root.allow_keys({"version", "sampling", "solver", "strategy", "oracle", "render"});
  if (auto version = root.optional_child("version")) {
    if (!version->value().is_number_integer() || version->value().get<int>() != 1) {
      version->fail("unsupported version (expected 1)");
    }
  }
  RunConfig config;
  if (auto n = root.optional_child("sampling")) parse_sampling(*n, config.sampling);
  if (auto n = root.optional_child("solver")) parse_solver(*n, config.solver);
  if (auto n = root.optional_child("strategy")) parse_strategy(*n, config.strategy);
  if (auto n = root.optional_child("oracle")) parse_oracle(*n, config.oracle);
  if (auto n = root.optional_child("render")) parse_render(*n, config.render);
  validate(config);
  return config;
}

RunConfig load_config_file(const std::filesystem::path & path)
{
  return load_config(read_text_file(path));
}

json to_json(const RunConfig & c)
{
  const auto & s = c.sampling;
  const auto & v = c.solver;
  return json{
    {"version", 1},
    {"sampling",
     {{"mode", mode_name(s.mode)},
      {"density", s.density},
      {"count", s.count},
      {"seed", s.seed},
      {"edge_bias", s.edge_bias}}},
    {"solver",
     {{"grid_pitch", v.grid_pitch},
      {"grid_heading_steps", v.grid_heading_steps},
      {"starts", v.starts},
      {"step_init_xy", v.step_init_xy},
      {"step_init_theta", v.step_init_theta},
      {"step_min_xy", v.step_min_xy},
      {"step_min_theta", v.step_min_theta},
      {"theta_range", v.theta_range},
      {"headings", heading_name(v.headings)},
      {"polish_radius", v.polish_radius},
      {"max_evaluations", v.max_evaluations}}},
    {"strategy",
     {{"eps_lateral", c.strategy.eps_lateral},
      {"eps_longitudinal", c.strategy.eps_longitudinal},
      {"explain", c.strategy.explain}}},
    {"oracle", {{"resolution_xy", c.oracle.xy}, {"resolution_theta", c.oracle.theta}}},
    {"render", {{"resolution", c.render.resolution}, {"margin", c.render.margin}}},
  };
}

}  // namespace parkfield
