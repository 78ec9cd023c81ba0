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

#ifndef PARKFIELD__CONFIG_HPP_
#define PARKFIELD__CONFIG_HPP_

#include <filesystem>
#include <string_view>

#include "parkfield/solver.hpp"
#include "parkfield/strategy.hpp"

namespace parkfield
{

/// Field-map and image settings for `render`.
struct RenderConfig
{
  double resolution{20.0};  // field cells per meter
  double margin{1.0};       // meters of scene padding
};

/// Everything a run needs besides the scenario. Every field has a default,
/// so an absent or empty config file is valid; reports echo the full value.
struct RunConfig
{
  SamplingPlan sampling;
  SolverConfig solver;
  StrategyConfig strategy;
  LatticeResolution oracle;
  RenderConfig render;
};

/// Parses a config document (JSON, comments allowed). Unknown keys and
/// out-of-range values raise ParseError naming the offending path.
RunConfig load_config(std::string_view text);
RunConfig load_config_file(const std::filesystem::path & path);

/// Throws ParseError when a programmatically assembled config is out of range.
void validate(const RunConfig & config);

}  // namespace parkfield

#endif  // PARKFIELD__CONFIG_HPP_
