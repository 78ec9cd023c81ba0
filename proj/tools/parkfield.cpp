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

// Command-line front end: solve, render, oracle, validate.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "parkfield/config.hpp"
#include "parkfield/errors.hpp"
#include "parkfield/execution.hpp"
#include "parkfield/render.hpp"
#include "parkfield/report.hpp"
#include "parkfield/scenario.hpp"
#include "parkfield/strategy.hpp"

namespace
{

using namespace parkfield;

enum ExitCode : int { kOk = 0, kParse = 2, kInfeasible = 3, kBudget = 4, kIo = 5 };

struct Options
{
  std::string scenario;
  std::string config;
  std::optional<std::string> sampling;
  std::optional<double> density;
  std::optional<std::uint64_t> seed;
  std::string format{"report"};
  int threads{0};
  bool field{false};
  bool pose{false};
  std::string output;
  std::optional<double> resolution_xy;
  std::optional<double> resolution_theta;
};

void add_run_flags(CLI::App & cmd, Options & o)
{
  cmd.add_option("scenario", o.scenario, "Scenario file")->required();
  cmd.add_option("--config", o.config, "Run config file (JSON)");
  cmd.add_option("--sampling", o.sampling, "Footprint integration")->check(CLI::IsMember({"grid", "mc"}));
  cmd.add_option("--density", o.density, "Samples per m^2 (grid) or points per rectangle (mc)")
    ->check(CLI::PositiveNumber);
  cmd.add_option("--seed", o.seed, "Monte Carlo seed");
  cmd.add_option("--threads", o.threads, "Worker threads (0: runtime default)")->check(CLI::NonNegativeNumber);
}

void add_format_flag(CLI::App & cmd, Options & o)
{
  cmd.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"report", "json-lines"}));
}

// Config file first, then command-line overrides.
RunConfig resolve_config(const Options & o)
{
  RunConfig config = o.config.empty() ? RunConfig{} : load_config_file(o.config);
  if (o.sampling) {
    config.sampling.mode = *o.sampling == "mc" ? SamplingMode::monte_carlo : SamplingMode::grid;
  }
  if (o.density) {
    if (config.sampling.mode == SamplingMode::grid) {
      config.sampling.density = *o.density;
    } else {
      if (*o.density != static_cast<double>(static_cast<int>(*o.density))) {
        throw ParseError("--density", "Monte Carlo point count must be an integer");
      }
      config.sampling.count = static_cast<int>(*o.density);
    }
  }
  if (o.seed) {
    config.sampling.seed = *o.seed;
  }
  if (o.resolution_xy) {
    config.oracle.xy = *o.resolution_xy;
  }
  if (o.resolution_theta) {
    config.oracle.theta = *o.resolution_theta;
  }
  validate(config);
  return config;
}

void print_warnings(const Scenario & scenario)
{
  for (const auto & w : scenario.warnings) {
    std::cerr << "parkfield: warning: " << w << "\n";
  }
}

int run_report(const Options & o, bool oracle)
{
  const auto started = std::chrono::steady_clock::now();
  const std::string text = read_text_file(o.scenario);
  const Scenario scenario = load_scenario(text);
  const RunConfig config = resolve_config(o);

  SpotSolver solve = minimizer(config.sampling, config.solver);
  if (oracle) {
    solve = [&config](const FieldSet & f, const VehicleFootprint & fp, const ParkingSpot & spot) {
      return brute_force_minimize(f, fp, spot, config.sampling, config.oracle, config.solver);
    };
  }

  RunReport report;
  report.verb = oracle ? "oracle" : "solve";
  report.scenario_path = o.scenario;
  report.digest = content_digest(text);
  report.config = config;
  report.warnings = scenario.warnings;
  report.ranked = rank_spots(scenario, solve, config.strategy);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  std::cout << format_report(report, o.format == "json-lines" ? ReportFormat::json_lines : ReportFormat::report)
            << std::flush;
  print_warnings(scenario);
  if (!report.ranked.has_strategy()) {
    std::cerr << "parkfield: no strategy: every spot is infeasible\n";
    return kInfeasible;
  }
  return kOk;
}

int run_render(const Options & o)
{
  const Scenario scenario = load_scenario_file(o.scenario);
  const RunConfig config = resolve_config(o);
  RenderLayers layers;
  if (o.field) {
    layers.contours = scene_contours(scenario, config.render);
  }
  bool infeasible = false;
  if (o.pose) {
    StrategyConfig quiet = config.strategy;
    quiet.explain = false;
    const auto ranked = rank_spots(scenario, config.sampling, config.solver, quiet);
    const auto footprint = build_footprint(scenario.context, scenario.vehicle);
    for (const auto & s : ranked.strategies) {
      const auto spot = std::find_if(
        scenario.spots.begin(), scenario.spots.end(), [&](const ParkingSpot & p) { return p.id == s.spot_id; });
      layers.vehicles.push_back(place_footprint(footprint, s.pose, *spot));
    }
    infeasible = !ranked.has_strategy();
  }
  const std::string svg = render_svg(scenario, layers, config.render);
  std::ofstream out(o.output, std::ios::binary);
  if (!out || !(out << svg) || !out.flush()) {
    std::cerr << "parkfield: error: cannot write '" << o.output << "'\n";
    return kIo;
  }
  print_warnings(scenario);
  if (infeasible) {
    std::cerr << "parkfield: no strategy: every spot is infeasible\n";
    return kInfeasible;
  }
  return kOk;
}

int run_validate(const Options & o)
{
  const Scenario scenario = load_scenario_file(o.scenario);
  if (!o.config.empty()) {
    load_config_file(o.config);
  }
  print_warnings(scenario);
  std::cout << "valid: " << scenario.spots.size() << " spot(s), " << scenario.obstacles.size()
            << " obstacle(s)\n";
  return kOk;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Context-aware parking pose optimizer"};
  app.require_subcommand(1);
  Options o;

  auto * solve = app.add_subcommand("solve", "Rank spots and print the strategy report");
  add_run_flags(*solve, o);
  add_format_flag(*solve, o);

  auto * oracle = app.add_subcommand("oracle", "Like solve, with exhaustive lattice search per spot");
  add_run_flags(*oracle, o);
  add_format_flag(*oracle, o);
  oracle->add_option("--resolution", o.resolution_xy, "Lattice step in x and y (m)")->check(CLI::PositiveNumber);
  oracle->add_option("--resolution-theta", o.resolution_theta, "Lattice heading step (rad)")
    ->check(CLI::PositiveNumber);

  auto * render = app.add_subcommand("render", "Draw the scene as SVG");
  add_run_flags(*render, o);
  render->add_flag("--field", o.field, "Draw field contours");
  render->add_flag("--pose", o.pose, "Draw the optimal footprint in every feasible spot");
  render->add_option("-o,--output", o.output, "Output SVG path")->required();

  auto * validate_cmd = app.add_subcommand("validate", "Check scenario (and config) against the schema");
  validate_cmd->add_option("scenario", o.scenario, "Scenario file")->required();
  validate_cmd->add_option("--config", o.config, "Run config file (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp & e) {
    return app.exit(e);
  } catch (const CLI::ParseError & e) {
    app.exit(e);
    return kParse;
  }

  try {
    set_threads(o.threads);
    if (solve->parsed()) {
      return run_report(o, false);
    }
    if (oracle->parsed()) {
      return run_report(o, true);
    }
    if (render->parsed()) {
      if (!o.field && !o.pose) {
        std::cerr << "parkfield: error: render needs --field and/or --pose\n";
        return kParse;
      }
      return run_render(o);
    }
    return run_validate(o);
  } catch (const ParseError & e) {
    std::cerr << "parkfield: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const GeometryError & e) {
    std::cerr << "parkfield: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const BudgetError & e) {
    std::cerr << "parkfield: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InfeasibleError & e) {
    std::cerr << "parkfield: infeasible: " << e.what() << "\n";
    return kInfeasible;
  }
}
