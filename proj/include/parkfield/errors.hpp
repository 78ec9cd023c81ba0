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

#ifndef PARKFIELD__ERRORS_HPP_
#define PARKFIELD__ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace parkfield
{

/// Invalid geometric input (degenerate edge, non-convex obstacle, ...).
class GeometryError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Coincident consecutive vertices; carries the offending edge index.
class DegenerateEdgeError : public GeometryError
{
public:
  DegenerateEdgeError(std::size_t edge_index, const std::string & what)
  : GeometryError(what), edge_index_(edge_index)
  {
  }
  std::size_t edge_index() const noexcept { return edge_index_; }

private:
  std::size_t edge_index_;
};

/// Scenario or config text that violates the schema. `path()` is a
/// JSON-pointer-like location of the offending field, e.g. `/spots/0/length`.
class ParseError : public std::runtime_error
{
public:
  ParseError(std::string path, const std::string & what)
  : std::runtime_error(path.empty() ? what : path + ": " + what), path_(std::move(path))
  {
  }
  const std::string & path() const noexcept { return path_; }

private:
  std::string path_;
};

/// The vehicle body does not fit the spot in any spot-aligned orientation.
class InfeasibleError : public std::runtime_error
{
public:
  InfeasibleError(std::string dimension, double required, double available, const std::string & what)
  : std::runtime_error(what),
    dimension_(std::move(dimension)),
    required_(required),
    available_(available)
  {
  }
  const std::string & dimension() const noexcept { return dimension_; }
  double required() const noexcept { return required_; }
  double available() const noexcept { return available_; }

private:
  std::string dimension_;
  double required_;
  double available_;
};

/// A request would exceed a hard work budget (grid cells, lattice poses).
class BudgetError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

}  // namespace parkfield

#endif  // PARKFIELD__ERRORS_HPP_
