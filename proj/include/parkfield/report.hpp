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

#ifndef PARKFIELD__REPORT_HPP_
#define PARKFIELD__REPORT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "parkfield/config.hpp"
#include "parkfield/strategy.hpp"

namespace parkfield
{

inline constexpr std::string_view kReportSchema = "parkfield.report/1";

enum class ReportFormat { report, json_lines };

/// One run of `solve` or `oracle`. Everything except `wall_seconds` is a
/// pure function of the scenario bytes and the config.
struct RunReport
{
  std::string verb;
  std::string scenario_path;
  std::string digest;  // "fnv1a64:" + 16 hex digits of the scenario bytes
  RunConfig config;
  std::vector<std::string> warnings;
  RankedStrategies ranked;
  double wall_seconds{0.0};
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);
std::string content_digest(std::string_view bytes);

/// `report`: one pretty-printed JSON document. `json_lines`: a run record,
/// one record per strategy and per infeasible spot, then a summary record.
/// Both end with a newline.
std::string format_report(const RunReport & report, ReportFormat format);

}  // namespace parkfield

#endif  // PARKFIELD__REPORT_HPP_
