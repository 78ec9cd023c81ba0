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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "json.hpp"
#include "test_support.hpp"

namespace parkfield
{
namespace
{

namespace fs = std::filesystem;
using nlohmann::json;

struct Run
{
  int code{-1};
  std::string out;
};

Run run(const std::string & args)
{
  const std::string cmd = std::string(PARKFIELD_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE * pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return r;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden(const std::string & name) { return testing::scenario_path(name).string(); }

class CliTest : public ::testing::Test
{
protected:
  void SetUp() override
  {
    dir_ = fs::temp_directory_path() /
           ("parkfield_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string & name, const std::string & text) const
  {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path;
  }

  static std::string slurp(const fs::path & path)
  {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

json without_wall_time(json doc)
{
  doc.erase("wall_time_s");
  return doc;
}

TEST_F(CliTest, SolveEmptySpotReportsOneCentredStrategy)
{
  const auto r = run("solve " + golden("fig7a"));
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc.at("status"), "ok");
  ASSERT_EQ(doc.at("strategies").size(), 1u);
  const auto & s = doc.at("strategies")[0];
  EXPECT_EQ(s.at("lateral_bias"), "centered");
  EXPECT_EQ(s.at("longitudinal_bias"), "centered");
  EXPECT_NEAR(s.at("pose").at("x").get<double>(), 2.5, 0.02);
  EXPECT_NEAR(s.at("pose").at("y").get<double>(), 1.25, 0.02);
}

TEST_F(CliTest, SolveIsStableAcrossRunsAndThreads)
{
  const auto a = run("solve " + golden("fig7d") + " --threads 1");
  const auto b = run("solve " + golden("fig7d") + " --threads 3");
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(without_wall_time(json::parse(a.out)), without_wall_time(json::parse(b.out)));
}

TEST_F(CliTest, JsonLinesAndMonteCarloFlags)
{
  const auto r = run("solve " + golden("fig7f") + " --sampling mc --density 8 --seed 3 --format json-lines");
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<json> records;
  while (std::getline(lines, line)) {
    records.push_back(json::parse(line));
  }
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[0].at("config").at("sampling").at("mode"), "mc");
  EXPECT_EQ(records[0].at("config").at("sampling").at("count"), 8);
  EXPECT_EQ(records[0].at("config").at("sampling").at("seed"), 3);
  EXPECT_EQ(records[1].at("type"), "strategy");
  EXPECT_EQ(records[2].at("type"), "summary");
}

TEST_F(CliTest, ParseErrorsExitTwo)
{
  EXPECT_EQ(run("solve " + (dir_ / "missing.scenario").string()).code, 2);
  EXPECT_EQ(run("solve " + write("bad.scenario", "{\"spots\": 3}").string()).code, 2);
  EXPECT_EQ(run("solve " + golden("fig7a") + " --config " + write("bad.json", "{\"solver\": {\"starts\": 0}}").string()).code, 2);
  EXPECT_EQ(run("solve " + golden("fig7a") + " --sampling sobol").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("render " + golden("fig7a") + " -o " + (dir_ / "x.svg").string()).code, 2);
}

TEST_F(CliTest, ValidateAcceptsGoldensAndConfig)
{
  for (const auto * name : {"fig3a", "fig4", "fig6", "fig7a", "fig7b", "fig7c", "fig7d", "fig7e", "fig7f"}) {
    EXPECT_EQ(run("validate " + golden(name)).code, 0) << name;
  }
  const auto cfg = write("ok.json", R"({"sampling": {"density": 64}, "strategy": {"explain": false}})");
  EXPECT_EQ(run("validate " + golden("fig7a") + " --config " + cfg.string()).code, 0);
}

TEST_F(CliTest, InfeasibleSpotExitsThree)
{
  const auto path = write("tiny.scenario", R"({"spots": [{"id": "T", "center": [0, 0], "length": 3.0, "width": 2.0}]})");
  const auto r = run("solve " + path.string());
  EXPECT_EQ(r.code, 3);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc.at("status"), "no_strategy");
  EXPECT_EQ(doc.at("infeasible")[0].at("spot_id"), "T");
}

TEST_F(CliTest, OracleCentresEmptySpotAndEnforcesBudget)
{
  const auto cfg = write("fast.json", R"({"strategy": {"explain": false}})");
  const auto r = run("oracle " + golden("fig7a") + " --config " + cfg.string() + " --resolution 0.05");
  ASSERT_EQ(r.code, 0);
  const auto pose = json::parse(r.out).at("strategies")[0].at("pose");
  EXPECT_NEAR(pose.at("x").get<double>(), 2.5, 0.05 + 1e-9);
  EXPECT_NEAR(pose.at("y").get<double>(), 1.25, 0.05 + 1e-9);
  EXPECT_EQ(run("oracle " + golden("fig7a") + " --resolution 0.001").code, 4);
}

TEST_F(CliTest, OracleBoundsSolveScore)
{
  const auto cfg = write("fast.json", R"({"strategy": {"explain": false}})");
  for (const auto * name : {"fig7b", "fig7d"}) {
    const auto solved = run("solve " + golden(name) + " --config " + cfg.string());
    const auto oracle = run("oracle " + golden(name) + " --config " + cfg.string() + " --resolution 0.1");
    ASSERT_EQ(solved.code, 0);
    ASSERT_EQ(oracle.code, 0);
    const double s = json::parse(solved.out).at("strategies")[0].at("score").get<double>();
    const double o = json::parse(oracle.out).at("strategies")[0].at("score").get<double>();
    EXPECT_GE(o, s - 1e-6) << name;
  }
}

TEST_F(CliTest, RenderUnwritableExitsFive)
{
  EXPECT_EQ(run("render " + golden("fig6") + " --field -o " + (dir_ / "no/such/dir/x.svg").string()).code, 5);
}

TEST_F(CliTest, RenderFieldDrawsContours)
{
  const auto out = dir_ / "fig6.svg";
  ASSERT_EQ(run("render " + golden("fig6") + " --field -o " + out.string()).code, 0);
  const auto svg = slurp(out);
  const std::regex contour(R"(<(polygon|polyline) class="contour")");
  const auto n = std::distance(std::sregex_iterator(svg.begin(), svg.end(), contour), std::sregex_iterator());
  EXPECT_GE(n, 5);
}

TEST_F(CliTest, RenderPoseCentresBodyAndIsByteStable)
{
  const auto a = dir_ / "a.svg";
  const auto b = dir_ / "b.svg";
  ASSERT_EQ(run("render " + golden("fig7a") + " --pose --threads 1 -o " + a.string()).code, 0);
  ASSERT_EQ(run("render " + golden("fig7a") + " --pose --threads 2 -o " + b.string()).code, 0);
  const auto svg = slurp(a);
  EXPECT_EQ(svg, slurp(b));

  std::smatch m;
  ASSERT_TRUE(std::regex_search(svg, m, std::regex(R"(class="spot" points="([^"]+)\")")));
  const std::string spot_points = m[1];
  ASSERT_TRUE(std::regex_search(svg, m, std::regex(R"(data-label="body" points="([^"]+)\")")));
  const std::string body_points = m[1];
  auto mean = [](const std::string & pts) {
    std::istringstream in(pts);
    std::string pair;
    double sx = 0.0;
    double sy = 0.0;
    int n = 0;
    while (in >> pair) {
      const auto comma = pair.find(',');
      sx += std::stod(pair.substr(0, comma));
      sy += std::stod(pair.substr(comma + 1));
      ++n;
    }
    return std::pair{sx / n, sy / n};
  };
  const auto [sx, sy] = mean(spot_points);
  const auto [bx, by] = mean(body_points);
  // 100 SVG units per meter; centred within 2 cm
  EXPECT_NEAR(bx, sx, 2.0);
  EXPECT_NEAR(by, sy, 2.0);
}

}  // namespace
}  // namespace parkfield
