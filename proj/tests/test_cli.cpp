// Copyright 2026 The cayleymd Authors
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

#include "cayleymd/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include "json.hpp"
#include <sstream>

namespace cayleymd::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig dim_of(std::string group, std::string set) {
  RunConfig cfg;
  cfg.command = "dim";
  cfg.group = std::move(group);
  cfg.set = std::move(set);
  return cfg;
}

TEST(CliTest, DimText) {
  const auto r = invoke(dim_of("Z6", "1,5,3"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("dim: 4\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("proof-consistent: 4 (circulant-antipodal)"), std::string::npos);
}

TEST(CliTest, DimJsonWithTable) {
  RunConfig cfg = dim_of("Z2xZ4", "(1,0);(0,1);(0,3)");
  cfg.format = Format::json;
  cfg.table = true;
  const auto r = invoke(cfg);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dim"], 3);
  EXPECT_EQ(j["landmarks"].size(), 3u);
  EXPECT_EQ(j["representations"].size(), 8u);
}

TEST(CliTest, DimCapExceededJson) {
  RunConfig cfg;
  cfg.command = "dim";
  cfg.family = "complete:7";
  cfg.cap = 3;
  cfg.format = Format::json;
  const auto r = invoke(cfg);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["dim"].is_null());
  EXPECT_EQ(j["exceeds_cap"], 3);
}

TEST(CliTest, FamilyPrediction) {
  RunConfig cfg;
  cfg.command = "dim";
  cfg.family = "prism:2,5";
  const auto r = invoke(cfg);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dim: 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("prediction: 2 (prism)"), std::string::npos);
}

TEST(CliTest, ErrorsExitTwo) {
  EXPECT_EQ(invoke(dim_of("Z6", "1,3")).code, 2);
  EXPECT_EQ(invoke(dim_of("Z0", "1")).code, 2);
  RunConfig cfg;
  cfg.command = "dim";
  cfg.graph_path = "/nonexistent/graph.dot";
  const auto r = invoke(cfg);
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error: ", 0), 0u);
  cfg.family = "prism:2,5";
  EXPECT_EQ(invoke(cfg).code, 2);
  RunConfig disconnected = dim_of("Z6", "3");
  EXPECT_EQ(invoke(disconnected).code, 2);
  RunConfig unknown;
  unknown.command = "frobnicate";
  EXPECT_EQ(invoke(unknown).code, 2);
}

TEST(CliTest, SweepExitCodes) {
  RunConfig cfg;
  cfg.command = "sweep";
  cfg.orders = "5..12";
  auto r = invoke(cfg);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("group,set,n", 0), 0u);
  cfg.variant = GateVariant::as_stated;
  r = invoke(cfg);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("mismatch"), std::string::npos);
  cfg.orders = "12..5";
  EXPECT_EQ(invoke(cfg).code, 2);
}

TEST(CliTest, ExportRoundTripsThroughDim) {
  const auto dir = std::filesystem::temp_directory_path() / "cayleymd_cli_test";
  std::filesystem::create_directories(dir);
  RunConfig ex = dim_of("Z10", "2,5,8");
  ex.command = "export";
  ex.out_path = (dir / "p.dot").string();
  ASSERT_EQ(invoke(ex).code, 0);
  RunConfig cfg;
  cfg.command = "dim";
  cfg.graph_path = ex.out_path;
  const auto r = invoke(cfg);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("dim: 2\n"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(CliTest, OrderRange) {
  EXPECT_EQ(parse_order_range("5..24"), (std::pair<std::size_t, std::size_t>{5, 24}));
  EXPECT_EQ(parse_order_range("9"), (std::pair<std::size_t, std::size_t>{9, 9}));
  EXPECT_THROW(parse_order_range("1..4"), ParseError);
  EXPECT_THROW(parse_order_range("a..b"), ParseError);
}

}  // namespace
}  // namespace cayleymd::cli
