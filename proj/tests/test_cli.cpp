// Copyright 2026 The dqc-equiv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "dqc/cli.hpp"

namespace dqc::cli {
namespace {

const std::string kData = DQC_TEST_DATA_DIR;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dqc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, RunBfkAccepts) {
  const CliRun r = invoke({"run", "bfk", "--graph", kData + "/line2.json", "--angles", "0", "--seed", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("protocol"), "bfk");
  EXPECT_TRUE(j.at("result").at("accepted").get<bool>());
  EXPECT_EQ(j.at("angles"), nlohmann::json::array({0}));
}

TEST(Cli, RunIsDeterministic) {
  const std::vector<std::string> args = {"run", "dmpqc", "--clients", "ps,rm", "--seed", "7"};
  const CliRun a = invoke(args), b = invoke(args);
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(invoke({"run", "dmpqc", "--clients", "ps,rm", "--seed", "8"}).out, a.out);
}

TEST(Cli, MixedDbspThetaMatchesRecords) {
  const CliRun r = invoke({"run", "dbsp", "--setting", "mixed", "--clients", "ps,rm,ps", "--seed", "3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto res = nlohmann::json::parse(r.out).at("result");
  int theta = 0;
  for (const auto& rec : res.at("records")) {
    const int t = rec.at("theta").get<int>();
    theta += (rec.at("s").get<int>() ? -t : t) + 4 * rec.at("r").get<int>();
  }
  EXPECT_EQ(((theta % 8) + 8) % 8, res.at("theta").get<int>());
  EXPECT_EQ(res.at("records").size(), 3u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"run", "nosuch"}).code, kUsageError);
  EXPECT_EQ(invoke({"run", "bfk", "--angles", "9"}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "nosuch"}).code, kUsageError);
  EXPECT_EQ(invoke({"run", "bfk", "--graph", kData + "/truncated.json"}).code, kInputError);
  EXPECT_EQ(invoke({"run", "bfk", "--graph", kData + "/dangling.json"}).code, kInputError);
  EXPECT_EQ(invoke({"run", "bfk", "--graph", kData + "/missing.json"}).code, kInputError);
  EXPECT_EQ(invoke({"graph", "--graph", kData + "/truncated.json"}).code, kInputError);
}

TEST(Cli, VerifyKraus) {
  const CliRun r = invoke({"verify", "kraus", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("pass").get<bool>());
}

TEST(Cli, VerifyIdentitiesGivesFiveLines) {
  const CliRun r = invoke({"verify", "identities", "--json"});
  ASSERT_EQ(r.code, kOk);
  std::istringstream lines(r.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    EXPECT_TRUE(nlohmann::json::parse(line).at("pass").get<bool>());
    ++n;
  }
  EXPECT_EQ(n, 5);
}

TEST(Cli, GraphSingleEdge) {
  const CliRun a = invoke({"graph", "--graph", kData + "/edge.json", "--seed", "2"});
  ASSERT_EQ(a.code, kOk) << a.err;
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j.at("nodes").size(), 15u);
  EXPECT_EQ(j.at("edges").size(), 18u);
  EXPECT_EQ(invoke({"graph", "--graph", kData + "/edge.json", "--seed", "2"}).out, a.out);
}

TEST(Cli, GraphEmpty) {
  const CliRun r = invoke({"graph", "--graph", kData + "/empty.json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("nodes").empty());
  EXPECT_TRUE(j.at("edges").empty());
}

TEST(Cli, RunHiBothSettings) {
  for (const char* s : {"ps", "rm"}) {
    const CliRun r = invoke({"run", "hi", "--setting", s, "--bit", "0", "--seed", "5"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out).at("result").at("b"), 0);
  }
}

TEST(Cli, OutputRoundTripsThroughParser) {
  const CliRun r = invoke({"run", "vbdqc", "--setting", "rm", "--angles", "2,1", "--seed", "4", "--pretty"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(nlohmann::json::parse(j.dump()), j);
}

}  // namespace
}  // namespace dqc::cli
