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

#include "dqc/errors.hpp"
#include "dqc/harness.hpp"

namespace dqc {
namespace {

TEST(Report, PassIsDeviationWithinTolerance) {
  EXPECT_TRUE(make_report("a", "x", 1e-11, 1e-10, 5, 0).pass);
  EXPECT_FALSE(make_report("a", "x", 2e-10, 1e-10, 5, 0).pass);
  const auto j = make_report("a", "x", 0.0, 1e-10, 7, 3, "trials").to_json();
  EXPECT_EQ(j.at("trials"), 7);
  EXPECT_EQ(j.at("seed"), 3);
  EXPECT_FALSE(j.contains("branches"));
}

TEST(Wilson, KnownInterval) {
  // 50 of 100 at z = 1.96: centre 0.5, half-width 1.96 * sqrt(0.25/100 + 1.96^2/40000) / (1 + 1.96^2/100).
  const auto [lo, hi] = wilson_interval(50, 100);
  EXPECT_NEAR(lo, 0.4038298286, 1e-9);
  EXPECT_NEAR(hi, 0.5961701714, 1e-9);
  const auto [lo0, hi0] = wilson_interval(0, 10);
  EXPECT_NEAR(lo0, 0.0, 1e-12);
  EXPECT_NEAR(hi0, 0.2775401688, 1e-9);
}

TEST(RandomFixtures, UnitaryIsUnitary) {
  std::mt19937_64 rng(1);
  for (int d : {2, 4, 8}) EXPECT_TRUE(is_unitary(random_unitary(d, rng)));
}

TEST(Checks, AlgebraGroupPasses) {
  EXPECT_TRUE(check_kraus_equality(20, {2, 4}, 1).pass);
  EXPECT_TRUE(check_t_involution(20, 1).pass);
  const auto ids = check_simulator_identities(1, 3);
  ASSERT_EQ(ids.size(), 5u);
  for (const auto& r : ids) EXPECT_TRUE(r.pass) << r.check;
}

TEST(Checks, HeraldPostselectionExact) {
  const auto r = check_herald_postselection(0);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.count, 4u);
}

TEST(Checks, DtGraphSmall) { EXPECT_TRUE(check_dt_graph(10, 5).pass); }

TEST(Checks, TrapRatesRecorded) {
  const auto z = check_traps("vbdqc-ps", "z", 0, 1);
  EXPECT_TRUE(z.pass);
  EXPECT_NEAR(z.details.at("abort_rate_exact").get<double>(), 0.2, 1e-12);
  const auto rep = check_traps("dmpqc", "report", 0, 1);
  EXPECT_NEAR(rep.details.at("abort_rate_exact").get<double>(), 0.5, 1e-12);
}

TEST(Checks, SubdividedPatternShape) {
  const auto p = subdivided_path_pattern(build_linear_cluster(3), {{1, AngleIndex(1)}}, DensityState::maximally_mixed({2}));
  EXPECT_EQ(p.topology.nodes.size(), 5u);
  EXPECT_EQ(p.angles.at(1).value(), 1);
}

TEST(Checks, UnknownNamesThrow) {
  EXPECT_THROW(run_checks("nope", 0, 0), DqcError);
  EXPECT_THROW(check_traps("bfk", "z", 0, 0), DqcError);
  EXPECT_THROW(check_equivalence("mf13-tau", 0), DqcError);
}

TEST(Summary, OneRowPerReport) {
  const std::vector<CheckReport> reps = {make_report("a", "x", 0, 1, 1, 0), make_report("b", "y", 2, 1, 1, 0)};
  const std::string t = summary_table(reps);
  EXPECT_NE(t.find("a"), std::string::npos);
  EXPECT_NE(t.find("1/2 checks passed"), std::string::npos);
}

}  // namespace
}  // namespace dqc
