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

#include "dqc/chooser.hpp"
#include "dqc/errors.hpp"
#include "dqc/factored_state.hpp"
#include "dqc/simulators.hpp"

namespace dqc {
namespace {

constexpr double kTol = 1e-12;

struct SwapBranch {
  PauliHerald herald;
  Matrix outer;  // density of the two outer halves
};

SwapBranch swap_once(Chooser& c) {
  FactoredState st;
  HeraldedChannel channel;
  const BellPair a = sim_bell_prep(st);
  const BellPair b = sim_bell_prep(st);
  const PauliHerald h = channel.sim_bell_meas(st, a.inner, b.inner, c);
  const QubitId ids[] = {a.outer, b.outer};
  return {h, st.reduced_density(ids)};
}

TEST(BellPrep, ProducesPhiPlus) {
  FactoredState st;
  const BellPair p = sim_bell_prep(st);
  const QubitId ids[] = {p.inner, p.outer};
  EXPECT_LT(max_abs_diff(st.reduced_density(ids), bell_state({0, 0}).matrix()), kTol);
}

TEST(EntanglementSwap, HeraldsUniformAndOuterPairIsBellState) {
  const auto branches = enumerate_branches(swap_once);
  ASSERT_EQ(branches.size(), 4u);
  for (const auto& br : branches) {
    EXPECT_NEAR(br.probability, 0.25, kTol);
    const PauliHerald h = br.value.herald;
    const Matrix corr = gates::kron(gates::identity(), gates::pauli(h.b1, h.b0).adjoint());
    EXPECT_LT(max_abs_diff(corr * br.value.outer * corr.adjoint(), bell_state({0, 0}).matrix()), 1e-10);
  }
}

TEST(HeraldedChannel, HeraldsAreSuppressed) {
  FactoredState st;
  HeraldedChannel channel;
  SamplingChooser c(3);
  const BellPair a = sim_bell_prep(st);
  const BellPair b = sim_bell_prep(st);
  const PauliHerald h = channel.sim_bell_meas(st, a.inner, b.inner, c);
  EXPECT_TRUE(channel.forwarded().empty());
  ASSERT_EQ(channel.heralds().size(), 1u);
  EXPECT_EQ(channel.heralds().front(), h);
}

TEST(HeraldingFilter, ForwardsOtherMessagesInOrder) {
  Transcript t;
  t.send("a", "b", PayloadKind::kAngle, "delta", 1, 3);
  t.send("a", "b", PayloadKind::kHerald, kHeraldTag, -1, 2);
  t.send("b", "a", PayloadKind::kBit, "s", 1, 1);
  const FilterResult f = heralding_filter(t.messages(), {kHeraldTag});
  ASSERT_EQ(f.forwarded.size(), 2u);
  EXPECT_EQ(f.forwarded[0].tag, "delta");
  EXPECT_EQ(f.forwarded[1].tag, "s");
  ASSERT_EQ(f.heralds.size(), 1u);
  EXPECT_EQ(f.heralds[0], (PauliHerald{1, 0}));
}

TEST(Heralds, ValueRoundTrip) {
  for (int v = 0; v < 4; ++v) EXPECT_EQ(herald_value(herald_from_value(v)), v);
  const std::vector<PauliHerald> hs = {{0, 1}, {1, 1}};
  EXPECT_EQ(heralds_from_json(heralds_to_json(hs)), hs);
}

TEST(Rerun, StopsAtFirstIdentityPattern) {
  const auto res = rerun_until_identity([](int i) {
    return std::vector<PauliHerald>{{i < 2 ? 1 : 0, 0}};
  });
  EXPECT_EQ(res.attempts, 3);
  EXPECT_THROW(rerun_until_identity([](int) { return std::vector<PauliHerald>{{0, 1}}; }, 5),
               RerunExhaustedError);
}

}  // namespace
}  // namespace dqc
