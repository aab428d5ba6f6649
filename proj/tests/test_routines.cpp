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

#include <algorithm>
#include <random>

#include "dqc/chooser.hpp"
#include "dqc/errors.hpp"
#include "dqc/harness.hpp"
#include "dqc/protocols.hpp"
#include "dqc/routines.hpp"

namespace dqc {
namespace {

constexpr double kTol = 1e-10;

// <m|_q Omega |p>_q computed by embedding the vectors as 1 x d and d x 1 blocks.
Matrix contract_directly(const RoutineSpec& spec, int r, int s) {
  const int d = spec.d_x();
  const Matrix bra = gates::kron(spec.M[s].adjoint(), Matrix::Identity(d, d));
  const Matrix ket = gates::kron(spec.P[r], Matrix::Identity(d, d));
  return bra * spec.omega.matrix() * ket;
}

TEST(Kraus, PsMatchesDirectContraction) {
  std::mt19937_64 rng(11);
  for (int d : {2, 4}) {
    for (int t = 0; t < 10; ++t) {
      const RoutineSpec spec = random_spec(Setting::kPS, d, rng);
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) EXPECT_LT(max_abs_diff(kraus_ps(spec, r, s), contract_directly(spec, r, s)), kTol);
    }
  }
}

TEST(Kraus, PsEqualsRmForm) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    const RoutineSpec spec = random_spec(Setting::kPS, 2, rng);
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s) EXPECT_LT(max_abs_diff(kraus_ps(spec, r, s), kraus_rm(spec, r, s)), kTol);
  }
}

TEST(Routine, TransformedRunHasSameBranches) {
  std::mt19937_64 rng(17);
  const DensityState rho = DensityState::maximally_mixed({2});
  for (int t = 0; t < 5; ++t) {
    const RoutineSpec spec = random_spec(Setting::kPS, 2, rng);
    const auto ps = enumerate_routine(spec, rho);
    const auto rm = enumerate_routine(t_transform(spec), rho);
    ASSERT_EQ(ps.size(), rm.size());
    // The transform swaps who prepares and who measures, so PS (r, s) pairs with RM (s, r).
    for (const auto& a : ps) {
      const auto b = std::find_if(rm.begin(), rm.end(), [&](const RoutineOutcome& o) { return o.r == a.s && o.s == a.r; });
      ASSERT_NE(b, rm.end());
      EXPECT_NEAR(a.prob, b->prob, kTol);
      EXPECT_LT(max_abs_diff(a.post.matrix(), b->post.matrix()), kTol);
    }
  }
}

TEST(Kraus, CompletenessOverOutcomes) {
  // For a fixed r the measurement over s is complete, so sum_s K^dag K = I.
  std::mt19937_64 rng(13);
  const RoutineSpec spec = random_spec(Setting::kPS, 4, rng);
  for (int r = 0; r < 2; ++r) {
    Matrix acc = Matrix::Zero(4, 4);
    for (int s = 0; s < 2; ++s) acc += kraus_ps(spec, r, s).adjoint() * kraus_ps(spec, r, s);
    EXPECT_LT(max_abs_diff(acc, Matrix::Identity(4, 4)), kTol);
  }
}

TEST(TTransform, SelfInverse) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 20; ++t) {
    const RoutineSpec spec = random_spec(t % 2 ? Setting::kRM : Setting::kPS, 2, rng);
    EXPECT_EQ(t_transform(t_transform(spec)), spec);
  }
}

TEST(Routine, EnumerationMatchesKraus) {
  std::mt19937_64 rng(15);
  const RoutineSpec spec = random_spec(Setting::kPS, 2, rng);
  const DensityState rho = DensityState::maximally_mixed({2});
  double total = 0;
  for (const auto& o : enumerate_routine(spec, rho)) {
    const Matrix k = kraus_ps(spec, o.r, o.s);
    const Matrix unnorm = k * rho.matrix() * k.adjoint();
    // Preparation r is uniform, so the joint probability carries a factor 1/2.
    EXPECT_NEAR(o.prob, 0.5 * unnorm.trace().real(), kTol);
    EXPECT_LT(max_abs_diff(o.post.matrix(), unnorm / unnorm.trace().real()), kTol);
    total += o.prob;
  }
  EXPECT_NEAR(total, 1.0, kTol);
}

TEST(Routine, BfkNodeTransformsToTauNode) {
  for (int th = 0; th < 8; ++th) {
    for (int de = 0; de < 8; de += 3) {
      const auto ps = bfk_node_spec(AngleIndex(th), AngleIndex(de));
      EXPECT_EQ(t_transform(ps), tau_node_spec(AngleIndex(th), AngleIndex(de)));
    }
  }
}

TEST(Routine, WrongSettingThrows) {
  RoutineSpec spec;
  SamplingChooser c(1);
  spec.setting = Setting::kRM;
  EXPECT_THROW(run_ps(spec, DensityState::maximally_mixed({2}), c), DqcError);
}

TEST(Routine, SpecJsonRoundTrip) {
  std::mt19937_64 rng(16);
  const RoutineSpec spec = random_spec(Setting::kPS, 2, rng);
  const RoutineSpec back = routine_spec_from_json(to_json(spec));
  EXPECT_EQ(back.setting, spec.setting);
  EXPECT_LT(max_abs_diff(back.omega.matrix(), spec.omega.matrix()), 1e-15);
}

}  // namespace
}  // namespace dqc
