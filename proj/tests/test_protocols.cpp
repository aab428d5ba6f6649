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
#include "dqc/protocols.hpp"

namespace dqc {
namespace {

constexpr double kTol = 1e-10;

DensityState ket(AngleIndex k) { return DensityState::from_qubit_vector(plus_state(k)); }

// Two-node pattern by hand: CZ(psi (x) |+>), project node 1 onto |+_phi>.
Matrix line2_ideal(const Vector2& psi, AngleIndex phi) {
  Vector joint = gates::cz() * gates::kron(psi, plus_state(AngleIndex(0)));
  const Vector2 m = plus_state(phi);
  Vector2 out = Vector2::Zero();
  for (int b = 0; b < 2; ++b) out(b) = std::conj(m(0)) * joint(b) + std::conj(m(1)) * joint(2 + b);
  out.normalize();
  return out * out.adjoint();
}

EnumerateOptions outcomes_only(std::uint64_t seed) {
  EnumerateOptions o;
  o.enumerate_if = enumerate_outcomes;
  o.seed = seed;
  return o;
}

TEST(Bdqc, Line2MatchesHandComputation) {
  const Vector2 psi = plus_state(AngleIndex(3));
  for (int phi = 0; phi < 8; ++phi) {
    const BdqcInstance inst{build_linear_cluster(2), {{1, AngleIndex(phi)}}, ket(AngleIndex(3))};
    const Matrix ideal = line2_ideal(psi, AngleIndex(phi));
    for (auto* run : {&run_bfk09, &run_mf13, &run_tau}) {
      for_each_branch(
          [&](Chooser& c) {
            const ProtocolResult r = run(inst, c, nullptr);
            EXPECT_LT(max_abs_diff(r.output, ideal), kTol);
          },
          outcomes_only(static_cast<std::uint64_t>(phi)));
    }
  }
}

TEST(Bdqc, TauMovesInnerNodesToRm) {
  const auto settings = transform_bfk_to_tau(build_linear_cluster(4));
  EXPECT_EQ(settings.at(1), Setting::kPS);
  EXPECT_EQ(settings.at(2), Setting::kRM);
  EXPECT_EQ(settings.at(3), Setting::kRM);
  EXPECT_EQ(settings.at(4), Setting::kPS);
}

TEST(Dbsp, ContributionFormula) {
  EXPECT_EQ(dbsp_contribution({0, Setting::kPS, AngleIndex(3), 1, 1}).value(), 1);  // -3 + 4
  EXPECT_EQ(dbsp_contribution({0, Setting::kRM, AngleIndex(3), 0, 0}).value(), 3);
  const std::vector<DbspRecord> recs = {{0, Setting::kPS, AngleIndex(1), 0, 1}, {1, Setting::kRM, AngleIndex(2), 1, 0}};
  // -1 + (2 + 4) = 5, plus theta0 = 2.
  EXPECT_EQ(dbsp_theta(recs, AngleIndex(2)).value(), 7);
}

TEST(Dbsp, OutputIsPhaseRotation) {
  const DensityState rho = ket(AngleIndex(1));
  for (Setting s : {Setting::kPS, Setting::kRM}) {
    for_each_branch([&](Chooser& c) {
      const DbspResult res = run_dbsp(s, 0, rho, 2, c);
      const Matrix2 p = gates::phase(res.theta);
      EXPECT_LT(max_abs_diff(res.output.matrix(), p * rho.matrix() * p.adjoint()), kTol);
      EXPECT_EQ(res.theta, dbsp_theta(res.records));
    });
  }
}

TEST(Dbsp, MixedClientsAddOffset) {
  const DensityState rho = ket(AngleIndex(0));
  SamplingChooser c(9);
  const DbspResult res = run_dbsp_mixed({Setting::kPS, Setting::kRM}, rho, c, AngleIndex(3));
  EXPECT_EQ(res.records[0].r, 0);
  EXPECT_EQ(res.records[1].s, 0);
  EXPECT_EQ(res.theta, dbsp_theta(res.records, AngleIndex(3)));
  const Matrix2 p = gates::phase(res.theta);
  EXPECT_LT(max_abs_diff(res.output.matrix(), p * rho.matrix() * p.adjoint()), kTol);
}

TEST(HiGadget, OutputMatchesPauliTable) {
  const DensityState rho = ket(AngleIndex(5));
  for (Setting s : {Setting::kPS, Setting::kRM}) {
    for (int b = 0; b < 2; ++b) {
      for_each_branch([&](Chooser& c) {
        const HiResult res = run_hi_gadget(s, b, rho, c);
        const Matrix2 u = hi_gadget_pauli(b, res.r, res.s) * hi_gadget_w(b);
        EXPECT_LT(max_abs_diff(res.output.matrix(), u * rho.matrix() * u.adjoint()), kTol);
      });
    }
  }
}

TEST(HiGadget, BindingTable) {
  EXPECT_LT(max_abs_diff(hi_gadget_w(1), gates::h()), 1e-15);
  EXPECT_LT(max_abs_diff(hi_gadget_w(0), gates::identity()), 1e-15);
  EXPECT_EQ(hi_gadget_gamma(1, 1).value(), 4);
  EXPECT_EQ(hi_gadget_gamma(0, 0).value(), 2);
  EXPECT_TRUE(is_unitary(hi_gadget_omega()));
}

double abort_rate(const std::function<ProtocolResult(Chooser&, Adversary*)>& run, const std::string& attack,
                  const std::vector<std::string>& labels) {
  EnumerateOptions opt;
  opt.enumerate_if = enumerate_labels(labels);
  opt.seed = 21;
  double abort = 0;
  for_each_branch(
      [&](Chooser& c) {
        auto adv = make_adversary(attack, FixedReportAttack::kKnownTrap);
        if (!run(c, adv.get()).accepted) abort += c.weight();
      },
      opt);
  return abort;
}

VbdqcInstance path2() {
  return {build_linear_cluster(2), {{1, AngleIndex(2)}, {2, AngleIndex(0)}}, ket(AngleIndex(1))};
}

TEST(Vbdqc, HonestAlwaysAccepts) {
  for (Setting s : {Setting::kPS, Setting::kRM}) {
    const double a =
        abort_rate([&](Chooser& c, Adversary* adv) { return run_vbdqc(s, path2(), c, adv); }, "honest",
                   {"m", "trap_r", "colour"});
    EXPECT_NEAR(a, 0.0, 1e-12);
  }
}

TEST(Vbdqc, AttackAbortRates) {
  auto ps = [](Chooser& c, Adversary* adv) { return run_vbdqc(Setting::kPS, path2(), c, adv); };
  const std::vector<std::string> labels = {"m", "trap_r", "attack_position"};
  // 15 nodes, 3 traps: a Z on a trap always flips it.
  EXPECT_NEAR(abort_rate(ps, "z", labels), 0.2, 1e-12);
  EXPECT_NEAR(abort_rate(ps, "report", labels), 0.5, 1e-12);
  // Only the two server-measured traps can be hit, each caught half the time.
  EXPECT_NEAR(abort_rate(ps, "basis", labels), 1.0 / 15.0, 1e-12);
}

TEST(Vbdqc, HonestOutputMatchesPathComputation) {
  const VbdqcInstance inst = path2();
  const Matrix ideal = line2_ideal(plus_state(AngleIndex(1)), AngleIndex(2));
  SamplingChooser c(4);
  // With zero-angle dots the subdivided path applies H P(-phi) then H H = I.
  const ProtocolResult r = run_vbdqc(Setting::kPS, inst, c);
  ASSERT_TRUE(r.accepted);
  const Matrix2 h = gates::h();
  EXPECT_LT(max_abs_diff(r.output, h * ideal * h.adjoint()), kTol);
}

TEST(Vbdqc, RejectsNonPathBase) {
  SamplingChooser c(1);
  VbdqcInstance inst{build_brickwork(2, 5), {}, DensityState::maximally_mixed({2, 2})};
  EXPECT_THROW(run_vbdqc(Setting::kPS, inst, c), GraphError);
}

TEST(Dmpqc, HonestAcceptsAndReportAbortsHalf) {
  auto run = [](Chooser& c, Adversary* adv) {
    DmpqcInstance inst{build_linear_cluster(2), {Setting::kPS, Setting::kRM}, {{1, AngleIndex(2)}}, {}, ket(AngleIndex(1))};
    return run_dmpqc(inst, c, adv);
  };
  EXPECT_NEAR(abort_rate(run, "honest", {"m", "trap_r", "colour"}), 0.0, 1e-12);
  EXPECT_NEAR(abort_rate(run, "report", {"m", "trap_r", "attack_position"}), 0.5, 1e-12);
}

TEST(Dmpqc, AbortWithholdsOutput) {
  DmpqcInstance inst{build_linear_cluster(2), {Setting::kPS}, {}, {}, ket(AngleIndex(0))};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SamplingChooser c(seed);
    auto adv = make_adversary("z");
    const ProtocolResult r = run_dmpqc(inst, c, adv.get());
    if (!r.accepted) {
      EXPECT_EQ(r.output.size(), 0);
      return;
    }
  }
  FAIL() << "no aborted run in 40 seeds";
}

}  // namespace
}  // namespace dqc
