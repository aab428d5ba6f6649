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

#include <cmath>
#include <numbers>

#include "dqc/chooser.hpp"
#include "dqc/errors.hpp"
#include "dqc/factored_state.hpp"
#include "dqc/qcore.hpp"

namespace dqc {
namespace {

constexpr double kTol = 1e-12;

TEST(AngleIndex, WrapsModEight) {
  EXPECT_EQ(AngleIndex(9).value(), 1);
  EXPECT_EQ(AngleIndex(-1).value(), 7);
  EXPECT_EQ((AngleIndex(3) + AngleIndex(6)).value(), 1);
  EXPECT_EQ(AngleIndex(3).plus_pi_if(1).value(), 7);
  EXPECT_EQ(AngleIndex(3).negated_if(1).value(), 5);
  EXPECT_EQ(AngleIndex(3).negated_if(0).value(), 3);
}

TEST(Gates, PhaseAndPauliProducts) {
  const Matrix2 p = gates::phase(AngleIndex(2));
  EXPECT_NEAR(std::abs(p(1, 1) - cplx(0, 1)), 0.0, kTol);
  EXPECT_LT(max_abs_diff(gates::phase(AngleIndex(4)), gates::z()), kTol);
  EXPECT_LT(max_abs_diff(gates::pauli(1, 1), gates::x() * gates::z()), kTol);
  EXPECT_LT(max_abs_diff(gates::h() * gates::z() * gates::h(), gates::x()), kTol);
  EXPECT_TRUE(is_unitary(gates::cz()));
  EXPECT_TRUE(is_unitary(gates::kron(gates::h(), gates::phase(AngleIndex(1)))));
}

TEST(Basis, AngleBasisIsOrthonormal) {
  for (int k = 0; k < 8; ++k) {
    const QubitBasis b = basis_from_angle(AngleIndex(k));
    EXPECT_NEAR(std::abs(b[0].dot(b[1])), 0.0, kTol);
    EXPECT_NEAR(b[0].norm(), 1.0, kTol);
    // |+_k> has equal weight on |0> and |1> with relative phase k pi/4.
    EXPECT_NEAR(std::arg(b[0](1) / b[0](0)), std::remainder(k * std::numbers::pi / 4, 2 * std::numbers::pi), 1e-12);
  }
}

TEST(Bipartite, PartialTransposeOfCz) {
  // CZ is diagonal, so transposing the first factor leaves it unchanged.
  const BipartiteOperator cz(2, gates::cz());
  EXPECT_EQ(partial_transpose_q(cz), cz);
  // CX (control q) transposed on q is still CX since its q blocks are Hermitian.
  const BipartiteOperator cx(2, gates::cx());
  EXPECT_LT(max_abs_diff(partial_transpose_q(cx).matrix(), gates::cx()), kTol);
  EXPECT_THROW(make_bipartite_unitary(2, Matrix::Ones(4, 4)), NonUnitaryError);
}

TEST(Density, TraceDistancePlusVsZero) {
  Vector zero(2), plus(2);
  zero << 1, 0;
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  const auto a = DensityState::from_qubit_vector(zero);
  const auto b = DensityState::from_qubit_vector(plus);
  EXPECT_NEAR(trace_distance(a, b), 1 / std::sqrt(2.0), kTol);
  EXPECT_NEAR(trace_distance(a, a), 0.0, kTol);
}

TEST(Density, PartialTraceOfBellIsMaximallyMixed) {
  const DensityState phi = bell_state({0, 0});
  const int keep[] = {1};
  const DensityState red = partial_trace(phi, keep);
  EXPECT_LT(max_abs_diff(red.matrix(), 0.5 * Matrix::Identity(2, 2)), kTol);
}

TEST(Density, BellStatesFollowPauliConvention) {
  for (int v = 0; v < 4; ++v) {
    const PauliHerald h{v >> 1, v & 1};
    const Vector expected = gates::kron(gates::identity(), gates::pauli(h.b1, h.b0)) * bell_vector({0, 0});
    EXPECT_NEAR(std::abs(expected.dot(bell_vector(h))), 1.0, kTol);
  }
}

TEST(Density, DimensionMismatchThrows) {
  EXPECT_THROW(DensityState({2, 2}, Matrix::Identity(2, 2)), DimensionError);
}

TEST(Chooser, EnumerationWeightsSumToOne) {
  auto branches = enumerate_branches([](Chooser& c) {
    const double w[] = {0.25, 0.75};
    const int a = c.pick(outcome("m"), w);
    const int b = pick_bit(c, secret("k"));
    return 2 * a + b;
  });
  double total = 0;
  for (const auto& br : branches) total += br.probability;
  EXPECT_EQ(branches.size(), 4u);
  EXPECT_NEAR(total, 1.0, kTol);
}

TEST(Chooser, SamplingIsSeeded) {
  SamplingChooser a(derive_seed(5, "x")), b(derive_seed(5, "x"));
  for (int i = 0; i < 32; ++i) EXPECT_EQ(pick_uniform(a, secret("t"), 8), pick_uniform(b, secret("t"), 8));
}

TEST(FactoredState, CzOnBasisStateDoesNotMerge) {
  FactoredState s;
  Vector2 one(0, 1);
  const QubitId d = s.add_qubit(one);
  const QubitId q = s.add_qubit(plus_state(AngleIndex(0)));
  s.apply_cz(d, q);
  EXPECT_EQ(s.block_size(q), 1);
  // Z|+> = |->, so an X-measurement is deterministic 1.
  const auto p = s.probabilities(q, basis_from_angle(AngleIndex(0)));
  EXPECT_NEAR(p[1], 1.0, kTol);
}

TEST(FactoredState, PurifyReproducesState) {
  const DensityState rho = DensityState::maximally_mixed({2});
  const Vector psi = purify(rho);
  const DensityState joint = DensityState::from_vector(psi, {2, 2});
  const int keep[] = {0};
  EXPECT_LT(max_abs_diff(partial_trace(joint, keep).matrix(), rho.matrix()), kTol);
}

}  // namespace
}  // namespace dqc
