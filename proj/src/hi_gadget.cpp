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

#include "dqc/errors.hpp"
#include "dqc/factored_state.hpp"
#include "dqc/protocols.hpp"

namespace dqc {

Matrix hi_gadget_omega() {
  const Matrix2 v = gates::phase(-AngleIndex::half_pi()) * gates::h() * gates::phase(-AngleIndex::half_pi());
  Matrix control = Matrix::Zero(4, 4);
  control.block(0, 0, 2, 2) = gates::z();
  control.block(2, 2, 2, 2) = gates::x();
  Matrix v_on_q = Matrix::Zero(4, 4);
  for (int a = 0; a < 2; ++a) {
    for (int c = 0; c < 2; ++c) v_on_q.block(2 * a, 2 * c, 2, 2) = v(a, c) * Matrix2::Identity();
  }
  return control * v_on_q;
}

AngleIndex hi_gadget_gamma(int b, int r) {
  return (b ? AngleIndex::zero() : AngleIndex::half_pi()).plus_pi_if(r);
}

Matrix2 hi_gadget_w(int b) { return b ? gates::h() : Matrix2::Identity(); }

Matrix2 hi_gadget_pauli(int b, int r, int s) {
  if (b) return ((r ^ s) & 1) ? Matrix2(gates::x() * gates::z()) : Matrix2::Identity();
  return r ? gates::x() : gates::z();
}

HiResult run_hi_gadget(Setting setting, int b, const DensityState& rho, Chooser& chooser) {
  if (rho.total_dim() != 2) throw DimensionError("the gadget acts on a single qubit");
  if (b != 0 && b != 1) throw DimensionError("gadget bit must be 0 or 1");
  HiResult res;
  res.b = b;
  FactoredState state;
  const auto ids = state.add_block(purify(rho));
  const QubitId data = ids[0];
  const QubitBasis xb = basis_from_angle(AngleIndex::zero());
  if (setting == Setting::kPS) {
    res.r = pick_bit(chooser, secret("r"));
    const QubitId aux = state.add_qubit(plus_state(hi_gadget_gamma(b, res.r)));
    res.transcript.send(kClient, kServer, PayloadKind::kQubit, "aux", -1, aux);
    state.apply_2q(aux, data, hi_gadget_omega());
    res.s = state.measure(aux, xb, chooser, "m");
    res.transcript.send(kServer, kClient, PayloadKind::kBit, "s", -1, res.s);
    res.record = {b, res.r, res.s, 0};
  } else {
    res.s = pick_bit(chooser, secret("s"));
    const QubitId aux = state.add_qubit(plus_state(AngleIndex(4 * res.s)));
    const BipartiteOperator omega(2, hi_gadget_omega());
    state.apply_2q(aux, data, partial_transpose_q(omega).matrix());
    // The client's rotation of the auxiliary qubit is made double blind.
    const auto recs = dbsp_on_qubit(state, aux, {Setting::kRM}, false, chooser, res.transcript);
    const AngleIndex theta = dbsp_theta(recs);
    const int r_prime = pick_bit(chooser, secret("r"));
    const AngleIndex angle = hi_gadget_gamma(b, r_prime) - theta;
    res.transcript.send(kSmpc, kServer, PayloadKind::kAngle, "gadget_angle", -1, angle.value());
    state.apply_1q(aux, gates::phase(angle));
    const int r_tilde = state.measure(aux, xb, chooser, "m");
    res.transcript.send(kServer, kSmpc, PayloadKind::kBit, "r_tilde", -1, r_tilde);
    res.transcript.send(kServer, kSmpc, PayloadKind::kBit, "s", -1, res.s);
    res.r = r_prime ^ r_tilde;
    res.record = {b, r_prime, res.s, r_tilde};
  }
  const QubitId keep[1] = {data};
  res.output = DensityState({2}, state.reduced_density(keep));
  return res;
}

}  // namespace dqc
