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

#include <cmath>

#include "dqc/factored_state.hpp"
#include "dqc/harness.hpp"
#include "dqc/simulators.hpp"

namespace dqc {

namespace {

Matrix col(const Vector2& v) { return Matrix(v); }
Matrix bra(const Vector2& v) { return Matrix(v.adjoint()); }
Matrix eye(int d) { return Matrix::Identity(d, d); }

}  // namespace

Matrix random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = cplx(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR();
  // Fix column phases so the draw is Haar.
  for (int j = 0; j < dim; ++j) q.col(j) *= std::polar(1.0, std::arg(r(j, j)));
  return q;
}

QubitBasis random_basis(std::mt19937_64& rng) {
  const Matrix u = random_unitary(2, rng);
  return QubitBasis(u.col(0), u.col(1));
}

RoutineSpec random_spec(Setting setting, int d_x, std::mt19937_64& rng) {
  RoutineSpec spec;
  spec.setting = setting;
  spec.P = random_basis(rng);
  spec.M = random_basis(rng);
  spec.omega = BipartiteOperator(d_x, random_unitary(2 * d_x, rng));
  return spec;
}

CheckReport check_kraus_equality(int n_trials, const std::vector<int>& dims, std::uint64_t seed) {
  std::mt19937_64 rng(derive_seed(seed, "kraus"));
  double dev = 0;
  for (int t = 0; t < n_trials; ++t) {
    const int d = dims[static_cast<std::size_t>(t) % dims.size()];
    const RoutineSpec spec = random_spec(Setting::kPS, d, rng);
    for (int r = 0; r < 2; ++r) {
      for (int s = 0; s < 2; ++s) dev = std::max(dev, max_abs_diff(kraus_ps(spec, r, s), kraus_rm(spec, r, s)));
    }
  }
  auto rep = make_report("kraus", "kraus.ps-equals-rm", dev, kAlgebraTolerance, static_cast<std::uint64_t>(n_trials),
                         seed, "trials");
  rep.details["dims"] = dims;
  return rep;
}

CheckReport check_t_involution(int n_trials, std::uint64_t seed) {
  std::mt19937_64 rng(derive_seed(seed, "involution"));
  int mismatches = 0;
  for (int t = 0; t < n_trials; ++t) {
    const int d = 1 << (1 + t % 3);
    const RoutineSpec spec = random_spec(t % 2 ? Setting::kRM : Setting::kPS, d, rng);
    if (!(t_transform(t_transform(spec)) == spec)) ++mismatches;
  }
  return make_report("involution", "t-transform.self-inverse", mismatches, 0.0, static_cast<std::uint64_t>(n_trials),
                     seed, "trials");
}

std::vector<CheckReport> check_simulator_identities(std::uint64_t seed, int n_omega) {
  std::mt19937_64 rng(derive_seed(seed, "identities"));
  const double h = 1.0 / std::sqrt(2.0);
  const Matrix phi00 = bell_vector({0, 0});
  std::vector<QubitBasis> bases;
  for (int k = 0; k < 8; ++k) bases.push_back(basis_from_angle(AngleIndex(k)));
  bases.push_back(QubitBasis::computational());

  double prep2 = 0, meas2 = 0, comb2 = 0, comb2_swapped = 0, meas3 = 0, prep3 = 0;
  std::uint64_t n_prep2 = 0, n_meas2 = 0, n_comb2 = 0, n_meas3 = 0, n_prep3 = 0;
  for (const auto& P : bases) {
    for (int r = 0; r < 2; ++r) {
      const Vector2 pbar = P[r].conjugate();
      const Matrix lhs = gates::kron(bra(pbar), eye(2)) * phi00;
      prep2 = std::max(prep2, max_abs_diff(lhs, h * col(P[r])));
      ++n_prep2;
    }
  }
  for (int b0 = 0; b0 < 2; ++b0) {
    for (int b1 = 0; b1 < 2; ++b1) {
      const Matrix lhs = gates::kron(bell_vector({b0, b1}).adjoint(), eye(2)) * gates::kron(eye(2), phi00);
      // Under |Phi^{b0 b1}> = (I (x) X^b1 Z^b0)|Phi^00> the chain yields
      // X^b1 Z^b0 / 2; Z^b0 X^b1 / 2 differs by the sign (-1)^{b0 b1}.
      comb2 = std::max(comb2, max_abs_diff(lhs, 0.5 * gates::pauli(b1, b0)));
      comb2_swapped = std::max(comb2_swapped, max_abs_diff(lhs, 0.5 * gates::pauli(b1, b0).adjoint()));
      ++n_comb2;
    }
  }
  for (int w = 0; w < n_omega; ++w) {
    const int d = w % 2 ? 4 : 2;
    const BipartiteOperator omega(d, random_unitary(2 * d, rng));
    const Matrix om = omega.matrix();
    const Matrix om_t = partial_transpose_q(omega).matrix();
    std::vector<QubitBasis> local = bases;
    local.push_back(random_basis(rng));
    for (const auto& B : local) {
      for (int s = 0; s < 2; ++s) {
        const Vector2 mbar = B[s].conjugate();
        for (int b0 = 0; b0 < 2; ++b0) {
          for (int b1 = 0; b1 < 2; ++b1) {
            const Matrix bell_bra = bell_vector({b0, b1}).adjoint();
            const Matrix xz = gates::pauli(b1, b0);
            // Measurement simulator against the RM routine.
            const Matrix l2 = gates::kron(bell_bra, eye(d)) * gates::kron(eye(2), om_t) *
                              gates::kron(eye(2), gates::kron(col(mbar), eye(d)));
            const Matrix r2 = h * gates::kron(bra(B[s]), eye(d)) * om * gates::kron(xz, eye(d));
            meas2 = std::max(meas2, max_abs_diff(l2, r2));
            ++n_meas2;
            // Reverse direction: B plays the preparation basis.
            const Matrix l3 = bell_bra * gates::kron(eye(2), col(B[s]));
            const Matrix r3 = h * bra(mbar) * xz;
            meas3 = std::max(meas3, max_abs_diff(l3, r3));
            ++n_meas3;
          }
        }
        const Matrix lp = gates::kron(eye(2), gates::kron(bra(B[s]), eye(d))) * gates::kron(eye(2), om) *
                          gates::kron(phi00, eye(d));
        const Matrix rp = h * om_t * gates::kron(col(mbar), eye(d));
        prep3 = std::max(prep3, max_abs_diff(lp, rp));
        ++n_prep3;
      }
    }
  }
  auto comb = make_report("identity.bell_comb", "bell-chain.pauli-channel", comb2, kAlgebraTolerance, n_comb2, seed);
  comb.details["z_then_x_order_deviation"] = comb2_swapped;
  return {
      make_report("identity.bell_prep", "bell-prep.projects-to-basis", prep2, kAlgebraTolerance, n_prep2, seed),
      make_report("identity.bell_meas", "bell-meas.simulates-ps-measurement", meas2, kAlgebraTolerance, n_meas2,
                  seed),
      comb,
      make_report("identity.bell_meas_rev", "bell-meas.simulates-rm-preparation", meas3, kAlgebraTolerance, n_meas3,
                  seed),
      make_report("identity.bell_prep_rev", "bell-prep.simulates-ps-routine", prep3, kAlgebraTolerance, n_prep3,
                  seed),
  };
}

CheckReport check_herald_statistics(int n_trials, std::uint64_t seed) {
  std::uint64_t counts[4] = {0, 0, 0, 0};
  for (int t = 0; t < n_trials; ++t) {
    SamplingChooser chooser(derive_seed(derive_seed(seed, "heralds"), static_cast<std::uint64_t>(t)));
    FactoredState state;
    const BellPair a = sim_bell_prep(state);
    const BellPair b = sim_bell_prep(state);
    HeraldedChannel channel;
    ++counts[herald_value(channel.sim_bell_meas(state, a.outer, b.inner, chooser))];
  }
  double dev = 0;
  nlohmann::json freq = nlohmann::json::array();
  for (auto c : counts) {
    const double f = static_cast<double>(c) / n_trials;
    freq.push_back(f);
    dev = std::max(dev, std::abs(f - 0.25));
  }
  auto rep = make_report("heralds", "herald.uniform-paulis", dev, 0.015, static_cast<std::uint64_t>(n_trials), seed,
                         "trials");
  rep.details["frequencies"] = freq;
  const auto [lo, hi] = wilson_interval(counts[0], static_cast<std::uint64_t>(n_trials));
  rep.details["p00_interval"] = {lo, hi};
  return rep;
}

CheckReport check_herald_postselection(std::uint64_t seed) {
  // Entanglement swapping: after the correction named by the herald the
  // outer wires hold |Phi^{00}> for every herald value.
  const Matrix target = bell_vector({0, 0}) * bell_vector({0, 0}).adjoint();
  auto run = [](Chooser& c) {
    FactoredState state;
    const BellPair a = sim_bell_prep(state);
    const BellPair b = sim_bell_prep(state);
    HeraldedChannel channel;
    const PauliHerald h = channel.sim_bell_meas(state, a.outer, b.inner, c);
    state.apply_1q(b.outer, gates::pauli(h.b1, h.b0).adjoint());
    const QubitId keep[2] = {a.inner, b.outer};
    return std::make_pair(h, state.reduced_density(keep));
  };
  double dev = 0, p00 = 0;
  const auto branches = enumerate_branches(run);
  for (const auto& br : branches) {
    dev = std::max(dev, trace_norm_half(br.value.second - target));
    if (br.value.first == PauliHerald{0, 0}) p00 += br.probability;
  }
  dev = std::max(dev, std::abs(p00 - 0.25));
  auto rep = make_report("heralds.postselect", "herald.corrected-identity-channel", dev, kAlgebraTolerance,
                         branches.size(), seed);
  rep.details["p00_exact"] = p00;
  return rep;
}

}  // namespace dqc
