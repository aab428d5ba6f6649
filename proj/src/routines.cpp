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

#include "dqc/routines.hpp"

#include "dqc/errors.hpp"

namespace dqc {

const char* to_string(Setting s) { return s == Setting::kPS ? "PS" : "RM"; }

Setting setting_from_string(const std::string& s) {
  if (s == "PS" || s == "ps") return Setting::kPS;
  if (s == "RM" || s == "rm") return Setting::kRM;
  throw DqcError("unknown setting '" + s + "'");
}

namespace {

void check_register(const RoutineSpec& spec, const DensityState& rho_x) {
  if (rho_x.total_dim() != spec.d_x()) throw DimensionError("register dimension does not match d_x");
}

DensityState pure_qubit(const Vector2& v) { return DensityState::from_vector(v, {2}); }

// Joint state |v><v| (x) rho_x with q as wire 0 and x flattened into wire 1.
DensityState with_qubit(const Vector2& v, const DensityState& rho_x) {
  DensityState x({rho_x.total_dim()}, rho_x.matrix());
  return tensor(pure_qubit(v), x);
}

DensityState restore_dims(const DensityState& flat, const DensityState& like) {
  return DensityState(like.dims(), flat.matrix());
}

const int kBoth[2] = {0, 1};

}  // namespace

RoutineOutcome run_ps(const RoutineSpec& spec, const DensityState& rho_x, Chooser& chooser) {
  if (spec.setting != Setting::kPS) throw DqcError("run_ps needs a PS spec");
  check_register(spec, rho_x);
  const int r = pick_bit(chooser, secret("r"));
  DensityState joint = apply_unitary(with_qubit(spec.P[r], rho_x), spec.omega.matrix(), kBoth);
  MeasureOutcome m = measure_in_basis(joint, 0, spec.M, chooser, "s");
  return {r, m.outcome, restore_dims(m.post, rho_x), 0.5 * m.probability};
}

RoutineOutcome run_rm(const RoutineSpec& spec, const DensityState& rho_x, Chooser& chooser) {
  if (spec.setting != Setting::kRM) throw DqcError("run_rm needs an RM spec");
  check_register(spec, rho_x);
  const BipartiteOperator omega_t = partial_transpose_q(spec.omega);
  if (!omega_t.is_unitary()) throw NonUnitaryError("Omega^{T_q} is not unitary");
  const int s = pick_bit(chooser, secret("s"));
  const QubitBasis m_bar = conjugate_basis(spec.M);
  DensityState joint = apply_unitary(with_qubit(m_bar[s], rho_x), omega_t.matrix(), kBoth);
  MeasureOutcome m = measure_in_basis(joint, 0, conjugate_basis(spec.P), chooser, "r");
  return {m.outcome, s, restore_dims(m.post, rho_x), 0.5 * m.probability};
}

std::vector<RoutineOutcome> enumerate_routine(const RoutineSpec& spec, const DensityState& rho_x) {
  std::vector<RoutineOutcome> out;
  for_each_branch([&](Chooser& c) {
    out.push_back(spec.setting == Setting::kPS ? run_ps(spec, rho_x, c) : run_rm(spec, rho_x, c));
  });
  return out;
}

Matrix kraus_ps(const RoutineSpec& spec, int r, int s) {
  const int d = spec.d_x();
  Matrix a = Matrix::Zero(d, d);
  for (int b = 0; b < 2; ++b) {
    for (int c = 0; c < 2; ++c) {
      a += spec.omega.block(b, c) * (std::conj(spec.M[s](b)) * spec.P[r](c));
    }
  }
  return a;
}

Matrix kraus_rm(const RoutineSpec& spec, int r, int s) {
  // Contract the full operator with (<conj P_r| (x) I) and (|conj M_s> (x) I).
  const int d = spec.d_x();
  const Matrix omega_t = partial_transpose_q(spec.omega).matrix();
  const Vector2 bra = conjugate_basis(spec.P)[r];
  const Vector2 ket = conjugate_basis(spec.M)[s];
  const Matrix id = Matrix::Identity(d, d);
  Matrix left(d, 2 * d), right(2 * d, d);
  left << std::conj(bra(0)) * id, std::conj(bra(1)) * id;
  right << ket(0) * id, ket(1) * id;
  return left * omega_t * right;
}

RoutineSpec t_transform(const RoutineSpec& spec) {
  RoutineSpec t;
  t.setting = flipped(spec.setting);
  t.omega = partial_transpose_q(spec.omega);
  t.P = conjugate_basis(spec.M);
  t.M = conjugate_basis(spec.P);
  return t;
}

RoutineActions routine_actions(const RoutineSpec& spec) {
  if (spec.setting == Setting::kPS) {
    return {"client", spec.P, spec.omega.matrix(), "server", spec.M};
  }
  return {"server", conjugate_basis(spec.M), partial_transpose_q(spec.omega).matrix(), "client",
          conjugate_basis(spec.P)};
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw DqcError("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j.at(i).size()) != cols) throw DqcError("ragged matrix rows");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const auto& e = j.at(i).at(k);
      m(i, k) = cplx(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

nlohmann::json to_json(const QubitBasis& b) {
  if (b.origin() && b == basis_from_angle(*b.origin())) return {{"k", b.origin()->value()}};
  Matrix v(2, 2);
  v.row(0) = b.v0().transpose();
  v.row(1) = b.v1().transpose();
  return {{"vectors", matrix_to_json(v)}};
}

QubitBasis basis_from_json(const nlohmann::json& j) {
  if (j.contains("k")) return basis_from_angle(AngleIndex(j.at("k").get<int>()));
  const Matrix v = matrix_from_json(j.at("vectors"));
  if (v.rows() != 2 || v.cols() != 2) throw DimensionError("basis needs two 2-vectors");
  return QubitBasis(v.row(0).transpose(), v.row(1).transpose());
}

nlohmann::json to_json(const RoutineSpec& spec) {
  return {{"setting", to_string(spec.setting)},
          {"P", to_json(spec.P)},
          {"M", to_json(spec.M)},
          {"omega", matrix_to_json(spec.omega.matrix())},
          {"d_x", spec.d_x()}};
}

RoutineSpec routine_spec_from_json(const nlohmann::json& j) {
  RoutineSpec spec;
  spec.setting = setting_from_string(j.at("setting").get<std::string>());
  spec.P = basis_from_json(j.at("P"));
  spec.M = basis_from_json(j.at("M"));
  spec.omega = BipartiteOperator(j.at("d_x").get<int>(), matrix_from_json(j.at("omega")));
  return spec;
}

}  // namespace dqc
