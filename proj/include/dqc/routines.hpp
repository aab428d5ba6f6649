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

#pragma once

// The two atomic delegation routines on one qubit q and a register x:
//   prepare-and-send (PS): client prepares P_r, server applies Omega and
//     measures q in M giving s;
//   receive-and-measure (RM): server prepares conj(M)_s, applies Omega^{T_q}
//     and sends q; client measures in conj(P) giving r.
// Both have the same Kraus operators A_{r,s}.

#include <string>
#include <vector>

#include "json.hpp"
#include "dqc/chooser.hpp"
#include "dqc/qcore.hpp"

namespace dqc {

enum class Setting { kPS, kRM };

const char* to_string(Setting s);
Setting setting_from_string(const std::string& s);
inline Setting flipped(Setting s) { return s == Setting::kPS ? Setting::kRM : Setting::kPS; }

struct RoutineSpec {
  Setting setting = Setting::kPS;
  QubitBasis P = QubitBasis::computational();
  QubitBasis M = QubitBasis::computational();
  BipartiteOperator omega{1, Matrix::Identity(2, 2)};

  int d_x() const { return omega.register_dim(); }
  bool operator==(const RoutineSpec& o) const = default;
};

struct RoutineOutcome {
  int r = 0;
  int s = 0;
  DensityState post;
  /// Joint probability of (r, s).
  double prob = 0.0;
};

/// Requires spec.setting == PS and rho_x of dimension d_x.
RoutineOutcome run_ps(const RoutineSpec& spec, const DensityState& rho_x, Chooser& chooser);
/// Requires spec.setting == RM. Throws NonUnitaryError when Omega^{T_q} is
/// not unitary.
RoutineOutcome run_rm(const RoutineSpec& spec, const DensityState& rho_x, Chooser& chooser);

/// All four (r, s) branches with exact probabilities (zero-probability
/// branches omitted).
std::vector<RoutineOutcome> enumerate_routine(const RoutineSpec& spec, const DensityState& rho_x);

/// sum_{b,c} Theta_{b,c} conj(M_{s,b}) P_{r,c}.
Matrix kraus_ps(const RoutineSpec& spec, int r, int s);
/// <conj(P)_r| Omega^{T_q} |conj(M)_s>.
Matrix kraus_rm(const RoutineSpec& spec, int r, int s);

/// Flips the setting and exchanges Omega <-> Omega^{T_q}, P <-> conj(M),
/// M <-> conj(P). Self-inverse.
RoutineSpec t_transform(const RoutineSpec& spec);

/// Who does what when a routine runs.
struct RoutineActions {
  std::string preparer;
  QubitBasis prepared;
  Matrix applied;
  std::string measurer;
  QubitBasis measured;
};
RoutineActions routine_actions(const RoutineSpec& spec);

nlohmann::json to_json(const QubitBasis& b);
QubitBasis basis_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RoutineSpec& spec);
RoutineSpec routine_spec_from_json(const nlohmann::json& j);

}  // namespace dqc
