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

// Pure-state simulator that keeps unentangled groups of qubits in separate
// blocks. Blocks merge only when a two-qubit gate couples them, so graph
// states with many isolated dummy or trap qubits stay cheap.

#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "dqc/chooser.hpp"
#include "dqc/qcore.hpp"

namespace dqc {

using QubitId = int;

class FactoredState {
 public:
  /// Largest block allowed before SizeLimitError.
  static constexpr int kMaxBlockQubits = 22;

  /// Adds a fresh qubit in state `psi` (normalised internally).
  QubitId add_qubit(const Vector2& psi);
  /// Adds n qubits jointly in `psi` (length 2^n); returned ids are in
  /// most-significant-first order.
  std::vector<QubitId> add_block(const Vector& psi);

  void apply_1q(QubitId q, const Matrix2& u);
  /// `u` acts on (a, b) with a the most significant factor.
  void apply_2q(QubitId a, QubitId b, const Matrix& u);
  /// CZ; if either qubit is an isolated basis state |d>, imprints Z^d on the
  /// other without merging blocks.
  void apply_cz(QubitId a, QubitId b);

  /// Born probabilities of measuring q in `basis`.
  std::vector<double> probabilities(QubitId q, const QubitBasis& basis) const;
  /// Measures q in `basis` and removes it.
  int measure(QubitId q, const QubitBasis& basis, Chooser& chooser, std::string_view label);
  /// Projects q onto basis[outcome] (must have positive probability) and removes it.
  double project(QubitId q, const QubitBasis& basis, int outcome);
  PauliHerald bell_measure(QubitId a, QubitId b, Chooser& chooser, std::string_view label);

  /// Density matrix of `ids` (first id most significant), tracing out the rest
  /// of their blocks.
  Matrix reduced_density(std::span<const QubitId> ids) const;

  bool contains(QubitId q) const { return where_.count(q) != 0; }
  std::vector<QubitId> live_qubits() const;
  /// Number of qubits in the block holding q.
  int block_size(QubitId q) const;

 private:
  struct Block {
    std::vector<QubitId> qubits;
    Vector amp;
  };

  int block_of(QubitId q) const;
  int position(const Block& b, QubitId q) const;
  int merge(int ba, int bb);
  /// Returns d if q is alone in its block in state |d> exactly, else -1.
  int isolated_basis_value(QubitId q) const;
  Vector contract(const Block& b, int pos, const Vector2& bra_conj) const;
  void remove(QubitId q, Vector remaining);

  std::map<int, Block> blocks_;
  std::map<QubitId, int> where_;
  QubitId next_qubit_ = 0;
  int next_block_ = 0;
};

/// Picks one member of the eigen-ensemble of `rho` with its eigenvalue as
/// weight, so that averaging over branches reproduces the mixed state.
Vector pick_ensemble_member(const DensityState& rho, Chooser& chooser, std::string_view label = "input");

/// Purification sum_i sqrt(l_i) |e_i>|i> of an n-qubit rho, as a 2n-qubit
/// vector with the system first.
Vector purify(const DensityState& rho);

}  // namespace dqc
