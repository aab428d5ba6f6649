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

// Dense complex linear algebra for small qubit systems: bases, gates,
// bipartite operators, density states, measurement and Bell pairs.
//
// Tensor ordering: wire 0 is the most significant factor.

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dqc/angle.hpp"
#include "dqc/chooser.hpp"

namespace dqc {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;
using Vector2 = Eigen::Vector2cd;

inline constexpr double kAlgebraTol = 1e-10;
inline constexpr double kProbabilityTol = 1e-9;
inline constexpr double kBasisTol = 1e-12;

namespace gates {
Matrix2 identity();
Matrix2 x();
Matrix2 y();
Matrix2 z();
Matrix2 h();
Matrix2 phase(AngleIndex k);  // P(k pi/4) = diag(1, e^{i k pi/4})
Matrix2 phase_radians(double theta);
Matrix cz();
/// CX with control on the first factor.
Matrix cx();
/// X^x Z^z (Z applied first).
Matrix2 pauli(int x, int z);
Matrix kron(const Matrix& a, const Matrix& b);
}  // namespace gates

/// An orthonormal pair of single-qubit state vectors.
class QubitBasis {
 public:
  /// Throws InvalidStateError unless the vectors are orthonormal within 1e-12.
  QubitBasis(Vector2 v0, Vector2 v1, std::optional<AngleIndex> origin = std::nullopt);

  static QubitBasis computational();

  const Vector2& operator[](int i) const { return i == 0 ? v0_ : v1_; }
  const Vector2& v0() const { return v0_; }
  const Vector2& v1() const { return v1_; }
  const std::optional<AngleIndex>& origin() const { return origin_; }

  bool operator==(const QubitBasis& o) const;

 private:
  Vector2 v0_;
  Vector2 v1_;
  std::optional<AngleIndex> origin_;
};

/// {|+_theta>, |-_theta>} with |+-_theta> = (|0> +- e^{i theta}|1>)/sqrt(2).
QubitBasis basis_from_angle(AngleIndex k);
QubitBasis conjugate_basis(const QubitBasis& b);
Vector2 plus_state(AngleIndex k);

/// Operator on (qubit q) (x) (register x of dimension d_x); q is the most
/// significant factor so block (b, c) is rows b*d_x.., cols c*d_x...
class BipartiteOperator {
 public:
  BipartiteOperator(int d_x, Matrix matrix);

  int register_dim() const { return d_x_; }
  const Matrix& matrix() const { return matrix_; }
  Matrix block(int b, int c) const;
  bool is_unitary(double tol = kAlgebraTol) const;

  static BipartiteOperator from_blocks(const Matrix& b00, const Matrix& b01, const Matrix& b10,
                                       const Matrix& b11);

  bool operator==(const BipartiteOperator& o) const;

 private:
  int d_x_;
  Matrix matrix_;
};

/// Validating constructor: throws NonUnitaryError if U U^dagger != I.
BipartiteOperator make_bipartite_unitary(int d_x, Matrix matrix);

/// Transpose of the q factor: sum_{a,b} |b><a| (x) Theta_{a,b}.
BipartiteOperator partial_transpose_q(const BipartiteOperator& omega);

struct PauliHerald {
  int b0 = 0;
  int b1 = 0;
  auto operator<=>(const PauliHerald&) const = default;
};

/// (I (x) X^{b1} Z^{b0}) (|00> + |11>)/sqrt(2).
Vector bell_vector(PauliHerald h);

class DensityState {
 public:
  /// Validates Hermiticity, unit trace and positivity within 1e-10.
  DensityState(std::vector<int> dims, Matrix matrix);

  static DensityState from_vector(const Vector& psi, std::vector<int> dims);
  static DensityState from_qubit_vector(const Vector& psi);
  static DensityState maximally_mixed(std::vector<int> dims);
  /// The 1x1 state with no subsystems.
  static DensityState scalar();

  const std::vector<int>& dims() const { return dims_; }
  const Matrix& matrix() const { return matrix_; }
  int total_dim() const { return static_cast<int>(matrix_.rows()); }
  int num_subsystems() const { return static_cast<int>(dims_.size()); }

 private:
  std::vector<int> dims_;
  Matrix matrix_;
};

DensityState tensor(const DensityState& a, const DensityState& b);

/// U rho U^dagger with U acting on `wires` (in the given order).
DensityState apply_unitary(const DensityState& state, const Matrix& u, std::span<const int> wires);

/// Full-space operator for `op` acting on `wires`.
Matrix embed_operator(const Matrix& op, std::span<const int> wires, std::span<const int> dims);

DensityState partial_trace(const DensityState& state, std::span<const int> keep);

struct MeasureOutcome {
  int outcome = 0;
  double probability = 0.0;
  DensityState post;
};

/// Born probabilities for measuring `wire` in `basis`.
std::vector<double> outcome_probabilities(const DensityState& state, int wire, const QubitBasis& basis);

/// Projects `wire` onto `vec`, returning the unnormalised probability and the
/// renormalised remainder with `wire` removed.
std::pair<double, Matrix> project_wire(const DensityState& state, int wire, const Vector& vec);

MeasureOutcome measure_in_basis(const DensityState& state, int wire, const QubitBasis& basis,
                                Chooser& chooser, std::string_view label = "measure");

DensityState bell_state(PauliHerald h);

struct BellOutcome {
  PauliHerald herald;
  double probability = 0.0;
  DensityState post;
};

BellOutcome bell_measure(const DensityState& state, int wire_a, int wire_b, Chooser& chooser);

double trace_distance(const DensityState& a, const DensityState& b);
/// Half the trace norm of a Hermitian difference; no validity checks.
double trace_norm_half(const Matrix& hermitian_difference);

bool is_unitary(const Matrix& u, double tol = kAlgebraTol);
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace dqc
