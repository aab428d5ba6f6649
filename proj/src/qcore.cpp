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

#include "dqc/qcore.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "dqc/errors.hpp"

namespace dqc {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

int product(std::span<const int> dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

// Mixed-radix digits of `index`, most significant first.
std::vector<int> digits_of(int index, std::span<const int> dims) {
  std::vector<int> d(dims.size());
  for (int w = static_cast<int>(dims.size()) - 1; w >= 0; --w) {
    d[w] = index % dims[w];
    index /= dims[w];
  }
  return d;
}

int index_of(std::span<const int> digits, std::span<const int> dims) {
  int idx = 0;
  for (std::size_t w = 0; w < dims.size(); ++w) idx = idx * dims[w] + digits[w];
  return idx;
}

void require_qubit_wire(std::span<const int> dims, int wire) {
  if (wire < 0 || wire >= static_cast<int>(dims.size())) {
    throw DimensionError("wire " + std::to_string(wire) + " out of range");
  }
  if (dims[wire] != 2) throw DimensionError("wire " + std::to_string(wire) + " is not a qubit");
}

}  // namespace

namespace gates {

Matrix2 identity() { return Matrix2::Identity(); }

Matrix2 x() {
  Matrix2 m;
  m << 0, 1, 1, 0;
  return m;
}

Matrix2 y() {
  Matrix2 m;
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

Matrix2 z() {
  Matrix2 m;
  m << 1, 0, 0, -1;
  return m;
}

Matrix2 h() {
  Matrix2 m;
  m << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
  return m;
}

Matrix2 phase_radians(double theta) {
  Matrix2 m = Matrix2::Identity();
  m(1, 1) = std::polar(1.0, theta);
  return m;
}

Matrix2 phase(AngleIndex k) {
  // Exact entries for the eight angles keep k = 2, 4, 6 free of rounding.
  static const cplx table[8] = {
      {1, 0}, {kInvSqrt2, kInvSqrt2}, {0, 1}, {-kInvSqrt2, kInvSqrt2},
      {-1, 0}, {-kInvSqrt2, -kInvSqrt2}, {0, -1}, {kInvSqrt2, -kInvSqrt2}};
  Matrix2 m = Matrix2::Identity();
  m(1, 1) = table[k.value()];
  return m;
}

Matrix cz() {
  Matrix m = Matrix::Identity(4, 4);
  m(3, 3) = -1;
  return m;
}

Matrix cx() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = 1;
  m(2, 3) = m(3, 2) = 1;
  return m;
}

Matrix2 pauli(int x_bit, int z_bit) {
  Matrix2 m = Matrix2::Identity();
  if (z_bit & 1) m = z() * m;
  if (x_bit & 1) m = x() * m;
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace gates

QubitBasis::QubitBasis(Vector2 v0, Vector2 v1, std::optional<AngleIndex> origin)
    : v0_(std::move(v0)), v1_(std::move(v1)), origin_(origin) {
  if (std::abs(v0_.squaredNorm() - 1.0) > kBasisTol || std::abs(v1_.squaredNorm() - 1.0) > kBasisTol ||
      std::abs(v0_.dot(v1_)) > kBasisTol) {
    throw InvalidStateError("basis vectors are not orthonormal");
  }
}

QubitBasis QubitBasis::computational() {
  return QubitBasis(Vector2(1, 0), Vector2(0, 1));
}

bool QubitBasis::operator==(const QubitBasis& o) const {
  return v0_ == o.v0_ && v1_ == o.v1_ && origin_ == o.origin_;
}

Vector2 plus_state(AngleIndex k) {
  return Vector2(kInvSqrt2, gates::phase(k)(1, 1) * kInvSqrt2);
}

QubitBasis basis_from_angle(AngleIndex k) {
  return QubitBasis(plus_state(k), plus_state(k + AngleIndex::pi()), k);
}

QubitBasis conjugate_basis(const QubitBasis& b) {
  std::optional<AngleIndex> origin;
  if (b.origin()) origin = -*b.origin();
  return QubitBasis(b.v0().conjugate(), b.v1().conjugate(), origin);
}

BipartiteOperator::BipartiteOperator(int d_x, Matrix matrix) : d_x_(d_x), matrix_(std::move(matrix)) {
  if (d_x_ < 1 || matrix_.rows() != 2 * d_x_ || matrix_.cols() != 2 * d_x_) {
    throw DimensionError("bipartite operator must be (2 d_x) x (2 d_x)");
  }
}

Matrix BipartiteOperator::block(int b, int c) const {
  return matrix_.block(b * d_x_, c * d_x_, d_x_, d_x_);
}

bool BipartiteOperator::is_unitary(double tol) const { return dqc::is_unitary(matrix_, tol); }

BipartiteOperator BipartiteOperator::from_blocks(const Matrix& b00, const Matrix& b01, const Matrix& b10,
                                                 const Matrix& b11) {
  const auto d = static_cast<int>(b00.rows());
  Matrix m(2 * d, 2 * d);
  m.block(0, 0, d, d) = b00;
  m.block(0, d, d, d) = b01;
  m.block(d, 0, d, d) = b10;
  m.block(d, d, d, d) = b11;
  return BipartiteOperator(d, std::move(m));
}

bool BipartiteOperator::operator==(const BipartiteOperator& o) const {
  return d_x_ == o.d_x_ && matrix_ == o.matrix_;
}

BipartiteOperator make_bipartite_unitary(int d_x, Matrix matrix) {
  BipartiteOperator op(d_x, std::move(matrix));
  if (!op.is_unitary()) throw NonUnitaryError("operator is not unitary");
  return op;
}

BipartiteOperator partial_transpose_q(const BipartiteOperator& omega) {
  return BipartiteOperator::from_blocks(omega.block(0, 0), omega.block(1, 0), omega.block(0, 1),
                                        omega.block(1, 1));
}

Vector bell_vector(PauliHerald h) {
  Vector phi = Vector::Zero(4);
  phi(0) = kInvSqrt2;
  phi(3) = kInvSqrt2;
  const Matrix local = gates::kron(gates::identity(), gates::pauli(h.b1, h.b0));
  return local * phi;
}

DensityState::DensityState(std::vector<int> dims, Matrix matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
  const int d = product(dims_);
  if (matrix_.rows() != d || matrix_.cols() != d) throw DimensionError("density matrix size mismatch");
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kAlgebraTol) {
    throw InvalidStateError("density matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace() - cplx(1.0)) > kAlgebraTol) {
    throw InvalidStateError("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(matrix_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kAlgebraTol) {
    throw InvalidStateError("density matrix has a negative eigenvalue");
  }
}

DensityState DensityState::from_vector(const Vector& psi, std::vector<int> dims) {
  const double n = psi.norm();
  if (n < 1e-14) throw InvalidStateError("zero state vector");
  const Vector v = psi / n;
  return DensityState(std::move(dims), v * v.adjoint());
}

DensityState DensityState::from_qubit_vector(const Vector& psi) {
  int n = 0;
  while ((Eigen::Index{1} << n) < psi.size()) ++n;
  if ((Eigen::Index{1} << n) != psi.size()) throw DimensionError("vector length is not a power of two");
  return from_vector(psi, std::vector<int>(static_cast<std::size_t>(n), 2));
}

DensityState DensityState::maximally_mixed(std::vector<int> dims) {
  const int d = product(dims);
  return DensityState(std::move(dims), Matrix::Identity(d, d) / static_cast<double>(d));
}

DensityState DensityState::scalar() { return DensityState({}, Matrix::Identity(1, 1)); }

DensityState tensor(const DensityState& a, const DensityState& b) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityState(std::move(dims), gates::kron(a.matrix(), b.matrix()));
}

Matrix embed_operator(const Matrix& op, std::span<const int> wires, std::span<const int> dims) {
  const int total = product(dims);
  std::vector<int> sub_dims;
  for (int w : wires) {
    if (w < 0 || w >= static_cast<int>(dims.size())) throw DimensionError("wire out of range");
    sub_dims.push_back(dims[w]);
  }
  const int sub = product(sub_dims);
  if (op.rows() != sub || op.cols() != sub) throw DimensionError("operator size does not match wires");
  std::vector<bool> is_target(dims.size(), false);
  for (int w : wires) {
    if (is_target[w]) throw DimensionError("repeated wire");
    is_target[w] = true;
  }
  // Decompose every index once.
  std::vector<int> sub_index(total), rest_index(total);
  for (int i = 0; i < total; ++i) {
    const auto d = digits_of(i, dims);
    int s = 0, r = 0;
    for (int w : wires) s = s * dims[w] + d[w];
    for (std::size_t w = 0; w < dims.size(); ++w) {
      if (!is_target[w]) r = r * dims[w] + d[w];
    }
    sub_index[i] = s;
    rest_index[i] = r;
  }
  Matrix full = Matrix::Zero(total, total);
  for (int i = 0; i < total; ++i) {
    for (int j = 0; j < total; ++j) {
      if (rest_index[i] == rest_index[j]) full(i, j) = op(sub_index[i], sub_index[j]);
    }
  }
  return full;
}

DensityState apply_unitary(const DensityState& state, const Matrix& u, std::span<const int> wires) {
  if (!is_unitary(u)) throw NonUnitaryError("apply_unitary with a non-unitary operator");
  const Matrix full = embed_operator(u, wires, state.dims());
  Matrix out = full * state.matrix() * full.adjoint();
  out = (out + out.adjoint()) / 2.0;
  return DensityState(state.dims(), std::move(out));
}

DensityState partial_trace(const DensityState& state, std::span<const int> keep) {
  const auto& dims = state.dims();
  std::vector<bool> kept(dims.size(), false);
  std::vector<int> keep_dims;
  for (int w : keep) {
    if (w < 0 || w >= static_cast<int>(dims.size()) || kept[w]) throw DimensionError("bad keep list");
    kept[w] = true;
    keep_dims.push_back(dims[w]);
  }
  const int total = state.total_dim();
  std::vector<int> k_idx(total), t_idx(total);
  for (int i = 0; i < total; ++i) {
    const auto d = digits_of(i, dims);
    int k = 0, t = 0;
    for (int w : keep) k = k * dims[w] + d[w];
    for (std::size_t w = 0; w < dims.size(); ++w) {
      if (!kept[w]) t = t * dims[w] + d[w];
    }
    k_idx[i] = k;
    t_idx[i] = t;
  }
  const int kd = product(keep_dims);
  Matrix out = Matrix::Zero(kd, kd);
  for (int i = 0; i < total; ++i) {
    for (int j = 0; j < total; ++j) {
      if (t_idx[i] == t_idx[j]) out(k_idx[i], k_idx[j]) += state.matrix()(i, j);
    }
  }
  out = (out + out.adjoint()) / 2.0;
  return DensityState(std::move(keep_dims), std::move(out));
}

std::pair<double, Matrix> project_wire(const DensityState& state, int wire, const Vector& vec) {
  const auto& dims = state.dims();
  require_qubit_wire(dims, wire);
  std::vector<int> rest_dims;
  for (std::size_t w = 0; w < dims.size(); ++w) {
    if (static_cast<int>(w) != wire) rest_dims.push_back(dims[w]);
  }
  const int rest = product(rest_dims);
  Matrix k = Matrix::Zero(rest, state.total_dim());
  for (int i = 0; i < rest; ++i) {
    auto d = digits_of(i, rest_dims);
    d.insert(d.begin() + wire, 0);
    for (int a = 0; a < 2; ++a) {
      d[wire] = a;
      k(i, index_of(d, dims)) = std::conj(vec(a));
    }
  }
  Matrix post = k * state.matrix() * k.adjoint();
  const double p = post.trace().real();
  return {p, std::move(post)};
}

std::vector<double> outcome_probabilities(const DensityState& state, int wire, const QubitBasis& basis) {
  std::vector<double> probs(2);
  for (int j = 0; j < 2; ++j) probs[j] = std::max(0.0, project_wire(state, wire, basis[j]).first);
  if (std::abs(probs[0] + probs[1] - 1.0) > kProbabilityTol) {
    throw NumericalError("measurement probabilities sum to " + std::to_string(probs[0] + probs[1]));
  }
  return probs;
}

namespace {

std::vector<int> dims_without(const std::vector<int>& dims, std::initializer_list<int> removed) {
  std::vector<int> out;
  for (std::size_t w = 0; w < dims.size(); ++w) {
    bool drop = false;
    for (int r : removed) drop = drop || r == static_cast<int>(w);
    if (!drop) out.push_back(dims[w]);
  }
  return out;
}

DensityState normalised(std::vector<int> dims, Matrix m, double p) {
  m /= p;
  m = (m + m.adjoint()) / 2.0;
  return DensityState(std::move(dims), std::move(m));
}

}  // namespace

MeasureOutcome measure_in_basis(const DensityState& state, int wire, const QubitBasis& basis, Chooser& chooser,
                                std::string_view label) {
  const auto probs = outcome_probabilities(state, wire, basis);
  const int j = chooser.pick(outcome(label), probs);
  auto [p, post] = project_wire(state, wire, basis[j]);
  return {j, probs[j], normalised(dims_without(state.dims(), {wire}), std::move(post), p)};
}

DensityState bell_state(PauliHerald h) { return DensityState::from_qubit_vector(bell_vector(h)); }

BellOutcome bell_measure(const DensityState& state, int wire_a, int wire_b, Chooser& chooser) {
  require_qubit_wire(state.dims(), wire_a);
  require_qubit_wire(state.dims(), wire_b);
  if (wire_a == wire_b) throw DimensionError("Bell measurement needs two distinct wires");
  // Move the pair to the front, then project with the 4-dim Bell vectors.
  std::vector<int> order = {wire_a, wire_b};
  for (int w = 0; w < state.num_subsystems(); ++w) {
    if (w != wire_a && w != wire_b) order.push_back(w);
  }
  const auto& dims = state.dims();
  std::vector<int> new_dims;
  for (int w : order) new_dims.push_back(dims[w]);
  const int total = state.total_dim();
  Matrix perm = Matrix::Zero(total, total);
  for (int i = 0; i < total; ++i) {
    const auto d = digits_of(i, dims);
    std::vector<int> nd;
    for (int w : order) nd.push_back(d[w]);
    perm(index_of(nd, new_dims), i) = 1;
  }
  const Matrix rho = perm * state.matrix() * perm.adjoint();
  const int rest = total / 4;
  std::vector<double> probs(4);
  std::vector<Matrix> posts(4);
  for (int k = 0; k < 4; ++k) {
    const PauliHerald h{k >> 1, k & 1};
    const Vector bv = bell_vector(h);
    Matrix kop(rest, total);
    kop.setZero();
    for (int i = 0; i < rest; ++i) {
      for (int a = 0; a < 4; ++a) kop(i, a * rest + i) = std::conj(bv(a));
    }
    posts[k] = kop * rho * kop.adjoint();
    probs[k] = std::max(0.0, posts[k].trace().real());
  }
  double sum = 0;
  for (double p : probs) sum += p;
  if (std::abs(sum - 1.0) > kProbabilityTol) throw NumericalError("Bell probabilities do not sum to 1");
  const int k = chooser.pick(outcome("bell"), probs);
  std::vector<int> rest_dims(new_dims.begin() + 2, new_dims.end());
  return {PauliHerald{k >> 1, k & 1}, probs[k], normalised(std::move(rest_dims), posts[k], probs[k])};
}

double trace_norm_half(const Matrix& diff) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((diff + diff.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityState& a, const DensityState& b) {
  if (a.dims() != b.dims()) throw DimensionError("trace_distance on mismatched dims");
  return trace_norm_half(a.matrix() - b.matrix());
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return ((u * u.adjoint()) - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("max_abs_diff size mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace dqc
