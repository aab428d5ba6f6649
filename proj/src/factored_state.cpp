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

#include "dqc/factored_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dqc/errors.hpp"

namespace dqc {

namespace {

constexpr double kExactBasis = 1e-14;

inline int bit_at(int index, int n, int pos) { return (index >> (n - 1 - pos)) & 1; }

}  // namespace

QubitId FactoredState::add_qubit(const Vector2& psi) {
  Vector v = psi;
  return add_block(v).front();
}

std::vector<QubitId> FactoredState::add_block(const Vector& psi) {
  int n = 0;
  while ((Eigen::Index{1} << n) < psi.size()) ++n;
  if ((Eigen::Index{1} << n) != psi.size() || n == 0) throw DimensionError("block length must be 2^n, n >= 1");
  if (n > kMaxBlockQubits) throw SizeLimitError("block too large");
  const double norm = psi.norm();
  if (norm < 1e-14) throw InvalidStateError("zero state vector");
  Block b;
  b.amp = psi / norm;
  for (int i = 0; i < n; ++i) {
    b.qubits.push_back(next_qubit_);
    where_[next_qubit_] = next_block_;
    ++next_qubit_;
  }
  std::vector<QubitId> ids = b.qubits;
  blocks_[next_block_++] = std::move(b);
  return ids;
}

int FactoredState::block_of(QubitId q) const {
  auto it = where_.find(q);
  if (it == where_.end()) throw DimensionError("qubit " + std::to_string(q) + " is not live");
  return it->second;
}

int FactoredState::position(const Block& b, QubitId q) const {
  auto it = std::find(b.qubits.begin(), b.qubits.end(), q);
  return static_cast<int>(it - b.qubits.begin());
}

int FactoredState::block_size(QubitId q) const {
  return static_cast<int>(blocks_.at(block_of(q)).qubits.size());
}

std::vector<QubitId> FactoredState::live_qubits() const {
  std::vector<QubitId> ids;
  for (const auto& [q, _] : where_) ids.push_back(q);
  return ids;
}

void FactoredState::apply_1q(QubitId q, const Matrix2& u) {
  Block& b = blocks_.at(block_of(q));
  const int n = static_cast<int>(b.qubits.size());
  const int pos = position(b, q);
  const int mask = 1 << (n - 1 - pos);
  for (int i = 0; i < static_cast<int>(b.amp.size()); ++i) {
    if (i & mask) continue;
    const cplx a0 = b.amp(i), a1 = b.amp(i | mask);
    b.amp(i) = u(0, 0) * a0 + u(0, 1) * a1;
    b.amp(i | mask) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

int FactoredState::merge(int ba, int bb) {
  if (ba == bb) return ba;
  Block& a = blocks_.at(ba);
  Block& b = blocks_.at(bb);
  if (static_cast<int>(a.qubits.size() + b.qubits.size()) > kMaxBlockQubits) {
    throw SizeLimitError("entangled block exceeds " + std::to_string(kMaxBlockQubits) + " qubits");
  }
  Vector amp(a.amp.size() * b.amp.size());
  for (Eigen::Index i = 0; i < a.amp.size(); ++i) amp.segment(i * b.amp.size(), b.amp.size()) = a.amp(i) * b.amp;
  a.amp = std::move(amp);
  for (QubitId q : b.qubits) {
    a.qubits.push_back(q);
    where_[q] = ba;
  }
  blocks_.erase(bb);
  return ba;
}

void FactoredState::apply_2q(QubitId qa, QubitId qb, const Matrix& u) {
  if (qa == qb) throw DimensionError("two-qubit gate on a single qubit");
  if (u.rows() != 4 || u.cols() != 4) throw DimensionError("two-qubit gate must be 4x4");
  const int id = merge(block_of(qa), block_of(qb));
  Block& b = blocks_.at(id);
  const int n = static_cast<int>(b.qubits.size());
  const int ma = 1 << (n - 1 - position(b, qa));
  const int mb = 1 << (n - 1 - position(b, qb));
  for (int i = 0; i < static_cast<int>(b.amp.size()); ++i) {
    if ((i & ma) || (i & mb)) continue;
    const int idx[4] = {i, i | mb, i | ma, i | ma | mb};
    cplx in[4];
    for (int k = 0; k < 4; ++k) in[k] = b.amp(idx[k]);
    for (int r = 0; r < 4; ++r) {
      cplx acc = 0;
      for (int c = 0; c < 4; ++c) acc += u(r, c) * in[c];
      b.amp(idx[r]) = acc;
    }
  }
}

int FactoredState::isolated_basis_value(QubitId q) const {
  const Block& b = blocks_.at(block_of(q));
  if (b.qubits.size() != 1) return -1;
  if (std::abs(b.amp(1)) < kExactBasis) return 0;
  if (std::abs(b.amp(0)) < kExactBasis) return 1;
  return -1;
}

void FactoredState::apply_cz(QubitId qa, QubitId qb) {
  if (qa == qb) throw DimensionError("CZ on a single qubit");
  if (const int d = isolated_basis_value(qa); d >= 0) {
    if (d == 1) apply_1q(qb, gates::z());
    return;
  }
  if (const int d = isolated_basis_value(qb); d >= 0) {
    if (d == 1) apply_1q(qa, gates::z());
    return;
  }
  apply_2q(qa, qb, gates::cz());
}

Vector FactoredState::contract(const Block& b, int pos, const Vector2& vec) const {
  const int n = static_cast<int>(b.qubits.size());
  Vector out = Vector::Zero(b.amp.size() / 2);
  for (int i = 0; i < static_cast<int>(b.amp.size()); ++i) {
    const int bit = bit_at(i, n, pos);
    // Drop bit `pos` from i.
    const int low_bits = n - 1 - pos;
    const int high = i >> (low_bits + 1);
    const int low = i & ((1 << low_bits) - 1);
    out((high << low_bits) | low) += std::conj(vec(bit)) * b.amp(i);
  }
  return out;
}

std::vector<double> FactoredState::probabilities(QubitId q, const QubitBasis& basis) const {
  const Block& b = blocks_.at(block_of(q));
  const int pos = position(b, q);
  std::vector<double> p(2);
  for (int j = 0; j < 2; ++j) p[j] = contract(b, pos, basis[j]).squaredNorm();
  const double sum = p[0] + p[1];
  if (std::abs(sum - 1.0) > kProbabilityTol) {
    throw NumericalError("measurement probabilities sum to " + std::to_string(sum));
  }
  p[0] /= sum;
  p[1] /= sum;
  return p;
}

void FactoredState::remove(QubitId q, Vector remaining) {
  const int id = block_of(q);
  Block& b = blocks_.at(id);
  b.qubits.erase(b.qubits.begin() + position(b, q));
  where_.erase(q);
  if (b.qubits.empty()) {
    blocks_.erase(id);
    return;
  }
  b.amp = remaining / remaining.norm();
}

int FactoredState::measure(QubitId q, const QubitBasis& basis, Chooser& chooser, std::string_view label) {
  const auto p = probabilities(q, basis);
  const int j = chooser.pick(outcome(label), p);
  project(q, basis, j);
  return j;
}

double FactoredState::project(QubitId q, const QubitBasis& basis, int outcome_bit) {
  const Block& b = blocks_.at(block_of(q));
  Vector rest = contract(b, position(b, q), basis[outcome_bit]);
  const double p = rest.squaredNorm();
  if (p < 1e-15) throw NumericalError("projection onto a zero-probability outcome");
  remove(q, std::move(rest));
  return p;
}

PauliHerald FactoredState::bell_measure(QubitId qa, QubitId qb, Chooser& chooser, std::string_view label) {
  // Rotate the Bell basis to the computational basis: CX(a->b) then H on a
  // maps the herald (b0, b1) to outcomes a = b0, b = b1.
  apply_2q(qa, qb, gates::cx());
  apply_1q(qa, gates::h());
  const auto z = QubitBasis::computational();
  const int b0 = measure(qa, z, chooser, label);
  const int b1 = measure(qb, z, chooser, label);
  return {b0, b1};
}

Matrix FactoredState::reduced_density(std::span<const QubitId> ids) const {
  if (ids.empty()) return Matrix::Identity(1, 1);
  // Combine the touched blocks into one vector.
  std::vector<int> touched;
  for (QubitId q : ids) {
    const int id = block_of(q);
    if (std::find(touched.begin(), touched.end(), id) == touched.end()) touched.push_back(id);
  }
  std::vector<QubitId> order;
  Vector amp = Vector::Ones(1);
  for (int id : touched) {
    const Block& b = blocks_.at(id);
    Vector next(amp.size() * b.amp.size());
    for (Eigen::Index i = 0; i < amp.size(); ++i) next.segment(i * b.amp.size(), b.amp.size()) = amp(i) * b.amp;
    amp = std::move(next);
    order.insert(order.end(), b.qubits.begin(), b.qubits.end());
  }
  const int n = static_cast<int>(order.size());
  std::vector<int> keep;
  for (QubitId q : ids) {
    const int pos = static_cast<int>(std::find(order.begin(), order.end(), q) - order.begin());
    if (std::find(keep.begin(), keep.end(), pos) != keep.end()) throw DimensionError("repeated qubit");
    keep.push_back(pos);
  }
  const int k = static_cast<int>(keep.size());
  std::vector<bool> kept(n, false);
  for (int p : keep) kept[p] = true;
  // rho_keep[a][b] = sum_t psi[a,t] conj(psi[b,t]) via a (2^k x 2^{n-k}) reshape.
  Matrix m = Matrix::Zero(1 << k, 1 << (n - k));
  for (int i = 0; i < (1 << n); ++i) {
    int a = 0, t = 0;
    for (int p : keep) a = (a << 1) | bit_at(i, n, p);
    for (int p = 0; p < n; ++p) {
      if (!kept[p]) t = (t << 1) | bit_at(i, n, p);
    }
    m(a, t) = amp(i);
  }
  return m * m.adjoint();
}

Vector pick_ensemble_member(const DensityState& rho, Chooser& chooser, std::string_view label) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  std::vector<double> w(static_cast<std::size_t>(rho.total_dim()));
  double sum = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double ev = es.eigenvalues()(static_cast<Eigen::Index>(i));
    w[i] = ev > 1e-13 ? ev : 0.0;
    sum += w[i];
  }
  for (double& x : w) x /= sum;
  const int j = chooser.pick(secret(label), w);
  return es.eigenvectors().col(j);
}

Vector purify(const DensityState& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  const Eigen::Index d = rho.total_dim();
  Vector out = Vector::Zero(d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double w = std::max(0.0, es.eigenvalues()(i));
    for (Eigen::Index a = 0; a < d; ++a) out(a * d + i) = std::sqrt(w) * es.eigenvectors()(a, i);
  }
  return out;
}

}  // namespace dqc
