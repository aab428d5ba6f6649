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

#include "dqc/oracle.hpp"

#include <algorithm>
#include <functional>

#include "dqc/errors.hpp"

namespace dqc {

namespace {

struct Dense {
  std::vector<int> ids;  // ids[0] is the most significant qubit
  Vector amp;

  int pos(int id) const { return static_cast<int>(std::find(ids.begin(), ids.end(), id) - ids.begin()); }

  void cz(int a, int b) {
    const int n = static_cast<int>(ids.size());
    const int ma = 1 << (n - 1 - pos(a)), mb = 1 << (n - 1 - pos(b));
    for (Eigen::Index i = 0; i < amp.size(); ++i) {
      if ((i & ma) && (i & mb)) amp(i) = -amp(i);
    }
  }

  // <v| on qubit `id`, leaving an unnormalised state on the rest.
  Dense project(int id, const Vector2& v) const {
    const int n = static_cast<int>(ids.size());
    const int p = pos(id);
    Dense out;
    out.ids = ids;
    out.ids.erase(out.ids.begin() + p);
    out.amp = Vector::Zero(amp.size() / 2);
    const int low_bits = n - 1 - p;
    for (int i = 0; i < static_cast<int>(amp.size()); ++i) {
      const int bit = (i >> low_bits) & 1;
      const int j = ((i >> (low_bits + 1)) << low_bits) | (i & ((1 << low_bits) - 1));
      out.amp(j) += std::conj(v(bit)) * amp(i);
    }
    return out;
  }

  // Unnormalised |psi><psi| with qubits reordered to `order`.
  Matrix density(const std::vector<int>& order) const {
    const int n = static_cast<int>(ids.size());
    Vector v(amp.size());
    for (int i = 0; i < static_cast<int>(amp.size()); ++i) {
      int j = 0;
      for (int id : order) j = (j << 1) | ((i >> (n - 1 - pos(id))) & 1);
      v(j) = amp(i);
    }
    return v * v.adjoint();
  }
};

Dense initial_graph_state(const GraphTopology& g, const Vector& input) {
  Dense d;
  d.ids = g.inputs;
  for (int v : g.nodes) {
    if (!g.is_input(v)) d.ids.push_back(v);
  }
  const int extra = static_cast<int>(d.ids.size() - g.inputs.size());
  const double plus_amp = std::pow(2.0, -0.5 * extra);
  d.amp = Vector::Zero(input.size() << extra);
  for (Eigen::Index i = 0; i < input.size(); ++i) {
    d.amp.segment(i << extra, Eigen::Index{1} << extra).setConstant(input(i) * plus_amp);
  }
  for (const auto& [a, b] : g.edges) d.cz(a, b);
  return d;
}

std::vector<int> measurement_order(const Pattern& p) {
  if (!p.order.empty()) return p.order;
  std::vector<int> out;
  for (int v : p.topology.nodes) {
    if (!p.topology.is_output(v)) out.push_back(v);
  }
  return out;
}

void check_pattern(const Pattern& p) {
  p.topology.validate();
  if (static_cast<int>(p.topology.nodes.size()) > kOracleMaxQubits) {
    throw SizeLimitError("oracle limited to " + std::to_string(kOracleMaxQubits) + " qubits");
  }
  if (p.input.total_dim() != (1 << p.topology.inputs.size())) {
    throw DimensionError("input state does not match the input nodes");
  }
}

AngleIndex angle_of(const Pattern& p, int v) {
  auto it = p.angles.find(v);
  return it == p.angles.end() ? AngleIndex::zero() : it->second;
}

std::vector<std::pair<double, Vector>> ensemble(const DensityState& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  std::vector<std::pair<double, Vector>> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) > 1e-13) out.emplace_back(es.eigenvalues()(i), es.eigenvectors().col(i));
  }
  return out;
}

}  // namespace

Matrix oracle_circuit(const Pattern& pattern) {
  if (pattern.topology.nodes.empty()) return pattern.input.matrix();
  check_pattern(pattern);
  const auto order = measurement_order(pattern);
  Matrix out;
  for (const auto& [w, psi] : ensemble(pattern.input)) {
    Dense d = initial_graph_state(pattern.topology, psi);
    for (int v : order) d = d.project(v, basis_from_angle(angle_of(pattern, v))[0]);
    Matrix rho = w * d.density(pattern.topology.outputs);
    out = out.size() == 0 ? rho : Matrix(out + rho);
  }
  return out / out.trace().real();
}

std::vector<OracleBranch> oracle_branches(const Pattern& pattern) {
  check_pattern(pattern);
  const auto order = measurement_order(pattern);
  std::map<std::vector<int>, Matrix> acc;
  for (const auto& [w, psi] : ensemble(pattern.input)) {
    std::vector<int> bits;
    std::function<void(const Dense&, std::size_t)> rec = [&](const Dense& d, std::size_t k) {
      if (k == order.size()) {
        Matrix rho = w * d.density(pattern.topology.outputs);
        auto [it, fresh] = acc.emplace(bits, rho);
        if (!fresh) it->second += rho;
        return;
      }
      const QubitBasis b = basis_from_angle(angle_of(pattern, order[k]));
      for (int j = 0; j < 2; ++j) {
        bits.push_back(j);
        rec(d.project(order[k], b[j]), k + 1);
        bits.pop_back();
      }
    };
    rec(initial_graph_state(pattern.topology, psi), 0);
  }
  std::vector<OracleBranch> out;
  for (auto& [bits, rho] : acc) {
    OracleBranch b;
    for (std::size_t k = 0; k < order.size(); ++k) b.outcomes[order[k]] = bits[k];
    b.probability = rho.trace().real();
    if (b.probability < 1e-15) continue;
    b.output = rho / b.probability;
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace dqc
