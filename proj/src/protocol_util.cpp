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

#include "protocol_util.hpp"

#include <algorithm>
#include <set>

#include "dqc/errors.hpp"

namespace dqc::detail {

std::map<int, Pad> propagate_x_pads(const std::map<int, Pad>& pads, const GraphTopology& g) {
  std::map<int, Pad> out = pads;
  for (const auto& [v, pad] : pads) {
    if (!pad.x) continue;
    for (int w : g.neighbours(v)) out[w].kappa += AngleIndex::pi();
  }
  return out;
}

std::vector<QubitId> output_qubits(const std::map<int, QubitId>& qubits, const std::vector<int>& outputs) {
  std::vector<QubitId> ids;
  for (int o : outputs) ids.push_back(qubits.at(o));
  return ids;
}

Matrix correct_outputs(FactoredState& state, const std::map<int, QubitId>& qubits, const GraphTopology& g,
                       const FlowPlan& plan, const std::map<int, int>& results, const std::map<int, Pad>& pads) {
  for (int o : g.outputs) {
    const QubitId q = qubits.at(o);
    Pad pad;
    if (auto it = pads.find(o); it != pads.end()) pad = it->second;
    state.apply_1q(q, pad_inverse_phase(pad));
    if (pad.x) state.apply_1q(q, gates::x());
    const auto [sx, sz] = signal_parities(o, plan, results);
    state.apply_1q(q, gates::pauli(sx, sz));
  }
  return state.reduced_density(output_qubits(qubits, g.outputs));
}

std::vector<int> path_order(const GraphTopology& base) {
  base.validate();
  if (base.inputs.size() != 1 || base.outputs.size() != 1) throw GraphError("base graph must have one input and one output");
  if (base.edges.size() + 1 != base.nodes.size()) throw GraphError("base graph must be a path");
  std::vector<int> path = {base.inputs.front()};
  std::set<int> seen = {path.back()};
  while (!base.is_output(path.back())) {
    auto it = base.flow.find(path.back());
    if (it == base.flow.end()) throw GraphError("base graph flow does not reach the output");
    const auto nb = base.neighbours(path.back());
    if (std::find(nb.begin(), nb.end(), it->second) == nb.end() || seen.count(it->second)) {
      throw GraphError("base graph flow must follow the path");
    }
    path.push_back(it->second);
    seen.insert(it->second);
  }
  if (path.size() != base.nodes.size()) throw GraphError("base graph must be a path");
  return path;
}

DtLayout build_dt_layout(const GraphTopology& base, Chooser& chooser) {
  DtLayout L;
  L.path = path_order(base);
  L.dt = dotted_triple_graph(base, chooser);
  L.comp = computation_subgraph(L.dt);
  L.plan = plan_flow(L.comp);
  std::map<int, std::vector<int>> primaries;
  for (const auto& [p, v] : L.dt.base_of) primaries[v].push_back(p);
  for (std::size_t i = 0; i < L.path.size(); ++i) {
    const int v = L.path[i];
    auto& mine = base.is_output(v) ? L.held : L.order;
    mine.insert(mine.end(), primaries[v].begin(), primaries[v].end());
    if (i + 1 == L.path.size()) break;
    const int w = L.path[i + 1];
    for (const auto& [dot, e] : L.dt.dot_of) {
      if ((e.first == v && e.second == w) || (e.first == w && e.second == v)) L.order.push_back(dot);
    }
  }
  return L;
}

std::vector<int> measured_traps(const DtLayout& layout) {
  std::vector<int> out;
  for (int v : layout.order) {
    if (layout.dt.role.at(v) == Role::kTrap) out.push_back(v);
  }
  return out;
}

AngleIndex dt_angle(const DtLayout& layout, const std::map<int, AngleIndex>& angles, int node) {
  auto b = layout.dt.base_of.find(node);
  if (b == layout.dt.base_of.end()) return AngleIndex::zero();
  auto it = angles.find(b->second);
  return it == angles.end() ? AngleIndex::zero() : it->second;
}

void fold_dummy_parities(std::map<int, Pad>& pads, const std::map<int, int>& dummies, const GraphTopology& g) {
  std::map<int, AngleIndex> kappa;
  for (const auto& [v, p] : pads) kappa[v] = p.kappa;
  for (const auto& [v, k] : dummy_phase_update(kappa, dummies, g)) pads[v].kappa = k;
}

}  // namespace dqc::detail
