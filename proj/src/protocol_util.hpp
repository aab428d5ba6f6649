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

// Helpers shared by the protocol implementations.

#include <map>
#include <vector>

#include "dqc/factored_state.hpp"
#include "dqc/graphs.hpp"
#include "dqc/protocols.hpp"

namespace dqc::detail {

/// A node's state is P(kappa) X^x applied to its ideal state.
struct Pad {
  AngleIndex kappa;
  int x = 0;
};

/// X pads turn into Z on neighbours once the CZ network is applied; returns
/// the pads with those Z shifts folded into kappa for every node.
std::map<int, Pad> propagate_x_pads(const std::map<int, Pad>& pads, const GraphTopology& g);

/// Measurement angle that realises `phi` on a node carrying `pad`, with the
/// outcome flipped by r.
inline AngleIndex padded_angle(AngleIndex phi, const Pad& pad, int r) {
  return phi.negated_if(pad.x) + pad.kappa + AngleIndex(4 * (r & 1));
}

/// Undoes the pad and the flow byproduct on every output qubit and returns
/// the density matrix of the outputs in order.
Matrix correct_outputs(FactoredState& state, const std::map<int, QubitId>& qubits, const GraphTopology& g,
                       const FlowPlan& plan, const std::map<int, int>& results, const std::map<int, Pad>& pads);

inline Matrix2 pad_inverse_phase(const Pad& pad) { return gates::phase(-pad.kappa); }

/// Dotted triple-graph of a path base graph with its computation subgraph
/// and a role-independent measurement order.
struct DtLayout {
  DTGraph dt;
  GraphTopology comp;
  FlowPlan plan;
  /// Base vertices from input to output.
  std::vector<int> path;
  /// Every node outside the output triple: primaries of each base vertex,
  /// then the dots of its outgoing edge.
  std::vector<int> order;
  /// The three primaries of the output base vertex.
  std::vector<int> held;
};

/// Base vertices in order along the flow; GraphError unless `base` is a
/// path from its single input to its single output.
std::vector<int> path_order(const GraphTopology& base);

/// Traps in the measurement order, i.e. those the server measures.
std::vector<int> measured_traps(const DtLayout& layout);

DtLayout build_dt_layout(const GraphTopology& base, Chooser& chooser);

/// Angle of a computation node: phi of its base vertex, zero on dots.
AngleIndex dt_angle(const DtLayout& layout, const std::map<int, AngleIndex>& angles, int node);

/// Parity of the dummy-neighbour bits folded into every non-dummy pad.
void fold_dummy_parities(std::map<int, Pad>& pads, const std::map<int, int>& dummies, const GraphTopology& g);

std::vector<QubitId> output_qubits(const std::map<int, QubitId>& qubits, const std::vector<int>& outputs);

}  // namespace dqc::detail
