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

// Graph-state topologies, the dotted triple-graph, and flow bookkeeping.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "dqc/angle.hpp"
#include "dqc/chooser.hpp"

namespace dqc {

struct GraphTopology {
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> inputs;
  std::vector<int> outputs;
  /// Flow function f: every non-output node to its successor. Empty when
  /// the graph has no declared flow.
  std::map<int, int> flow;

  bool has_node(int v) const;
  std::vector<int> neighbours(int v) const;
  bool is_output(int v) const;
  bool is_input(int v) const;
  /// Throws GraphError on dangling edges, self-loops or duplicate ids.
  void validate() const;
};

/// Path 1 - 2 - ... - n with flow i -> i + 1.
GraphTopology build_linear_cluster(int n);

/// m x n brickwork; node (row i, col j), 0-based, has id i*n + j + 1.
/// Column 0 holds the inputs, column n-1 the outputs; flow runs along rows.
GraphTopology build_brickwork(int rows, int cols);

enum class Role { kComputation, kTrap, kDummy };
enum class Colour { kGreen, kBlue, kGray, kRed };

const char* to_string(Role r);
const char* to_string(Colour c);

struct DTGraph {
  GraphTopology topology;
  /// Primary node -> base vertex.
  std::map<int, int> base_of;
  /// Dot node -> base edge endpoints.
  std::map<int, std::pair<int, int>> dot_of;
  std::map<int, Role> role;
  std::map<int, Colour> colour;
  std::vector<int> deleted;
  /// Base vertex -> its computation, trap and dummy primaries.
  std::map<int, int> C, T, D;

  std::vector<int> nodes_with(Role r) const;
};

/// Dotted triple-graph with a uniformly random colour permutation per base
/// vertex drawn through `chooser` (tag "colour").
DTGraph dotted_triple_graph(const GraphTopology& base, Chooser& chooser);

/// Computation nodes of `dt` with the edges among them. Inputs and outputs
/// are the computation primaries of the base inputs and outputs. When the
/// result is a path from its input, the flow runs along the path.
GraphTopology computation_subgraph(const DTGraph& dt);

struct FlowPlan {
  std::vector<int> order;  // non-output nodes in measurement order
  std::map<int, int> x_dep;  // v -> u with f(u) = v
  std::map<int, std::vector<int>> z_deps;  // v -> {u : v in N(f(u)), u != v}
};

/// Requires topology.flow to cover every non-output node.
FlowPlan plan_flow(const GraphTopology& topology);

/// Parities s^X(v), s^Z(v) of the recorded results; throws
/// MissingDependencyError if a dependency has no result yet.
std::pair<int, int> signal_parities(int node, const FlowPlan& plan, const std::map<int, int>& results);

/// (-1)^{s^X} phi + pi s^Z.
AngleIndex corrected_angle(int node, AngleIndex phi, const FlowPlan& plan, const std::map<int, int>& results);

/// theta_v + pi * (parity of dummy-neighbour bits) for every non-dummy node.
std::map<int, AngleIndex> dummy_phase_update(const std::map<int, AngleIndex>& theta,
                                             const std::map<int, int>& dummies, const GraphTopology& topology);

nlohmann::json to_json(const GraphTopology& g);
GraphTopology graph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DTGraph& g);

}  // namespace dqc
