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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "dqc/chooser.hpp"
#include "dqc/errors.hpp"
#include "dqc/graphs.hpp"

namespace dqc {
namespace {

TEST(Linear, PathWithFlow) {
  const GraphTopology g = build_linear_cluster(4);
  EXPECT_EQ(g.nodes.size(), 4u);
  EXPECT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(g.flow.at(1), 2);
  EXPECT_EQ(g.inputs, std::vector<int>{1});
  EXPECT_EQ(g.outputs, std::vector<int>{4});
}

TEST(Brickwork, TwoByFiveHasTenEdges) {
  const GraphTopology g = build_brickwork(2, 5);
  EXPECT_EQ(g.nodes.size(), 10u);
  // 8 horizontal plus the two rungs of the single brick.
  EXPECT_EQ(g.edges.size(), 10u);
  EXPECT_EQ(g.inputs.size(), 2u);
  EXPECT_EQ(g.outputs.size(), 2u);
}

TEST(Validate, RejectsBadGraphs) {
  GraphTopology g;
  g.nodes = {1, 2};
  g.edges = {{1, 3}};
  EXPECT_THROW(g.validate(), GraphError);
  g.edges = {{1, 1}};
  EXPECT_THROW(g.validate(), GraphError);
  g.nodes = {1, 1};
  g.edges = {};
  EXPECT_THROW(g.validate(), GraphError);
}

TEST(Flow, PlanOnLineHasXChainAndZFromTwoBack) {
  const FlowPlan p = plan_flow(build_linear_cluster(4));
  EXPECT_EQ(p.order, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(p.x_dep.at(2), 1);
  EXPECT_EQ(p.z_deps.at(3), std::vector<int>{1});
  const std::map<int, int> res = {{1, 1}, {2, 0}};
  // Node 3: sX from 2 (0), sZ from 1 (1), so (-1)^0 * 1 + pi = 5.
  EXPECT_EQ(corrected_angle(3, AngleIndex(1), p, res).value(), 5);
  EXPECT_THROW(signal_parities(3, p, {{2, 0}}), MissingDependencyError);
}

TEST(DottedTriple, SingleEdgeCounts) {
  SamplingChooser c(1);
  const DTGraph dt = dotted_triple_graph(build_linear_cluster(2), c);
  EXPECT_EQ(dt.topology.nodes.size(), 15u);
  EXPECT_EQ(dt.topology.edges.size(), 18u);
  EXPECT_EQ(dt.nodes_with(Role::kComputation).size(), 3u);
  EXPECT_EQ(dt.nodes_with(Role::kTrap).size(), 3u);
  EXPECT_EQ(dt.nodes_with(Role::kDummy).size(), 9u);
}

TEST(DottedTriple, TrapsOnlyTouchDummies) {
  SamplingChooser c(2);
  const DTGraph dt = dotted_triple_graph(build_linear_cluster(3), c);
  for (auto [a, b] : dt.topology.edges) {
    if (dt.role.at(a) == Role::kTrap) EXPECT_EQ(dt.role.at(b), Role::kDummy);
    if (dt.role.at(b) == Role::kTrap) EXPECT_EQ(dt.role.at(a), Role::kDummy);
  }
}

TEST(DottedTriple, ComputationSubgraphOfPathIsSubdividedPath) {
  SamplingChooser c(3);
  const DTGraph dt = dotted_triple_graph(build_linear_cluster(3), c);
  const GraphTopology comp = computation_subgraph(dt);
  EXPECT_EQ(comp.nodes.size(), 5u);
  EXPECT_EQ(comp.edges.size(), 4u);
  EXPECT_EQ(comp.flow.size(), 4u);
}

TEST(DottedTriple, EmptyBase) {
  SamplingChooser c(4);
  const DTGraph dt = dotted_triple_graph(GraphTopology{}, c);
  EXPECT_TRUE(dt.topology.nodes.empty());
}

TEST(DummyPhase, AddsPiPerOneNeighbour) {
  GraphTopology g;
  g.nodes = {1, 2, 3};
  g.edges = {{1, 2}, {2, 3}};
  const auto out = dummy_phase_update({{1, AngleIndex(1)}, {3, AngleIndex(2)}}, {{2, 1}}, g);
  EXPECT_EQ(out.at(1).value(), 5);
  EXPECT_EQ(out.at(3).value(), 6);
}

TEST(Json, TopologyRoundTrip) {
  const GraphTopology g = build_brickwork(2, 5);
  const GraphTopology back = graph_from_json(to_json(g));
  EXPECT_EQ(back.nodes, g.nodes);
  EXPECT_EQ(back.edges, g.edges);
  EXPECT_EQ(back.flow, g.flow);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"nodes": [1]})")), GraphError);
}

}  // namespace
}  // namespace dqc
