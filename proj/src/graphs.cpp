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

#include "dqc/graphs.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <set>
#include <string>

#include "dqc/errors.hpp"

namespace dqc {

bool GraphTopology::has_node(int v) const { return std::find(nodes.begin(), nodes.end(), v) != nodes.end(); }

std::vector<int> GraphTopology::neighbours(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  return out;
}

bool GraphTopology::is_output(int v) const {
  return std::find(outputs.begin(), outputs.end(), v) != outputs.end();
}

bool GraphTopology::is_input(int v) const { return std::find(inputs.begin(), inputs.end(), v) != inputs.end(); }

void GraphTopology::validate() const {
  std::set<int> ids(nodes.begin(), nodes.end());
  if (ids.size() != nodes.size()) throw GraphError("duplicate node ids");
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    if (a == b) throw GraphError("self-loop on node " + std::to_string(a));
    if (!ids.count(a) || !ids.count(b)) throw GraphError("edge references a missing node");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) throw GraphError("duplicate edge");
  }
  for (int v : inputs) {
    if (!ids.count(v)) throw GraphError("input is not a node");
  }
  for (int v : outputs) {
    if (!ids.count(v)) throw GraphError("output is not a node");
  }
  if (nodes.size() > 1) {
    for (int v : inputs) {
      if (is_output(v)) throw GraphError("input and output sets overlap");
    }
  }
  for (const auto& [u, fu] : flow) {
    if (!ids.count(u) || !ids.count(fu)) throw GraphError("flow references a missing node");
  }
}

GraphTopology build_linear_cluster(int n) {
  if (n < 1) throw GraphError("linear cluster needs n >= 1");
  GraphTopology g;
  for (int i = 1; i <= n; ++i) g.nodes.push_back(i);
  for (int i = 1; i < n; ++i) {
    g.edges.emplace_back(i, i + 1);
    g.flow[i] = i + 1;
  }
  g.inputs = {1};
  g.outputs = {n};
  return g;
}

GraphTopology build_brickwork(int rows, int cols) {
  if (rows < 1 || cols < 2) throw GraphError("brickwork needs rows >= 1 and cols >= 2");
  GraphTopology g;
  auto id = [cols](int i, int j) { return i * cols + j + 1; };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) g.nodes.push_back(id(i, j));
  }
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j + 1 < cols; ++j) {
      g.edges.emplace_back(id(i, j), id(i, j + 1));
      g.flow[id(i, j)] = id(i, j + 1);
    }
  }
  // 1-indexed row a and column c: bricks start at c = 3 mod 8 on odd rows and
  // c = 7 mod 8 on even rows, each with verticals at columns c and c + 2.
  for (int a = 1; a < rows; ++a) {
    for (int c = 1; c + 2 <= cols; ++c) {
      const bool odd_start = (c % 8 == 3) && (a % 2 == 1);
      const bool even_start = (c % 8 == 7) && (a % 2 == 0);
      if (!odd_start && !even_start) continue;
      g.edges.emplace_back(id(a - 1, c - 1), id(a, c - 1));
      g.edges.emplace_back(id(a - 1, c + 1), id(a, c + 1));
    }
  }
  for (int i = 0; i < rows; ++i) {
    g.inputs.push_back(id(i, 0));
    g.outputs.push_back(id(i, cols - 1));
  }
  return g;
}

const char* to_string(Role r) {
  switch (r) {
    case Role::kComputation:
      return "computation";
    case Role::kTrap:
      return "trap";
    case Role::kDummy:
      return "dummy";
  }
  return "?";
}

const char* to_string(Colour c) {
  switch (c) {
    case Colour::kGreen:
      return "green";
    case Colour::kBlue:
      return "blue";
    case Colour::kGray:
      return "gray";
    case Colour::kRed:
      return "red";
  }
  return "?";
}

std::vector<int> DTGraph::nodes_with(Role r) const {
  std::vector<int> out;
  for (int v : topology.nodes) {
    if (role.at(v) == r) out.push_back(v);
  }
  return out;
}

DTGraph dotted_triple_graph(const GraphTopology& base, Chooser& chooser) {
  base.validate();
  static const std::array<std::array<Colour, 3>, 6> kPerms = {{
      {Colour::kGreen, Colour::kBlue, Colour::kGray},
      {Colour::kGreen, Colour::kGray, Colour::kBlue},
      {Colour::kBlue, Colour::kGreen, Colour::kGray},
      {Colour::kBlue, Colour::kGray, Colour::kGreen},
      {Colour::kGray, Colour::kGreen, Colour::kBlue},
      {Colour::kGray, Colour::kBlue, Colour::kGreen},
  }};
  DTGraph dt;
  std::map<int, int> index_of;
  for (std::size_t i = 0; i < base.nodes.size(); ++i) index_of[base.nodes[i]] = static_cast<int>(i);
  auto primary = [&](int v, int k) { return 3 * index_of.at(v) + k; };

  for (int v : base.nodes) {
    const auto& perm = kPerms[pick_uniform(chooser, secret("colour"), 6)];
    for (int k = 0; k < 3; ++k) {
      const int p = primary(v, k);
      dt.topology.nodes.push_back(p);
      dt.base_of[p] = v;
      dt.colour[p] = perm[k];
      switch (perm[k]) {
        case Colour::kGreen:
          dt.role[p] = Role::kTrap;
          dt.T[v] = p;
          break;
        case Colour::kBlue:
          dt.role[p] = Role::kDummy;
          dt.D[v] = p;
          dt.deleted.push_back(p);
          break;
        default:
          dt.role[p] = Role::kComputation;
          dt.C[v] = p;
          break;
      }
    }
  }
  int next = 3 * static_cast<int>(base.nodes.size());
  for (const auto& [u, v] : base.edges) {
    for (int k = 0; k < 3; ++k) {
      for (int l = 0; l < 3; ++l) {
        const int a = primary(u, k), b = primary(v, l), dot = next++;
        dt.topology.nodes.push_back(dot);
        dt.dot_of[dot] = {u, v};
        dt.topology.edges.emplace_back(a, dot);
        dt.topology.edges.emplace_back(dot, b);
        const Colour c = dt.colour[a] == dt.colour[b] ? dt.colour[a] : Colour::kRed;
        dt.colour[dot] = c;
        if (c == Colour::kBlue) {
          dt.role[dot] = Role::kTrap;
        } else if (c == Colour::kGray) {
          dt.role[dot] = Role::kComputation;
        } else {
          dt.role[dot] = Role::kDummy;
          dt.deleted.push_back(dot);
        }
      }
    }
  }
  for (int v : base.inputs) dt.topology.inputs.push_back(dt.C.at(v));
  for (int v : base.outputs) dt.topology.outputs.push_back(dt.C.at(v));
  std::sort(dt.deleted.begin(), dt.deleted.end());
  return dt;
}

GraphTopology computation_subgraph(const DTGraph& dt) {
  GraphTopology g;
  g.nodes = dt.nodes_with(Role::kComputation);
  std::set<int> comp(g.nodes.begin(), g.nodes.end());
  for (const auto& [a, b] : dt.topology.edges) {
    if (comp.count(a) && comp.count(b)) g.edges.emplace_back(a, b);
  }
  g.inputs = dt.topology.inputs;
  g.outputs = dt.topology.outputs;
  // Flow along a path starting at the single input.
  if (g.inputs.size() == 1 && g.edges.size() + 1 == g.nodes.size()) {
    int prev = -1, cur = g.inputs.front();
    std::set<int> visited = {cur};
    while (true) {
      int nxt = -1, count = 0;
      for (int w : g.neighbours(cur)) {
        if (w != prev) {
          nxt = w;
          ++count;
        }
      }
      if (count != 1 || visited.count(nxt)) break;
      g.flow[cur] = nxt;
      visited.insert(nxt);
      prev = cur;
      cur = nxt;
    }
    if (visited.size() != g.nodes.size()) g.flow.clear();
  }
  return g;
}

FlowPlan plan_flow(const GraphTopology& topology) {
  FlowPlan plan;
  std::vector<int> measured;
  for (int v : topology.nodes) {
    if (topology.is_output(v)) continue;
    if (!topology.flow.count(v)) throw GraphError("node " + std::to_string(v) + " has no flow successor");
    measured.push_back(v);
  }
  std::map<int, std::set<int>> before;  // v -> nodes that must precede v
  for (int u : measured) {
    const int fu = topology.flow.at(u);
    plan.x_dep[fu] = u;
    before[fu].insert(u);
    for (int w : topology.neighbours(fu)) {
      if (w == u) continue;
      plan.z_deps[w].push_back(u);
      before[w].insert(u);
    }
  }
  // Kahn's algorithm, preferring the listed node order.
  std::map<int, int> rank;
  for (std::size_t i = 0; i < topology.nodes.size(); ++i) rank[topology.nodes[i]] = static_cast<int>(i);
  std::set<std::pair<int, int>> ready;
  std::map<int, int> pending;
  std::set<int> is_measured(measured.begin(), measured.end());
  for (int v : measured) {
    int n = 0;
    for (int u : before[v]) n += is_measured.count(u) ? 1 : 0;
    pending[v] = n;
    if (n == 0) ready.insert({rank[v], v});
  }
  while (!ready.empty()) {
    const int v = ready.begin()->second;
    ready.erase(ready.begin());
    plan.order.push_back(v);
    for (int w : measured) {
      if (before[w].count(v) && --pending[w] == 0) ready.insert({rank[w], w});
    }
  }
  if (plan.order.size() != measured.size()) throw GraphError("flow constraints are cyclic");
  return plan;
}

std::pair<int, int> signal_parities(int node, const FlowPlan& plan, const std::map<int, int>& results) {
  auto result = [&](int u) {
    auto it = results.find(u);
    if (it == results.end()) {
      throw MissingDependencyError("node " + std::to_string(node) + " depends on unmeasured node " +
                                   std::to_string(u));
    }
    return it->second & 1;
  };
  int sx = 0, sz = 0;
  if (auto it = plan.x_dep.find(node); it != plan.x_dep.end()) sx = result(it->second);
  if (auto it = plan.z_deps.find(node); it != plan.z_deps.end()) {
    for (int u : it->second) sz ^= result(u);
  }
  return {sx, sz};
}

AngleIndex corrected_angle(int node, AngleIndex phi, const FlowPlan& plan, const std::map<int, int>& results) {
  const auto [sx, sz] = signal_parities(node, plan, results);
  return phi.negated_if(sx).plus_pi_if(sz);
}

std::map<int, AngleIndex> dummy_phase_update(const std::map<int, AngleIndex>& theta,
                                             const std::map<int, int>& dummies, const GraphTopology& topology) {
  std::map<int, AngleIndex> out = theta;
  for (auto& [v, t] : out) {
    if (dummies.count(v)) continue;
    int parity = 0;
    for (int w : topology.neighbours(v)) {
      if (auto it = dummies.find(w); it != dummies.end()) parity ^= it->second & 1;
    }
    t = t.plus_pi_if(parity);
  }
  return out;
}

nlohmann::json to_json(const GraphTopology& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (int v : g.nodes) nodes.push_back({{"id", v}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  nlohmann::json j = {{"nodes", nodes}, {"edges", edges}, {"input", g.inputs}, {"output", g.outputs}};
  if (!g.flow.empty()) {
    nlohmann::json flow = nlohmann::json::array();
    for (const auto& [u, f] : g.flow) flow.push_back({u, f});
    j["flow"] = flow;
  }
  return j;
}

GraphTopology graph_from_json(const nlohmann::json& j) {
  GraphTopology g;
  try {
    for (const auto& n : j.at("nodes")) g.nodes.push_back(n.is_object() ? n.at("id").get<int>() : n.get<int>());
    for (const auto& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("input")) g.inputs = j.at("input").get<std::vector<int>>();
    if (j.contains("output")) g.outputs = j.at("output").get<std::vector<int>>();
    if (j.contains("flow")) {
      for (const auto& e : j.at("flow")) g.flow[e.at(0).get<int>()] = e.at(1).get<int>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed graph JSON: ") + e.what());
  }
  g.validate();
  return g;
}

nlohmann::json to_json(const DTGraph& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (int v : g.topology.nodes) {
    nlohmann::json n = {{"id", v}, {"role", to_string(g.role.at(v))}, {"colour", to_string(g.colour.at(v))}};
    if (auto it = g.base_of.find(v); it != g.base_of.end()) n["base"] = it->second;
    if (auto it = g.dot_of.find(v); it != g.dot_of.end()) n["dot_of"] = {it->second.first, it->second.second};
    nodes.push_back(std::move(n));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : g.topology.edges) edges.push_back({a, b});
  nlohmann::json corr = nlohmann::json::array();
  for (const auto& [v, c] : g.C) corr.push_back({{"base", v}, {"C", c}, {"T", g.T.at(v)}, {"D", g.D.at(v)}});
  return {{"nodes", nodes},
          {"edges", edges},
          {"input", g.topology.inputs},
          {"output", g.topology.outputs},
          {"deleted", g.deleted},
          {"correspondence", corr}};
}

}  // namespace dqc
