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

#include <cmath>
#include <functional>

#include "dqc/distribution.hpp"
#include "dqc/errors.hpp"
#include "dqc/harness.hpp"
#include "protocol_util.hpp"

namespace dqc {

namespace {

using BdqcRunner = std::function<ProtocolResult(const BdqcInstance&, Chooser&, Adversary*)>;

BdqcRunner bdqc_runner(const std::string& name) {
  if (name == "bfk") return run_bfk09;
  if (name == "mf13") return run_mf13;
  if (name == "tau") return run_tau;
  throw DqcError("unknown blind protocol '" + name + "'");
}

DensityState random_pure(int n_qubits, std::mt19937_64& rng) {
  const Matrix u = random_unitary(1 << n_qubits, rng);
  return DensityState::from_qubit_vector(u.col(0));
}

// A fixed, full-rank single-qubit state.
DensityState mixed_qubit() {
  Matrix m(2, 2);
  m << 0.65, cplx(0.15, -0.2), cplx(0.15, 0.2), 0.35;
  return DensityState({2}, m);
}

std::map<int, AngleIndex> random_angles(const GraphTopology& g, std::mt19937_64& rng) {
  std::map<int, AngleIndex> out;
  for (int v : g.nodes) {
    if (!g.is_output(v)) out[v] = AngleIndex(static_cast<int>(rng() % 8));
  }
  return out;
}

std::string outcome_record(const ProtocolResult& r) { return (r.accepted ? "A" : "R") + r.outcome_key(); }

}  // namespace

Pattern subdivided_path_pattern(const GraphTopology& base, const std::map<int, AngleIndex>& angles,
                                const DensityState& input) {
  const auto path = detail::path_order(base);
  Pattern p;
  p.topology = build_linear_cluster(2 * static_cast<int>(path.size()) - 1);
  p.input = input;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (auto it = angles.find(path[i]); it != angles.end()) p.angles[2 * static_cast<int>(i) + 1] = it->second;
  }
  return p;
}

CheckReport check_bfk_correctness(std::uint64_t seed) {
  std::mt19937_64 rng(derive_seed(seed, "bfk-correctness"));
  std::vector<GraphTopology> graphs;
  for (int n = 1; n <= 4; ++n) graphs.push_back(build_linear_cluster(n));
  graphs.push_back(build_brickwork(2, 5));
  double dev = 0;
  std::uint64_t branches = 0;
  for (const auto& g : graphs) {
    BdqcInstance inst{g, random_angles(g, rng), random_pure(static_cast<int>(g.inputs.size()), rng)};
    const Matrix ideal = oracle_circuit({g, inst.angles, inst.input, {}});
    for (const char* name : {"bfk", "mf13", "tau"}) {
      const auto runner = bdqc_runner(name);
      EnumerateOptions opt;
      opt.enumerate_if = enumerate_outcomes;
      opt.seed = derive_seed(seed, name);
      for_each_branch(
          [&](Chooser& c) {
            const ProtocolResult r = runner(inst, c, nullptr);
            dev = std::max(dev, trace_norm_half(r.output - ideal));
            ++branches;
          },
          opt);
    }
  }
  return make_report("bfk.correctness", "delegated-output.matches-circuit", dev, kAlgebraTolerance, branches, seed);
}

CheckReport check_blindness(const std::string& protocol, std::uint64_t seed) {
  const auto runner = bdqc_runner(protocol);
  std::mt19937_64 rng(derive_seed(seed, "blindness"));
  struct Case {
    GraphTopology g;
    std::vector<std::map<int, AngleIndex>> computations;
  };
  std::vector<Case> cases;
  {
    Case c{build_linear_cluster(2), {}};
    for (int k = 0; k < 8; ++k) c.computations.push_back({{1, AngleIndex(k)}});
    cases.push_back(c);
  }
  {
    Case c{build_linear_cluster(3), {}};
    for (auto [a, b] : {std::pair{0, 0}, {1, 3}, {4, 7}, {2, 5}}) c.computations.push_back({{1, AngleIndex(a)}, {2, AngleIndex(b)}});
    cases.push_back(c);
  }
  double dev = 0;
  std::uint64_t branches = 0;
  std::map<int, double> delta_marginal;
  for (const auto& cs : cases) {
    const DensityState input = random_pure(1, rng);
    std::vector<CqDistribution> views;
    for (const auto& angles : cs.computations) {
      CqDistribution view;
      const BdqcInstance inst{cs.g, angles, input};
      for_each_branch([&](Chooser& c) {
        const ProtocolResult r = runner(inst, c, nullptr);
        view.add(r.server_key, c.weight(), r.server_state);
        ++branches;
        if (cs.g.nodes.size() == 2 && angles.at(1) == AngleIndex::zero()) {
          for (const auto& m : r.transcript.messages()) {
            if (m.tag == "delta") delta_marginal[static_cast<int>(m.value)] += c.weight();
          }
        }
      });
      views.push_back(std::move(view));
    }
    for (std::size_t i = 1; i < views.size(); ++i) dev = std::max(dev, CqDistribution::distance(views[0], views[i]));
  }
  auto rep = make_report("blindness." + protocol, "server-view.independent-of-computation", dev,
                         kEnumerationTolerance, branches, seed);
  if (!delta_marginal.empty()) {
    double marg = 0;
    for (int k = 0; k < 8; ++k) marg = std::max(marg, std::abs(delta_marginal[k] - 0.125));
    rep.details["delta_marginal_deviation"] = marg;
    rep.deviation = std::max(rep.deviation, marg);
    rep.pass = rep.deviation <= rep.tolerance;
  }
  return rep;
}

namespace {

template <class RunA, class RunB>
double distribution_distance(RunA run_a, RunB run_b, const EnumerateOptions& opt, std::uint64_t& branches) {
  CqDistribution a, b;
  for_each_branch([&](Chooser& c) { run_a(c, a); ++branches; }, opt);
  for_each_branch([&](Chooser& c) { run_b(c, b); ++branches; }, opt);
  return CqDistribution::distance(a, b);
}

}  // namespace

CheckReport check_equivalence(const std::string& pair, std::uint64_t seed) {
  std::uint64_t branches = 0;
  double dev = 0;
  EnumerateOptions opt;
  opt.seed = derive_seed(seed, pair);
  const DensityState rho = mixed_qubit();
  if (pair == "bfk-mf13" || pair == "bfk-tau") {
    const auto other = bdqc_runner(pair == "bfk-mf13" ? "mf13" : "tau");
    // Every secret and outcome is expanded.
    std::mt19937_64 rng(opt.seed);
    for (int n = 1; n <= 3; ++n) {
      const GraphTopology g = build_linear_cluster(n);
      const BdqcInstance inst{g, random_angles(g, rng), rho};
      auto record = [&](const BdqcRunner& run) {
        return [&, run](Chooser& c, CqDistribution& d) {
          const ProtocolResult r = run(inst, c, nullptr);
          d.add(outcome_record(r), c.weight(), r.output);
        };
      };
      dev = std::max(dev, distribution_distance(record(run_bfk09), record(other), opt, branches));
    }
  } else if (pair == "dbsp") {
    for (int k = 1; k <= 2; ++k) {
      auto record = [&](Setting st) {
        return [&, st](Chooser& c, CqDistribution& d) {
          const DbspResult r = run_dbsp(st, 0, rho, k, c);
          d.add(std::to_string(r.theta.value()), c.weight(), r.output.matrix());
        };
      };
      dev = std::max(dev, distribution_distance(record(Setting::kPS), record(Setting::kRM), opt, branches));
    }
  } else if (pair == "hi") {
    for (int b = 0; b < 2; ++b) {
      auto record = [&](Setting st) {
        return [&, st](Chooser& c, CqDistribution& d) {
          const HiResult r = run_hi_gadget(st, b, rho, c);
          d.add(std::to_string(r.r) + std::to_string(r.s), c.weight(), r.output.matrix());
        };
      };
      dev = std::max(dev, distribution_distance(record(Setting::kPS), record(Setting::kRM), opt, branches));
    }
  } else if (pair == "vbdqc") {
    opt.enumerate_if = enumerate_labels({"m", "input", "colour"});
    for (int n = 1; n <= 2; ++n) {
      const VbdqcInstance inst{build_linear_cluster(n), {{1, AngleIndex(3)}, {2, AngleIndex(6)}}, rho};
      auto record = [&](Setting st) {
        return [&, st](Chooser& c, CqDistribution& d) {
          const ProtocolResult r = run_vbdqc(st, inst, c);
          d.add(outcome_record(r), c.weight(), r.output);
        };
      };
      dev = std::max(dev, distribution_distance(record(Setting::kPS), record(Setting::kRM), opt, branches));
    }
  } else {
    throw DqcError("unknown equivalence pair '" + pair + "'");
  }
  return make_report("equivalence." + pair, "ps-rm.observable-distributions-equal", dev, kEnumerationTolerance,
                     branches, seed);
}

}  // namespace dqc
