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
#include <set>

#include "dqc/errors.hpp"
#include "dqc/harness.hpp"

namespace dqc {

namespace {

DensityState test_qubit() {
  Matrix m(2, 2);
  m << 0.7, cplx(0.1, 0.25), cplx(0.1, -0.25), 0.3;
  return DensityState({2}, m);
}

// theta rebuilt from the transcript alone: sum (-1)^s theta + r pi.
AngleIndex theta_from_transcript(const Transcript& t, AngleIndex theta0) {
  std::map<std::string, std::map<std::string, int>> byparty;
  std::vector<std::string> order;
  int s_index = 0;
  std::map<int, int> s_values;
  for (const auto& m : t.messages()) {
    if (m.tag == "dbsp_theta" || m.tag == "dbsp_r") {
      if (!byparty.count(m.sender)) order.push_back(m.sender);
      byparty[m.sender][m.tag] = static_cast<int>(m.value);
    } else if (m.tag == "dbsp_s") {
      s_values[s_index++] = static_cast<int>(m.value);
    }
  }
  int total = theta0.value();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& v = byparty[order[i]];
    const int sign = s_values.at(static_cast<int>(i)) ? -1 : 1;
    total += sign * v.at("dbsp_theta") + 4 * v.at("dbsp_r");
  }
  return AngleIndex(total);
}

double rotated_deviation(const DensityState& out, const DensityState& rho, AngleIndex theta) {
  const Matrix2 p = gates::phase(theta);
  return max_abs_diff(out.matrix(), p * rho.matrix() * p.adjoint());
}

}  // namespace

CheckReport check_dbsp_formula(std::uint64_t seed) {
  const DensityState rho = test_qubit();
  double dev = 0;
  std::uint64_t branches = 0;
  for (Setting st : {Setting::kPS, Setting::kRM}) {
    for (int k = 1; k <= 2; ++k) {
      for_each_branch([&](Chooser& c) {
        const DbspResult r = run_dbsp(st, 0, rho, k, c);
        const AngleIndex theta = theta_from_transcript(r.transcript, AngleIndex::zero());
        dev = std::max(dev, rotated_deviation(r.output, rho, theta));
        if (theta != r.theta) dev = std::max(dev, 1.0);
        ++branches;
      });
    }
  }
  for (int t0 = 0; t0 < 8; ++t0) {
    for_each_branch([&](Chooser& c) {
      const DbspResult r = run_dbsp_mixed({Setting::kPS, Setting::kRM}, rho, c, AngleIndex(t0));
      const AngleIndex theta = theta_from_transcript(r.transcript, AngleIndex(t0));
      dev = std::max(dev, rotated_deviation(r.output, rho, theta));
      if (theta != r.theta) dev = std::max(dev, 1.0);
      ++branches;
    });
  }
  return make_report("dbsp.formula", "dbsp.rotation-angle", dev, kAlgebraTolerance, branches, seed);
}

CheckReport check_dbsp_secrecy(std::uint64_t seed) {
  const DensityState rho = test_qubit();
  double dev = 0;
  std::uint64_t branches = 0;
  std::vector<std::vector<Setting>> configs;
  for (int k = 2; k <= 3; ++k) {
    configs.emplace_back(static_cast<std::size_t>(k), Setting::kPS);
    configs.emplace_back(static_cast<std::size_t>(k), Setting::kRM);
  }
  configs.push_back({Setting::kPS, Setting::kRM, Setting::kPS});
  for (const auto& kinds : configs) {
    const bool mixed = std::set<Setting>(kinds.begin(), kinds.end()).size() > 1;
    std::vector<std::pair<double, DbspResult>> runs;
    for_each_branch([&](Chooser& c) {
      runs.emplace_back(c.weight(), mixed ? run_dbsp_mixed(kinds, rho, c)
                                          : run_dbsp(kinds[0], 0, rho, static_cast<int>(kinds.size()), c));
      ++branches;
    });
    // Leave one client out; everyone else pools their view with the server.
    for (std::size_t hidden = 0; hidden < kinds.size(); ++hidden) {
      std::map<std::string, std::array<double, 8>> joint;
      for (const auto& [p, r] : runs) {
        std::string key;
        for (const auto& rec : r.records) {
          key += std::to_string(rec.s) + ",";
          if (static_cast<std::size_t>(rec.client) != hidden) {
            key += std::to_string(rec.theta.value()) + "," + std::to_string(rec.r) + ";";
          }
        }
        auto& row = joint.try_emplace(key, std::array<double, 8>{}).first->second;
        row[static_cast<std::size_t>(r.theta.value())] += p;
      }
      for (const auto& [_, row] : joint) {
        double total = 0;
        for (double x : row) total += x;
        for (double x : row) dev = std::max(dev, std::abs(x / total - 0.125));
      }
    }
  }
  return make_report("dbsp.secrecy", "dbsp.theta-uniform-given-coalition", dev, kEnumerationTolerance, branches,
                     seed);
}

CheckReport check_hi_gadget(std::uint64_t seed) {
  const DensityState rho = test_qubit();
  double dev = 0;
  std::uint64_t branches = 0;
  nlohmann::json binding = nlohmann::json::object();
  for (int b = 0; b < 2; ++b) {
    // Which W explains the PS gadget, decided from the output alone.
    double fit[2] = {0, 0};
    const Matrix2 candidates[2] = {Matrix2::Identity(), gates::h()};
    for (Setting st : {Setting::kPS, Setting::kRM}) {
      for_each_branch([&](Chooser& c) {
        const HiResult r = run_hi_gadget(st, b, rho, c);
        const Matrix2 pauli = hi_gadget_pauli(b, r.r, r.s);
        for (int w = 0; w < 2; ++w) {
          const Matrix2 t = pauli * candidates[w];
          fit[w] = std::max(fit[w], max_abs_diff(r.output.matrix(), t * rho.matrix() * t.adjoint()));
        }
        const Matrix2 t = pauli * hi_gadget_w(b);
        dev = std::max(dev, max_abs_diff(r.output.matrix(), t * rho.matrix() * t.adjoint()));
        ++branches;
      });
    }
    binding[std::to_string(b)] = fit[1] < fit[0] ? "H" : "I";
  }
  auto rep = make_report("hi.gadget", "gadget.pauli-times-w", dev, kAlgebraTolerance, branches, seed);
  rep.details["binding"] = binding;
  return rep;
}

CheckReport check_dt_graph(int n_graphs, std::uint64_t seed) {
  std::mt19937_64 rng(derive_seed(seed, "dtgraph"));
  int violations = 0;
  for (int t = 0; t < n_graphs; ++t) {
    GraphTopology base;
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int v = 1; v <= n; ++v) base.nodes.push_back(v);
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        if (rng() % 2) base.edges.emplace_back(a, b);
      }
    }
    SamplingChooser chooser(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const DTGraph dt = dotted_triple_graph(base, chooser);
    const auto nv = base.nodes.size(), ne = base.edges.size();
    if (dt.topology.nodes.size() != 3 * nv + 9 * ne) ++violations;
    if (dt.topology.edges.size() != 18 * ne) ++violations;
    for (int trap : dt.nodes_with(Role::kTrap)) {
      for (int w : dt.topology.neighbours(trap)) {
        if (dt.role.at(w) != Role::kDummy) ++violations;
      }
    }
    for (int v : base.nodes) {
      std::set<Colour> seen;
      int count = 0;
      for (const auto& [p, bv] : dt.base_of) {
        if (bv != v) continue;
        seen.insert(dt.colour.at(p));
        ++count;
      }
      if (count != 3 || seen != std::set<Colour>{Colour::kGreen, Colour::kBlue, Colour::kGray}) ++violations;
    }
  }
  return make_report("dtgraph", "dotted-triple-graph.invariants", violations, 0.0,
                     static_cast<std::uint64_t>(n_graphs), seed, "trials");
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t n) {
  if (n == 0) return {0.0, 1.0};
  const double z = 1.96, nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  const double denom = 1 + z * z / nn;
  const double centre = (p + z * z / (2 * nn)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / nn + z * z / (4 * nn * nn)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

CheckReport check_traps(const std::string& protocol, const std::string& attack, int n_trials, std::uint64_t seed) {
  if (protocol != "vbdqc-ps" && protocol != "vbdqc-rm" && protocol != "dmpqc") {
    throw DqcError("unknown trap protocol '" + protocol + "'");
  }
  const GraphTopology base = build_linear_cluster(2);
  const std::map<int, AngleIndex> angles = {{1, AngleIndex(2)}, {2, AngleIndex(5)}};
  const DensityState input = DensityState::from_qubit_vector(plus_state(AngleIndex(1)));
  auto run = [&](Chooser& c) {
    auto adv = make_adversary(attack, FixedReportAttack::kKnownTrap);
    if (protocol == "dmpqc") {
      DmpqcInstance inst{base, {Setting::kPS, Setting::kRM}, angles, {}, input};
      return run_dmpqc(inst, c, adv.get()).accepted;
    }
    const VbdqcInstance inst{base, angles, input};
    return run_vbdqc(protocol == "vbdqc-ps" ? Setting::kPS : Setting::kRM, inst, c, adv.get()).accepted;
  };
  EnumerateOptions opt;
  opt.seed = derive_seed(seed, protocol + "/" + attack);
  opt.enumerate_if = attack == "honest" ? enumerate_labels({"m", "trap_r", "colour"})
                                        : enumerate_labels({"m", "trap_r", "attack_position"});
  double abort = 0;
  std::uint64_t branches = 0;
  for_each_branch(
      [&](Chooser& c) {
        if (!run(c)) abort += c.weight();
        ++branches;
      },
      opt);
  std::uint64_t aborted = 0;
  for (int t = 0; t < n_trials; ++t) {
    SamplingChooser c(derive_seed(opt.seed, static_cast<std::uint64_t>(t)));
    if (!run(c)) ++aborted;
  }
  double dev;
  if (attack == "honest") {
    dev = abort;
  } else if (attack == "report") {
    dev = std::abs(abort - 0.5);
  } else {
    dev = abort > kEnumerationTolerance ? 0.0 : 1.0;
  }
  auto rep = make_report("traps." + protocol + "." + attack, "traps.detect-deviation", dev, kEnumerationTolerance,
                         branches, seed);
  rep.details["abort_rate_exact"] = abort;
  rep.details["trials"] = n_trials;
  rep.details["aborted_trials"] = aborted;
  const auto [lo, hi] = wilson_interval(aborted, static_cast<std::uint64_t>(n_trials));
  rep.details["abort_rate_interval"] = {lo, hi};
  return rep;
}

}  // namespace dqc
