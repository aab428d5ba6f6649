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

#include "dqc/errors.hpp"
#include "dqc/protocols.hpp"
#include "protocol_util.hpp"

namespace dqc {

using detail::Pad;

namespace {

struct Run {
  detail::DtLayout L;
  FactoredState state;
  std::map<int, QubitId> q;
  std::map<int, Pad> pads;
  std::map<int, int> dummies;
};

Vector2 basis_state(int d) { return d ? Vector2(0, 1) : Vector2(1, 0); }

// The input carries P(theta) X^a; returns its node.
int encrypt_input(Run& run, const VbdqcInstance& inst, Chooser& chooser) {
  if (inst.input.total_dim() != 2) throw DimensionError("input must be a single qubit");
  const int v = run.L.comp.inputs.front();
  const auto ids = run.state.add_block(pick_ensemble_member(inst.input, chooser));
  const AngleIndex theta(pick_uniform(chooser, secret("theta"), 8));
  const int a = pick_bit(chooser, secret("pad"));
  if (a) run.state.apply_1q(ids[0], gates::x());
  run.state.apply_1q(ids[0], gates::phase(theta));
  run.q[v] = ids[0];
  run.pads[v] = {theta, a};
  return v;
}

// Client-side trap test: measuring at kappa' + r pi must return r.
bool client_trap(Run& run, int v, const std::map<int, Pad>& eff, Chooser& chooser) {
  const int r = pick_bit(chooser, secret("trap_r"));
  return run.state.measure(run.q.at(v), basis_from_angle(eff.at(v).kappa.plus_pi_if(r)), chooser, "m") == r;
}

void finish(Run& run, ProtocolResult& res, const std::map<int, int>& results, const std::map<int, Pad>& eff) {
  res.server_key = res.transcript.classical_key(kServer);
  res.output_nodes = run.L.comp.outputs;
  res.output = detail::correct_outputs(run.state, run.q, run.L.comp, run.L.plan, results, eff);
}

ProtocolResult run_ps(const VbdqcInstance& inst, Chooser& chooser, Adversary* adversary) {
  Run run{detail::build_dt_layout(inst.base, chooser), {}, {}, {}, {}};
  const auto& dt = run.L.dt;
  ProtocolResult res;
  const int in = encrypt_input(run, inst, chooser);
  for (int v : dt.topology.nodes) {
    if (v == in) {
    } else if (dt.role.at(v) == Role::kDummy) {
      run.dummies[v] = pick_bit(chooser, secret("dummy"));
      run.q[v] = run.state.add_qubit(basis_state(run.dummies[v]));
    } else {
      const AngleIndex theta(pick_uniform(chooser, secret("theta"), 8));
      run.q[v] = run.state.add_qubit(plus_state(theta));
      run.pads[v] = {theta, 0};
    }
    res.transcript.send(kClient, kServer, PayloadKind::kQubit, "qubit", v, run.q[v]);
  }
  for (const auto& [a, b] : dt.topology.edges) run.state.apply_cz(run.q.at(a), run.q.at(b));
  if (adversary) adversary->on_known_traps(detail::measured_traps(run.L));
  if (adversary) adversary->on_qubit_send(run.state, run.q, chooser);
  auto eff = detail::propagate_x_pads(run.pads, dt.topology);
  detail::fold_dummy_parities(eff, run.dummies, dt.topology);

  bool traps_ok = true;
  std::map<int, int> results;
  for (int v : run.L.order) {
    const Role role = dt.role.at(v);
    int r = 0;
    AngleIndex delta;
    if (role == Role::kDummy) {
      delta = AngleIndex(pick_uniform(chooser, secret("dummy_delta"), 8));
    } else if (role == Role::kTrap) {
      r = pick_bit(chooser, secret("trap_r"));
      delta = eff.at(v).kappa.plus_pi_if(r);
    } else {
      r = pick_bit(chooser, secret("r"));
      const AngleIndex phi = corrected_angle(v, detail::dt_angle(run.L, inst.angles, v), run.L.plan, results);
      delta = detail::padded_angle(phi, eff.at(v), r);
    }
    res.transcript.send(kClient, kServer, PayloadKind::kAngle, "delta", v, delta.value());
    const AngleIndex used = adversary ? adversary->on_measure_request(v, delta) : delta;
    const int b = run.state.measure(run.q.at(v), basis_from_angle(used), chooser,
                                    role == Role::kDummy ? "dummy_m" : "m");
    const int reported = adversary ? adversary->on_classical_send(v, b) : b;
    res.transcript.send(kServer, kClient, PayloadKind::kBit, "b", v, reported);
    if (role == Role::kTrap && reported != r) traps_ok = false;
    if (role == Role::kComputation) {
      results[v] = reported ^ r;
      res.outcomes.emplace_back(v, results[v]);
    }
  }
  res.server_state = run.state.reduced_density(detail::output_qubits(run.q, run.L.comp.outputs));
  for (int v : run.L.held) {
    res.transcript.send(kServer, kClient, PayloadKind::kQubit, "output", v, run.q.at(v));
    if (dt.role.at(v) == Role::kTrap && !client_trap(run, v, eff, chooser)) traps_ok = false;
  }
  res.accepted = traps_ok;
  finish(run, res, results, eff);
  return res;
}

ProtocolResult run_rm(const VbdqcInstance& inst, Chooser& chooser, Adversary* adversary) {
  Run run{detail::build_dt_layout(inst.base, chooser), {}, {}, {}, {}};
  const auto& dt = run.L.dt;
  ProtocolResult res;
  const int in = encrypt_input(run, inst, chooser);
  res.transcript.send(kClient, kServer, PayloadKind::kQubit, "input", in, run.q[in]);
  res.server_state = run.state.reduced_density(detail::output_qubits(run.q, run.L.comp.inputs));
  for (int v : dt.topology.nodes) {
    if (v == in) continue;
    run.q[v] = run.state.add_qubit(plus_state(AngleIndex::zero()));
    if (dt.role.at(v) != Role::kDummy) run.pads[v] = {};
  }
  if (adversary) adversary->on_qubit_send(run.state, run.q, chooser);
  // The client's Z measurements of dummies commute with the CZ network, so
  // they are taken first and the outcome is left in place as |d>.
  const auto z = QubitBasis::computational();
  for (int v : dt.topology.nodes) {
    if (dt.role.at(v) != Role::kDummy) continue;
    run.dummies[v] = run.state.measure(run.q.at(v), z, chooser, "dummy_m");
    run.q[v] = run.state.add_qubit(basis_state(run.dummies[v]));
  }
  for (const auto& [a, b] : dt.topology.edges) run.state.apply_cz(run.q.at(a), run.q.at(b));
  for (int v : dt.topology.nodes) {
    if (v != in) res.transcript.send(kServer, kClient, PayloadKind::kQubit, "qubit", v, run.q.at(v));
  }
  auto eff = detail::propagate_x_pads(run.pads, dt.topology);
  detail::fold_dummy_parities(eff, run.dummies, dt.topology);

  bool traps_ok = true;
  std::map<int, int> results;
  std::vector<int> order = run.L.order;
  order.insert(order.end(), run.L.held.begin(), run.L.held.end());
  for (int v : order) {
    const Role role = dt.role.at(v);
    if (role == Role::kTrap) {
      if (!client_trap(run, v, eff, chooser)) traps_ok = false;
    } else if (role == Role::kComputation && !run.L.comp.is_output(v)) {
      const AngleIndex phi = corrected_angle(v, detail::dt_angle(run.L, inst.angles, v), run.L.plan, results);
      results[v] = run.state.measure(run.q.at(v), basis_from_angle(detail::padded_angle(phi, eff.at(v), 0)),
                                     chooser, "m");
      res.outcomes.emplace_back(v, results[v]);
    }
  }
  res.accepted = traps_ok;
  finish(run, res, results, eff);
  return res;
}

}  // namespace

ProtocolResult run_vbdqc(Setting setting, const VbdqcInstance& inst, Chooser& chooser, Adversary* adversary) {
  return setting == Setting::kPS ? run_ps(inst, chooser, adversary) : run_rm(inst, chooser, adversary);
}

}  // namespace dqc
