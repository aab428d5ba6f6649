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

#include <string>

#include "dqc/errors.hpp"
#include "dqc/protocols.hpp"
#include "protocol_util.hpp"

namespace dqc {

using detail::Pad;

std::string client_name(int index) { return "client" + std::to_string(index); }

nlohmann::json density_to_json(const Matrix& m) { return matrix_to_json(m); }

std::string ProtocolResult::outcome_key() const {
  std::string key;
  for (const auto& [_, s] : outcomes) key += static_cast<char>('0' + s);
  return key;
}

nlohmann::json ProtocolResult::to_json() const {
  nlohmann::json out = nlohmann::json::object();
  out["accepted"] = accepted;
  out["output"] = output.size() == 0 ? nlohmann::json(nullptr) : density_to_json(output);
  out["output_nodes"] = output_nodes;
  nlohmann::json oc = nlohmann::json::array();
  for (const auto& [v, s] : outcomes) oc.push_back({v, s});
  out["outcomes"] = oc;
  out["transcript"] = transcript.to_json();
  return out;
}

namespace {

struct Setup {
  GraphTopology g;
  FlowPlan plan;
  FactoredState state;
  std::map<int, QubitId> q;
  std::map<int, Pad> pads;
};

Setup begin(const BdqcInstance& inst) {
  Setup s;
  s.g = inst.topology;
  s.g.validate();
  s.plan = plan_flow(s.g);
  if (inst.input.total_dim() != (1 << s.g.inputs.size())) {
    throw DimensionError("input state does not match the input nodes");
  }
  return s;
}

AngleIndex angle_of(const BdqcInstance& inst, int v) {
  auto it = inst.angles.find(v);
  return it == inst.angles.end() ? AngleIndex::zero() : it->second;
}

// Client one-time-pads the input with P(theta) X^a on each input qubit.
void encrypt_inputs(Setup& s, const DensityState& input, Chooser& chooser) {
  if (s.g.inputs.empty()) return;
  const Vector psi = pick_ensemble_member(input, chooser);
  const auto ids = s.state.add_block(psi);
  for (std::size_t k = 0; k < ids.size(); ++k) {
    const int v = s.g.inputs[k];
    s.q[v] = ids[k];
    const AngleIndex theta(pick_uniform(chooser, secret("theta"), 8));
    const int a = pick_bit(chooser, secret("pad"));
    if (a) s.state.apply_1q(ids[k], gates::x());
    s.state.apply_1q(ids[k], gates::phase(theta));
    s.pads[v] = {theta, a};
  }
}

void entangle(Setup& s) {
  for (const auto& [a, b] : s.g.edges) s.state.apply_cz(s.q.at(a), s.q.at(b));
}

void finish(Setup& s, ProtocolResult& res, const std::map<int, int>& results, const std::map<int, Pad>& eff,
            const char* holder) {
  for (int o : s.g.outputs) res.transcript.send(holder, kClient, PayloadKind::kQubit, "output", o, s.q.at(o));
  res.output = detail::correct_outputs(s.state, s.q, s.g, s.plan, results, eff);
  res.output_nodes = s.g.outputs;
}

}  // namespace

ProtocolResult run_bfk09(const BdqcInstance& inst, Chooser& chooser, Adversary* adversary) {
  Setup s = begin(inst);
  ProtocolResult res;
  encrypt_inputs(s, inst.input, chooser);
  std::map<int, int> r;
  for (int v : s.g.nodes) {
    if (!s.g.is_input(v)) {
      if (s.g.is_output(v)) {
        s.q[v] = s.state.add_qubit(plus_state(AngleIndex::zero()));
        s.pads[v] = {};
      } else {
        const AngleIndex theta(pick_uniform(chooser, secret("theta"), 8));
        s.q[v] = s.state.add_qubit(plus_state(theta));
        s.pads[v] = {theta, 0};
      }
    }
    if (!s.g.is_output(v)) r[v] = pick_bit(chooser, secret("r"));
    res.transcript.send(kClient, kServer, PayloadKind::kQubit, "qubit", v, s.q[v]);
  }
  entangle(s);
  if (adversary) adversary->on_qubit_send(s.state, s.q, chooser);
  const auto eff = detail::propagate_x_pads(s.pads, s.g);

  std::map<int, int> results;
  for (int v : s.plan.order) {
    const AngleIndex phi = corrected_angle(v, angle_of(inst, v), s.plan, results);
    const AngleIndex delta = detail::padded_angle(phi, eff.at(v), r[v]);
    res.transcript.send(kClient, kServer, PayloadKind::kAngle, "delta", v, delta.value());
    const AngleIndex used = adversary ? adversary->on_measure_request(v, delta) : delta;
    const int b = s.state.measure(s.q[v], basis_from_angle(used), chooser, "m");
    const int reported = adversary ? adversary->on_classical_send(v, b) : b;
    res.transcript.send(kServer, kClient, PayloadKind::kBit, "b", v, reported);
    results[v] = reported ^ r[v];
    res.outcomes.emplace_back(v, results[v]);
  }
  res.server_key = res.transcript.classical_key(kServer);
  res.server_state = s.state.reduced_density(detail::output_qubits(s.q, s.g.outputs));
  finish(s, res, results, eff, kServer);
  return res;
}

ProtocolResult run_mf13(const BdqcInstance& inst, Chooser& chooser, Adversary* adversary) {
  Setup s = begin(inst);
  ProtocolResult res;
  encrypt_inputs(s, inst.input, chooser);
  std::vector<QubitId> received;
  for (int v : s.g.inputs) {
    res.transcript.send(kClient, kServer, PayloadKind::kQubit, "input", v, s.q[v]);
    received.push_back(s.q[v]);
  }
  res.server_state = s.state.reduced_density(received);
  for (int v : s.g.nodes) {
    if (s.g.is_input(v)) continue;
    s.q[v] = s.state.add_qubit(plus_state(AngleIndex::zero()));
    s.pads[v] = {};
  }
  entangle(s);
  if (adversary) adversary->on_qubit_send(s.state, s.q, chooser);
  for (int v : s.g.nodes) {
    if (!s.g.is_output(v)) res.transcript.send(kServer, kClient, PayloadKind::kQubit, "qubit", v, s.q[v]);
  }
  const auto eff = detail::propagate_x_pads(s.pads, s.g);

  std::map<int, int> results;
  for (int v : s.plan.order) {
    const AngleIndex phi = corrected_angle(v, angle_of(inst, v), s.plan, results);
    results[v] = s.state.measure(s.q[v], basis_from_angle(detail::padded_angle(phi, eff.at(v), 0)), chooser, "m");
    res.outcomes.emplace_back(v, results[v]);
  }
  res.server_key = res.transcript.classical_key(kServer);
  finish(s, res, results, eff, kServer);
  return res;
}

ProtocolResult run_tau(const BdqcInstance& inst, Chooser& chooser, Adversary* adversary) {
  Setup s = begin(inst);
  ProtocolResult res;
  const auto settings = transform_bfk_to_tau(s.g);
  encrypt_inputs(s, inst.input, chooser);
  std::map<int, int> r, server_s;
  std::map<int, AngleIndex> theta;
  for (int v : s.g.nodes) {
    if (s.g.is_input(v)) {
      r[v] = pick_bit(chooser, secret("r"));
      res.transcript.send(kClient, kServer, PayloadKind::kQubit, "qubit", v, s.q[v]);
    } else if (s.g.is_output(v)) {
      s.q[v] = s.state.add_qubit(plus_state(AngleIndex::zero()));
      s.pads[v] = {};
    } else {
      theta[v] = AngleIndex(pick_uniform(chooser, secret("theta"), 8));
      server_s[v] = pick_bit(chooser, secret("s"));
      s.q[v] = s.state.add_qubit(plus_state(AngleIndex(4 * server_s[v])));
      s.pads[v] = {theta[v], 0};
    }
  }
  entangle(s);
  if (adversary) adversary->on_qubit_send(s.state, s.q, chooser);
  const auto eff = detail::propagate_x_pads(s.pads, s.g);

  std::map<int, int> results;
  for (int v : s.plan.order) {
    const AngleIndex phi = corrected_angle(v, angle_of(inst, v), s.plan, results);
    if (settings.at(v) == Setting::kPS) {
      const AngleIndex delta = detail::padded_angle(phi, eff.at(v), r[v]);
      res.transcript.send(kClient, kServer, PayloadKind::kAngle, "delta", v, delta.value());
      const AngleIndex used = adversary ? adversary->on_measure_request(v, delta) : delta;
      const int b = s.state.measure(s.q[v], basis_from_angle(used), chooser, "m");
      const int reported = adversary ? adversary->on_classical_send(v, b) : b;
      res.transcript.send(kServer, kClient, PayloadKind::kBit, "b", v, reported);
      results[v] = reported ^ r[v];
    } else {
      // The server rotates its |+_{s pi}> by P(-delta) and sends it with s.
      const AngleIndex delta = detail::padded_angle(phi, eff.at(v), 0);
      res.transcript.send(kClient, kServer, PayloadKind::kAngle, "delta", v, delta.value());
      const AngleIndex used = adversary ? adversary->on_measure_request(v, delta) : delta;
      s.state.apply_1q(s.q[v], gates::phase(-used));
      res.transcript.send(kServer, kClient, PayloadKind::kQubit, "qubit", v, s.q[v]);
      const int reported = adversary ? adversary->on_classical_send(v, server_s[v]) : server_s[v];
      res.transcript.send(kServer, kClient, PayloadKind::kBit, "s", v, reported);
      const int rv = s.state.measure(s.q[v], basis_from_angle(-theta[v]), chooser, "m");
      results[v] = rv ^ reported;
    }
    res.outcomes.emplace_back(v, results[v]);
  }
  res.server_key = res.transcript.classical_key(kServer);
  res.server_state = s.state.reduced_density(detail::output_qubits(s.q, s.g.outputs));
  finish(s, res, results, eff, kServer);
  return res;
}

std::map<int, Setting> transform_bfk_to_tau(const GraphTopology& topology) {
  std::map<int, Setting> out;
  for (int v : topology.nodes) {
    out[v] = (topology.is_input(v) || topology.is_output(v)) ? Setting::kPS : Setting::kRM;
  }
  return out;
}

RoutineSpec bfk_node_spec(AngleIndex theta, AngleIndex delta) {
  RoutineSpec spec;
  spec.setting = Setting::kPS;
  spec.P = basis_from_angle(theta);
  spec.M = basis_from_angle(delta);
  spec.omega = BipartiteOperator(2, gates::cz());
  return spec;
}

RoutineSpec tau_node_spec(AngleIndex theta, AngleIndex delta) {
  RoutineSpec spec;
  spec.setting = Setting::kRM;
  spec.P = basis_from_angle(-delta);
  spec.M = basis_from_angle(-theta);
  spec.omega = BipartiteOperator(2, gates::cz());
  return spec;
}

}  // namespace dqc
