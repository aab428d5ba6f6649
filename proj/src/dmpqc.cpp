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

int owner_of(const DmpqcInstance& inst, int base_vertex) {
  auto it = inst.owner.find(base_vertex);
  const int o = it == inst.owner.end() ? 0 : it->second;
  if (o < 0 || o >= static_cast<int>(inst.clients.size())) throw DimensionError("owner is not a client");
  return o;
}

// Gadget whose auxiliary angle is prepared double blind: the server holds
// P(theta)|+> from DBSP and the SMPC sends gamma - theta.
GadgetRecord blind_gadget(FactoredState& state, QubitId data, int b, const std::vector<Setting>& kinds,
                          Chooser& chooser, Transcript& tr, int node) {
  const QubitId aux = state.add_qubit(plus_state(AngleIndex::zero()));
  const AngleIndex theta = dbsp_theta(dbsp_on_qubit(state, aux, kinds, false, chooser, tr, node));
  GadgetRecord rec;
  rec.b = b;
  rec.r_prime = pick_bit(chooser, secret("gadget_r"));
  const AngleIndex angle = hi_gadget_gamma(b, rec.r_prime) - theta;
  tr.send(kSmpc, kServer, PayloadKind::kAngle, "gadget_angle", node, angle.value());
  state.apply_1q(aux, gates::phase(angle));
  state.apply_2q(aux, data, hi_gadget_omega());
  rec.s = state.measure(aux, basis_from_angle(AngleIndex::zero()), chooser, "gadget_m");
  tr.send(kServer, kSmpc, PayloadKind::kBit, "gadget_s", node, rec.s);
  return rec;
}

void store(SmpcResource& smpc, const char* field, int node, int value) {
  smpc.call(kServer, "store", {{"field", field}, {"node", node}, {"value", value}});
}

}  // namespace

ProtocolResult run_dmpqc(const DmpqcInstance& inst, Chooser& chooser, Adversary* adversary) {
  if (inst.clients.empty()) throw DimensionError("at least one client is required");
  if (inst.input.total_dim() != 2) throw DimensionError("input must be a single qubit");
  const detail::DtLayout L = detail::build_dt_layout(inst.base, chooser);
  const auto& dt = L.dt;
  const int in = L.comp.inputs.front();
  const std::string in_owner = client_name(owner_of(inst, L.path.front()));
  const std::string out_owner = client_name(owner_of(inst, L.path.back()));

  ProtocolResult res;
  auto& tr = res.transcript;
  SmpcResource smpc;
  smpc.register_party(kServer);
  for (std::size_t c = 0; c < inst.clients.size(); ++c) smpc.register_party(client_name(static_cast<int>(c)));
  SmpcState& keys = smpc.internal();

  FactoredState state;
  std::map<int, QubitId> q;
  std::map<int, Pad> pads;
  std::map<int, int> dummies;
  for (int v : dt.topology.nodes) {
    Pad pad;
    if (v == in) {
      q[v] = state.add_block(pick_ensemble_member(inst.input, chooser))[0];
      pad.x = pick_bit(chooser, secret("pad"));
      if (pad.x) state.apply_1q(q[v], gates::x());
      smpc.call(in_owner, "store", {{"field", "a"}, {"node", v}, {"value", pad.x}});
      tr.send(in_owner, kServer, PayloadKind::kQubit, "input", v, q[v]);
    } else {
      q[v] = state.add_qubit(plus_state(AngleIndex::zero()));
    }
    pad.kappa = dbsp_theta(dbsp_on_qubit(state, q[v], inst.clients, false, chooser, tr, v));
    // Align: dummies become |+_{d pi}>, the rest get a uniform extra phase.
    const bool dummy = dt.role.at(v) == Role::kDummy;
    AngleIndex alpha;
    int d = 0;
    if (dummy) {
      d = pick_bit(chooser, secret("dummy"));
      alpha = AngleIndex(4 * d) - pad.kappa;
    } else {
      alpha = AngleIndex(pick_uniform(chooser, secret("alpha"), 8));
    }
    tr.send(kSmpc, kServer, PayloadKind::kAngle, "alpha", v, alpha.value());
    state.apply_1q(q[v], gates::phase(alpha));
    pad.kappa += alpha;
    const GadgetRecord g = blind_gadget(state, q[v], dummy ? 1 : 0, inst.clients, chooser, tr, v);
    keys.gadgets[v] = g;
    if (dummy) {
      // H|+_{d pi}> = |d>, flipped by the XZ byproduct.
      dummies[v] = d ^ g.r_prime ^ g.s;
      store(smpc, "d", v, dummies[v]);
    } else {
      if (g.r_prime) {
        pad = {-pad.kappa, pad.x ^ 1};  // X P(k) = P(-k) X up to phase
      } else {
        pad.kappa += AngleIndex::pi();
      }
      pads[v] = pad;
    }
  }
  for (const auto& [a, b] : dt.topology.edges) state.apply_cz(q.at(a), q.at(b));
  if (adversary) adversary->on_known_traps(detail::measured_traps(L));
  if (adversary) adversary->on_qubit_send(state, q, chooser);
  auto eff = detail::propagate_x_pads(pads, dt.topology);
  detail::fold_dummy_parities(eff, dummies, dt.topology);
  for (const auto& [v, p] : eff) {
    if (dummies.count(v)) continue;
    store(smpc, "theta", v, p.kappa.value());
    store(smpc, "x", v, p.x);
  }

  std::map<int, int> results;
  std::vector<int> traps;
  auto delta_for = [&](int v) {
    const Role role = dt.role.at(v);
    if (role == Role::kDummy) return AngleIndex(pick_uniform(chooser, secret("dummy_delta"), 8));
    const int r = pick_bit(chooser, secret(role == Role::kTrap ? "trap_r" : "r"));
    keys.r[v] = r;
    if (role == Role::kTrap) {
      traps.push_back(v);
      return eff.at(v).kappa.plus_pi_if(r);
    }
    const AngleIndex phi = corrected_angle(v, detail::dt_angle(L, inst.angles, v), L.plan, results);
    return detail::padded_angle(phi, eff.at(v), r);
  };
  for (int v : L.order) {
    const AngleIndex delta = delta_for(v);
    tr.send(kSmpc, kServer, PayloadKind::kAngle, "delta", v, delta.value());
    const AngleIndex used = adversary ? adversary->on_measure_request(v, delta) : delta;
    const Role role = dt.role.at(v);
    const int b = state.measure(q.at(v), basis_from_angle(used), chooser, role == Role::kDummy ? "dummy_m" : "m");
    const int reported = adversary ? adversary->on_classical_send(v, b) : b;
    tr.send(kServer, kSmpc, PayloadKind::kBit, "b", v, reported);
    if (role == Role::kDummy) continue;
    store(smpc, "s", v, reported);
    if (role == Role::kComputation) {
      results[v] = reported ^ keys.r.at(v);
      res.outcomes.emplace_back(v, results[v]);
    }
  }
  res.server_key = tr.classical_key(kServer);
  res.server_state = state.reduced_density(detail::output_qubits(q, L.comp.outputs));

  // The output triple goes to its owner, who tests the trap among it.
  for (int v : L.held) tr.send(kServer, out_owner, PayloadKind::kQubit, "output", v, q.at(v));
  for (int v : L.held) {
    if (dt.role.at(v) != Role::kTrap) continue;
    const AngleIndex delta = delta_for(v);
    tr.send(kSmpc, out_owner, PayloadKind::kAngle, "delta", v, delta.value());
    const int b = state.measure(q.at(v), basis_from_angle(delta), chooser, "m");
    tr.send(out_owner, kSmpc, PayloadKind::kBit, "b", v, b);
    smpc.call(out_owner, "store", {{"field", "s"}, {"node", v}, {"value", b}});
  }
  res.accepted = smpc.call(kServer, "check_traps", {{"traps", traps}}).at("accepted").get<bool>();
  res.output_nodes = L.comp.outputs;
  if (!res.accepted) {
    tr.send(kSmpc, out_owner, PayloadKind::kHerald, "abort", -1, 1);
    res.output = Matrix(0, 0);
    return res;
  }
  const auto released = smpc.call(out_owner, "release_keys", {{"nodes", L.comp.outputs}});
  std::map<int, Pad> out_pads;
  for (int o : L.comp.outputs) {
    const auto& k = released.at(std::to_string(o));
    out_pads[o] = {AngleIndex(k.at("theta").get<int>()), k.at("x").get<int>()};
    tr.send(kSmpc, out_owner, PayloadKind::kAngle, "key_theta", o, out_pads[o].kappa.value());
    tr.send(kSmpc, out_owner, PayloadKind::kBit, "key_x", o, out_pads[o].x);
  }
  res.output = detail::correct_outputs(state, q, L.comp, L.plan, results, out_pads);
  return res;
}

}  // namespace dqc
