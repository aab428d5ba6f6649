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
#include "dqc/factored_state.hpp"
#include "dqc/protocols.hpp"

namespace dqc {

AngleIndex dbsp_contribution(const DbspRecord& rec) { return rec.theta.negated_if(rec.s).plus_pi_if(rec.r); }

AngleIndex dbsp_theta(const std::vector<DbspRecord>& records, AngleIndex theta0) {
  AngleIndex t = theta0;
  for (const auto& rec : records) t += dbsp_contribution(rec);
  return t;
}

std::vector<DbspRecord> dbsp_on_qubit(FactoredState& state, QubitId data, const std::vector<Setting>& kinds,
                                      bool mixed, Chooser& chooser, Transcript& transcript, int node) {
  std::vector<DbspRecord> records;
  const auto z = QubitBasis::computational();
  for (std::size_t c = 0; c < kinds.size(); ++c) {
    DbspRecord rec;
    rec.client = static_cast<int>(c);
    rec.kind = kinds[c];
    const std::string name = client_name(rec.client);
    rec.theta = AngleIndex(pick_uniform(chooser, secret("dbsp_theta"), 8));
    if (rec.kind == Setting::kPS) {
      rec.r = mixed ? 0 : pick_bit(chooser, secret("dbsp_r"));
      const QubitId aux = state.add_qubit(plus_state(rec.theta.plus_pi_if(rec.r)));
      transcript.send(name, kServer, PayloadKind::kQubit, "dbsp_aux", node, aux);
      state.apply_2q(data, aux, gates::cx());
      rec.s = state.measure(aux, z, chooser, "dbsp_m");
    } else {
      rec.s = mixed ? 0 : pick_bit(chooser, secret("dbsp_s"));
      const QubitId aux = state.add_qubit(rec.s ? Vector2(0, 1) : Vector2(1, 0));
      state.apply_2q(data, aux, gates::cx());
      transcript.send(kServer, name, PayloadKind::kQubit, "dbsp_aux", node, aux);
      rec.r = state.measure(aux, basis_from_angle(-rec.theta), chooser, "dbsp_m");
    }
    transcript.send(name, kSmpc, PayloadKind::kAngle, "dbsp_theta", node, rec.theta.value());
    transcript.send(name, kSmpc, PayloadKind::kBit, "dbsp_r", node, rec.r);
    transcript.send(kServer, kSmpc, PayloadKind::kBit, "dbsp_s", node, rec.s);
    records.push_back(rec);
  }
  return records;
}

namespace {

DbspResult run_on(const std::vector<Setting>& kinds, bool mixed, int owner, const DensityState& rho,
                  Chooser& chooser, AngleIndex theta0) {
  if (rho.total_dim() != 2) throw DimensionError("DBSP acts on a single qubit");
  if (kinds.empty()) throw DimensionError("DBSP needs at least one client");
  if (owner < 0 || owner >= static_cast<int>(kinds.size())) throw DimensionError("owner is not a client");
  DbspResult res;
  FactoredState state;
  // Keep a reference qubit so that a mixed rho is carried exactly.
  const auto ids = state.add_block(purify(rho));
  const QubitId data = ids[0];
  res.transcript.send(client_name(owner), kServer, PayloadKind::kQubit, "input", -1, data);
  res.records = dbsp_on_qubit(state, data, kinds, mixed, chooser, res.transcript);
  res.theta = dbsp_theta(res.records, theta0);
  const QubitId keep[1] = {data};
  res.output = DensityState({2}, state.reduced_density(keep));
  return res;
}

}  // namespace

DbspResult run_dbsp(Setting setting, int owner, const DensityState& rho, int k, Chooser& chooser) {
  if (k < 1) throw DimensionError("DBSP needs at least one client");
  return run_on(std::vector<Setting>(static_cast<std::size_t>(k), setting), false, owner, rho, chooser,
                AngleIndex::zero());
}

DbspResult run_dbsp_mixed(const std::vector<Setting>& kinds, const DensityState& rho, Chooser& chooser,
                          AngleIndex theta0) {
  DbspResult res = run_on(kinds, true, 0, rho, chooser, theta0);
  // theta0 is a public offset applied by the server.
  if (theta0 != AngleIndex::zero()) {
    res.output = apply_unitary(res.output, gates::phase(theta0), std::vector<int>{0});
  }
  return res;
}

}  // namespace dqc
