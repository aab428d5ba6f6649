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

// Delegated-computation protocols: single-client blind computation in both
// settings (BFK09, MF13 and the transformed protocol tau), double-blind state
// preparation (DBSP), the H/I gadget, trap-based verification on the dotted
// triple-graph (VBDQC) and its multi-client form (DMPQC).

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "dqc/adversary.hpp"
#include "dqc/graphs.hpp"
#include "dqc/qcore.hpp"
#include "dqc/routines.hpp"
#include "dqc/smpc.hpp"
#include "dqc/transcript.hpp"

namespace dqc {

inline constexpr const char* kClient = "client";
inline constexpr const char* kServer = "server";
inline constexpr const char* kSmpc = "smpc";
std::string client_name(int index);

struct ProtocolResult {
  bool accepted = true;
  /// Corrected output on `output_nodes`; 0x0 when withheld after an abort.
  Matrix output;
  std::vector<int> output_nodes;
  /// True MBQC outcome of every measured computation node, in measurement order.
  std::vector<std::pair<int, int>> outcomes;
  Transcript transcript;
  /// Classical part of the server's view and the quantum state it keeps.
  std::string server_key;
  Matrix server_state = Matrix::Identity(1, 1);

  /// Outcome bits in measurement order, independent of node labels.
  std::string outcome_key() const;
  nlohmann::json to_json() const;
};

/// Density matrix rows as [[re, im], ...] arrays.
nlohmann::json density_to_json(const Matrix& m);

struct BdqcInstance {
  GraphTopology topology;  // must carry a flow
  std::map<int, AngleIndex> angles;
  DensityState input = DensityState::scalar();  // on topology.inputs
};

/// Prepare-and-send blind computation. Output qubits start as |+>.
ProtocolResult run_bfk09(const BdqcInstance& inst, Chooser& chooser, Adversary* adversary = nullptr);
/// Receive-and-measure blind computation: the server prepares |+> states and
/// streams every qubit to the client, who measures at corrected angles.
ProtocolResult run_mf13(const BdqcInstance& inst, Chooser& chooser, Adversary* adversary = nullptr);
/// BFK09 with the T-transformation applied to every node that is neither an
/// input nor an output.
ProtocolResult run_tau(const BdqcInstance& inst, Chooser& chooser, Adversary* adversary = nullptr);

/// Setting of each node once BFK09 is transformed into tau.
std::map<int, Setting> transform_bfk_to_tau(const GraphTopology& topology);
/// One BFK09 node as a PS routine coupled by CZ to one neighbour: the client
/// prepares basis(theta)_r and the server measures in basis(delta).
RoutineSpec bfk_node_spec(AngleIndex theta, AngleIndex delta);
/// The corresponding tau node: the server prepares basis(-delta)_s, the
/// client measures in basis(-theta).
RoutineSpec tau_node_spec(AngleIndex theta, AngleIndex delta);

struct DbspRecord {
  int client = 0;
  Setting kind = Setting::kPS;
  AngleIndex theta;
  int r = 0;
  int s = 0;
};

/// (-1)^s theta + r pi.
AngleIndex dbsp_contribution(const DbspRecord& rec);
AngleIndex dbsp_theta(const std::vector<DbspRecord>& records, AngleIndex theta0 = AngleIndex::zero());

/// Rotates `data` by P(theta) with one auxiliary qubit per client. PS clients
/// send |+_{theta_c + r_c pi}>; RM clients receive |s_c> after the CX and
/// measure in basis(-theta_c). In `mixed` form PS clients use r_c = 0 and
/// the server prepares |0> for RM clients.
std::vector<DbspRecord> dbsp_on_qubit(FactoredState& state, QubitId data, const std::vector<Setting>& kinds,
                                      bool mixed, Chooser& chooser, Transcript& transcript, int node = -1);

struct DbspResult {
  DensityState output = DensityState::scalar();
  AngleIndex theta;
  std::vector<DbspRecord> records;
  Transcript transcript;
};

/// k clients, all in `setting`; `owner` names the client holding rho.
DbspResult run_dbsp(Setting setting, int owner, const DensityState& rho, int k, Chooser& chooser);
DbspResult run_dbsp_mixed(const std::vector<Setting>& kinds, const DensityState& rho, Chooser& chooser,
                          AngleIndex theta0 = AngleIndex::zero());

/// Gadget unitary on (auxiliary q, data x): (|0><0| Z + |1><1| X)(V (x) I)
/// with V = P(-pi/2) H P(-pi/2).
Matrix hi_gadget_omega();
/// Auxiliary angle: b = 1 uses {0, pi}, b = 0 uses {pi/2, 3pi/2}.
AngleIndex hi_gadget_gamma(int b, int r);
/// b = 1 implements H, b = 0 the identity.
Matrix2 hi_gadget_w(int b);
/// Pauli byproduct left on the data qubit.
Matrix2 hi_gadget_pauli(int b, int r, int s);

struct HiResult {
  DensityState output = DensityState::scalar();
  int b = 0;
  int r = 0;
  int s = 0;
  GadgetRecord record;
  Transcript transcript;
};

/// PS: the client prepares |+_gamma>, the server applies the gadget and
/// measures the auxiliary qubit in X. RM: the server prepares |+_{s pi}>,
/// applies the partially transposed gadget, rotates the auxiliary qubit by
/// DBSP and P(gamma - theta) and measures it in X, giving r = r' xor r~.
HiResult run_hi_gadget(Setting setting, int b, const DensityState& rho, Chooser& chooser);

struct VbdqcInstance {
  GraphTopology base;  // a path with flow
  std::map<int, AngleIndex> angles;  // per base vertex; dots use 0
  DensityState input = DensityState::scalar();  // on the base input vertex
};

ProtocolResult run_vbdqc(Setting setting, const VbdqcInstance& inst, Chooser& chooser,
                         Adversary* adversary = nullptr);

struct DmpqcInstance {
  GraphTopology base;  // a path with flow
  std::vector<Setting> clients;
  std::map<int, AngleIndex> angles;
  std::map<int, int> owner;  // base vertex -> client index, default 0
  DensityState input = DensityState::scalar();
};

ProtocolResult run_dmpqc(const DmpqcInstance& inst, Chooser& chooser, Adversary* adversary = nullptr);

}  // namespace dqc
