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

#include "dqc/adversary.hpp"

#include "dqc/errors.hpp"

namespace dqc {

namespace {

int pick_node(const std::map<int, QubitId>& qubits, Chooser& chooser) {
  if (qubits.empty()) return -1;
  const int k = pick_uniform(chooser, secret("attack_position"), static_cast<int>(qubits.size()));
  auto it = qubits.begin();
  std::advance(it, k);
  return it->first;
}

}  // namespace

void Adversary::on_qubit_send(FactoredState&, const std::map<int, QubitId>&, Chooser&) {}
AngleIndex Adversary::on_measure_request(int, AngleIndex delta) { return delta; }
int Adversary::on_classical_send(int, int bit) { return bit; }
void Adversary::on_known_traps(const std::vector<int>&) {}

void ZAttack::on_qubit_send(FactoredState& state, const std::map<int, QubitId>& qubits, Chooser& chooser) {
  position_ = pick_node(qubits, chooser);
  if (position_ >= 0) state.apply_1q(qubits.at(position_), gates::z());
}

void FixedReportAttack::on_qubit_send(FactoredState&, const std::map<int, QubitId>& qubits, Chooser& chooser) {
  if (!fixed_target_ && !known_trap_) target_ = pick_node(qubits, chooser);
}

void FixedReportAttack::on_known_traps(const std::vector<int>& traps) {
  if (known_trap_ && !traps.empty()) target_ = traps.front();
}

int FixedReportAttack::on_classical_send(int node, int bit) { return node == target_ ? 0 : bit; }

void WrongBasisAttack::on_qubit_send(FactoredState&, const std::map<int, QubitId>& qubits, Chooser& chooser) {
  position_ = pick_node(qubits, chooser);
}

AngleIndex WrongBasisAttack::on_measure_request(int node, AngleIndex delta) {
  return node == position_ ? delta + AngleIndex::half_pi() : delta;
}

std::unique_ptr<Adversary> make_adversary(const std::string& name, int report_target) {
  if (name == "honest") return std::make_unique<Adversary>();
  if (name == "z") return std::make_unique<ZAttack>();
  if (name == "report") return std::make_unique<FixedReportAttack>(report_target);
  if (name == "basis") return std::make_unique<WrongBasisAttack>();
  throw DqcError("unknown attack '" + name + "'");
}

}  // namespace dqc
