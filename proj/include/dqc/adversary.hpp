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

// Server-side interceptors. A dishonest server can act on the qubits it holds,
// change the basis it measures in, and change the bits it reports.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dqc/angle.hpp"
#include "dqc/chooser.hpp"
#include "dqc/factored_state.hpp"

namespace dqc {

class Adversary {
 public:
  virtual ~Adversary() = default;

  /// Called once the server holds every resource qubit (node -> qubit).
  virtual void on_qubit_send(FactoredState& state, const std::map<int, QubitId>& qubits, Chooser& chooser);
  /// Angle the server actually measures node `node` in.
  virtual AngleIndex on_measure_request(int node, AngleIndex delta);
  /// Bit the server reports for node `node`.
  virtual int on_classical_send(int node, int bit);
  /// Trap nodes the server measures, handed over by the trap-based protocols
  /// so tests can model an adversary that has learned where a trap is.
  virtual void on_known_traps(const std::vector<int>& traps);

  virtual std::string name() const { return "honest"; }
};

/// Picks one node uniformly (tag "attack_position") and applies Z to it.
class ZAttack : public Adversary {
 public:
  void on_qubit_send(FactoredState& state, const std::map<int, QubitId>& qubits, Chooser& chooser) override;
  std::string name() const override { return "z"; }
  int position() const { return position_; }

 private:
  int position_ = -1;
};

/// Reports 0 for one node: the given one, a uniformly chosen one (-1), or
/// the first known trap (kKnownTrap).
class FixedReportAttack : public Adversary {
 public:
  static constexpr int kKnownTrap = -2;
  explicit FixedReportAttack(int target = -1)
      : target_(target), fixed_target_(target >= 0), known_trap_(target == kKnownTrap) {}
  void on_qubit_send(FactoredState& state, const std::map<int, QubitId>& qubits, Chooser& chooser) override;
  int on_classical_send(int node, int bit) override;
  void on_known_traps(const std::vector<int>& traps) override;
  std::string name() const override { return "report"; }
  int target() const { return target_; }

 private:
  int target_;
  bool fixed_target_ = false;
  bool known_trap_ = false;
};

/// Measures one uniformly chosen node at delta + pi/2.
class WrongBasisAttack : public Adversary {
 public:
  void on_qubit_send(FactoredState& state, const std::map<int, QubitId>& qubits, Chooser& chooser) override;
  AngleIndex on_measure_request(int node, AngleIndex delta) override;
  std::string name() const override { return "basis"; }
  int position() const { return position_; }

 private:
  int position_ = -1;
};

/// "honest", "z", "report" or "basis"; throws DqcError otherwise.
std::unique_ptr<Adversary> make_adversary(const std::string& name, int report_target = -1);

}  // namespace dqc
