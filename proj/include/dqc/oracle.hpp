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

// Brute-force ground truth for measurement patterns. Builds the whole graph
// state as one dense vector and projects measured nodes directly. No flow or
// correction logic is used: the ideal output is the branch where every
// measurement yields outcome 0.

#include <map>
#include <vector>

#include "dqc/graphs.hpp"
#include "dqc/qcore.hpp"

namespace dqc {

struct Pattern {
  GraphTopology topology;
  /// Measurement angle per non-output node (missing = 0).
  std::map<int, AngleIndex> angles;
  /// State on topology.inputs, in that order.
  DensityState input = DensityState::scalar();
  /// Measurement order; empty means topology order.
  std::vector<int> order;
};

inline constexpr int kOracleMaxQubits = 12;

/// Ideal output on topology.outputs (in that order), normalised.
Matrix oracle_circuit(const Pattern& pattern);

struct OracleBranch {
  std::map<int, int> outcomes;
  double probability = 0.0;
  Matrix output;  // normalised, uncorrected
};

/// Every outcome string with its exact probability and uncorrected output.
std::vector<OracleBranch> oracle_branches(const Pattern& pattern);

}  // namespace dqc
