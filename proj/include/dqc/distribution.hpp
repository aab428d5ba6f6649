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

// Classical-quantum distributions: a map from a classical record to the
// unnormalised quantum state that accompanies it (probability times state).

#include <map>
#include <string>

#include "dqc/qcore.hpp"

namespace dqc {

class CqDistribution {
 public:
  /// Adds p * rho under `key`. rho may be 1x1 for purely classical values.
  void add(const std::string& key, double p, const Matrix& rho);

  const std::map<std::string, Matrix>& entries() const { return entries_; }
  double total_probability() const;
  /// Marginal probability of `key`.
  double probability(const std::string& key) const;

  /// (1/2) sum_k || A_k - B_k ||_1. Missing keys count as zero operators.
  static double distance(const CqDistribution& a, const CqDistribution& b);

 private:
  std::map<std::string, Matrix> entries_;
};

}  // namespace dqc
