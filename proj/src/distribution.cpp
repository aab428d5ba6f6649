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

#include "dqc/distribution.hpp"

#include "dqc/errors.hpp"

namespace dqc {

void CqDistribution::add(const std::string& key, double p, const Matrix& rho) {
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, p * rho);
    return;
  }
  if (it->second.rows() != rho.rows()) throw DimensionError("inconsistent state size under key " + key);
  it->second += p * rho;
}

double CqDistribution::total_probability() const {
  double t = 0.0;
  for (const auto& [_, m] : entries_) t += m.trace().real();
  return t;
}

double CqDistribution::probability(const std::string& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? 0.0 : it->second.trace().real();
}

double CqDistribution::distance(const CqDistribution& a, const CqDistribution& b) {
  double d = 0.0;
  for (const auto& [k, m] : a.entries_) {
    auto it = b.entries_.find(k);
    d += trace_norm_half(it == b.entries_.end() ? m : Matrix(m - it->second));
  }
  for (const auto& [k, m] : b.entries_) {
    if (!a.entries_.count(k)) d += trace_norm_half(m);
  }
  return d;
}

}  // namespace dqc
