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

#include "dqc/simulators.hpp"

#include <cmath>

#include "dqc/errors.hpp"

namespace dqc {

BellPair sim_bell_prep(FactoredState& state) {
  const Vector phi = bell_vector({0, 0});
  const auto ids = state.add_block(phi);
  return {ids[0], ids[1]};
}

PauliHerald herald_from_value(int value) { return {(value >> 1) & 1, value & 1}; }

FilterResult heralding_filter(const std::vector<Message>& messages, const std::set<std::string>& suppressed) {
  FilterResult out;
  for (const auto& m : messages) {
    if (suppressed.count(m.tag) == 0) {
      out.forwarded.push_back(m);
    } else if (m.kind == PayloadKind::kHerald) {
      out.heralds.push_back(herald_from_value(m.value));
    }
  }
  return out;
}

void HeraldedChannel::send(const Message& m) {
  ++step_;
  if (suppressed_.count(m.tag) == 0) {
    forwarded_.send(m.sender, m.receiver, m.kind, m.tag, m.node, m.value);
  } else if (m.kind == PayloadKind::kHerald) {
    heralds_.push_back(herald_from_value(m.value));
  }
}

PauliHerald HeraldedChannel::sim_bell_meas(FactoredState& state, QubitId a, QubitId b, Chooser& chooser) {
  const PauliHerald h = state.bell_measure(a, b, chooser, "bell");
  Message m;
  m.sender = "simulator";
  m.receiver = "distinguisher";
  m.kind = PayloadKind::kHerald;
  m.tag = kHeraldTag;
  m.value = herald_value(h);
  send(m);
  return h;
}

nlohmann::json heralds_to_json(const std::vector<PauliHerald>& heralds) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& h : heralds) arr.push_back({h.b0, h.b1});
  return arr;
}

std::vector<PauliHerald> heralds_from_json(const nlohmann::json& j) {
  std::vector<PauliHerald> out;
  for (const auto& e : j) out.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return out;
}

RerunResult rerun_until_identity(const std::function<std::vector<PauliHerald>(int)>& attempt, int max_attempts) {
  for (int i = 0; i < max_attempts; ++i) {
    auto heralds = attempt(i);
    bool identity = true;
    for (const auto& h : heralds) identity = identity && h.b0 == 0 && h.b1 == 0;
    if (identity) return {i + 1, std::move(heralds)};
  }
  throw RerunExhaustedError("no identity herald pattern after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace dqc
