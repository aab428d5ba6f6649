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

#include "dqc/transcript.hpp"

#include "dqc/errors.hpp"

namespace dqc {

const char* to_string(PayloadKind kind) {
  switch (kind) {
    case PayloadKind::kAngle:
      return "angle";
    case PayloadKind::kBit:
      return "bit";
    case PayloadKind::kQubit:
      return "qubit";
    case PayloadKind::kHerald:
      return "herald";
  }
  return "?";
}

namespace {

PayloadKind kind_from_string(const std::string& s) {
  if (s == "angle") return PayloadKind::kAngle;
  if (s == "bit") return PayloadKind::kBit;
  if (s == "qubit") return PayloadKind::kQubit;
  if (s == "herald") return PayloadKind::kHerald;
  throw DqcError("unknown payload kind '" + s + "'");
}

}  // namespace

const Message& Transcript::send(std::string sender, std::string receiver, PayloadKind kind, std::string tag,
                                int node, int value) {
  Message m;
  m.step = static_cast<int>(messages_.size());
  m.sender = std::move(sender);
  m.receiver = std::move(receiver);
  m.kind = kind;
  m.tag = std::move(tag);
  m.node = node;
  m.value = value;
  messages_.push_back(std::move(m));
  return messages_.back();
}

std::vector<Message> Transcript::view(const std::string& party) const {
  std::vector<Message> out;
  for (const auto& m : messages_) {
    if (m.sender == party || m.receiver == party) out.push_back(m);
  }
  return out;
}

std::string Transcript::classical_key(const std::string& party) const {
  std::string key;
  for (const auto& m : messages_) {
    if (m.kind == PayloadKind::kQubit) continue;
    if (m.sender != party && m.receiver != party) continue;
    key += m.tag;
    key += ':';
    key += std::to_string(m.node);
    key += '=';
    key += std::to_string(m.value);
    key += ';';
  }
  return key;
}

nlohmann::json Transcript::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& m : messages_) {
    arr.push_back({{"step", m.step},
                   {"from", m.sender},
                   {"to", m.receiver},
                   {"kind", to_string(m.kind)},
                   {"tag", m.tag},
                   {"node", m.node},
                   {"value", m.value}});
  }
  return arr;
}

Transcript Transcript::from_json(const nlohmann::json& j) {
  Transcript t;
  for (const auto& e : j) {
    t.send(e.at("from").get<std::string>(), e.at("to").get<std::string>(),
           kind_from_string(e.at("kind").get<std::string>()), e.at("tag").get<std::string>(),
           e.at("node").get<int>(), e.at("value").get<int>());
  }
  return t;
}

}  // namespace dqc
