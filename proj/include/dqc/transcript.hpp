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

// Ordered message log between protocol parties.

#include <string>
#include <vector>

#include "json.hpp"

namespace dqc {

enum class PayloadKind { kAngle, kBit, kQubit, kHerald };

const char* to_string(PayloadKind kind);

struct Message {
  int step = 0;
  std::string sender;
  std::string receiver;
  PayloadKind kind = PayloadKind::kBit;
  std::string tag;  // e.g. "delta", "s", "theta"
  int node = -1;    // graph node or client index the message refers to, -1 if none
  int value = 0;    // angle index, bit, qubit handle, or 2*b0 + b1 for heralds
};

class Transcript {
 public:
  const Message& send(std::string sender, std::string receiver, PayloadKind kind, std::string tag, int node,
                      int value);

  const std::vector<Message>& messages() const { return messages_; }
  std::size_t size() const { return messages_.size(); }

  /// Messages sent or received by `party`.
  std::vector<Message> view(const std::string& party) const;
  /// Compact string of the classical payloads seen by `party`, usable as a
  /// distribution key. Qubit handles are excluded.
  std::string classical_key(const std::string& party) const;

  nlohmann::json to_json() const;
  static Transcript from_json(const nlohmann::json& j);

 private:
  std::vector<Message> messages_;
};

}  // namespace dqc
