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

// Bell-pair simulators that sit between a dishonest party and the channel:
// one hands out halves of |Phi^{00}>, the other Bell-measures two wires and
// emits the herald. Heralds travel as transcript messages with the reserved
// tag kHeraldTag so that heralding-adaption is a plain transcript filter.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "dqc/factored_state.hpp"
#include "dqc/transcript.hpp"

namespace dqc {

inline constexpr const char* kHeraldTag = "herald";

struct BellPair {
  QubitId inner;
  QubitId outer;
};

/// Adds |Phi^{00}> to `state`; the herald of this simulator is always (0, 0).
BellPair sim_bell_prep(FactoredState& state);

struct FilterResult {
  std::vector<Message> forwarded;
  std::vector<PauliHerald> heralds;
};

/// Forwards messages whose tag is not in `suppressed`, in order, and logs
/// suppressed herald messages without forwarding them.
FilterResult heralding_filter(const std::vector<Message>& messages, const std::set<std::string>& suppressed);

PauliHerald herald_from_value(int value);
inline int herald_value(PauliHerald h) { return 2 * h.b0 + h.b1; }

/// A run context's channel: every message passes through the filter.
class HeraldedChannel {
 public:
  explicit HeraldedChannel(std::set<std::string> suppressed = {kHeraldTag}) : suppressed_(std::move(suppressed)) {}

  void send(const Message& m);
  /// Bell-measures (a, b), removing both, and emits the herald.
  PauliHerald sim_bell_meas(FactoredState& state, QubitId a, QubitId b, Chooser& chooser);

  const std::vector<Message>& forwarded() const { return forwarded_.messages(); }
  const std::vector<PauliHerald>& heralds() const { return heralds_; }
  const Transcript& forwarded_transcript() const { return forwarded_; }

 private:
  std::set<std::string> suppressed_;
  Transcript forwarded_;
  std::vector<PauliHerald> heralds_;
  int step_ = 0;
};

nlohmann::json heralds_to_json(const std::vector<PauliHerald>& heralds);
std::vector<PauliHerald> heralds_from_json(const nlohmann::json& j);

struct RerunResult {
  int attempts = 0;
  std::vector<PauliHerald> heralds;  // of the accepted attempt
};

/// Calls `attempt(i)` for i = 0, 1, ... until every returned herald is (0, 0).
/// Throws RerunExhaustedError after `max_attempts` failures.
RerunResult rerun_until_identity(const std::function<std::vector<PauliHerald>(int)>& attempt,
                                 int max_attempts = 64);

}  // namespace dqc
