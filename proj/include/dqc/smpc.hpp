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

// Ideal classical trusted party. Holds every secret of the multi-client
// protocols, does the angle arithmetic, checks traps and releases output keys
// only after global acceptance. Nothing it stores appears in any party view.

#include <map>
#include <set>
#include <string>

#include "json.hpp"
#include "dqc/angle.hpp"

namespace dqc {

struct GadgetRecord {
  int b = 0;
  int r_prime = 0;  // choice within the gamma family
  int s = 0;        // server's measurement of the auxiliary qubit
  int r_tilde = 0;  // RM form only
  bool operator==(const GadgetRecord&) const = default;
};

struct SmpcState {
  std::map<int, AngleIndex> theta;  // per-node pad angle
  std::map<int, int> x;             // per-node X pad
  std::map<int, int> r;             // per-node measurement flip
  std::map<int, int> a;             // input one-time-pad bit
  std::map<int, int> d;             // dummy bit
  std::map<int, GadgetRecord> gadgets;
  std::map<int, int> s;             // reported measurement results
  bool abort = false;
  bool accepted = false;

  bool operator==(const SmpcState&) const = default;
  nlohmann::json to_json() const;
  static SmpcState from_json(const nlohmann::json& j);
};

class SmpcResource {
 public:
  void register_party(const std::string& id) { parties_.insert(id); }
  bool is_registered(const std::string& id) const { return parties_.count(id) != 0; }

  /// Operations:
  ///   store        {field, node, value}     field in theta, x, r, a, d, s
  ///   add_angle    {node, value}            theta[node] += value
  ///   delta_minus  {node, value}            -> {delta: value - theta[node]}
  ///   check_traps  {traps: [node...]}       -> {accepted}; sets abort on mismatch
  ///   abort        {}
  ///   release_keys {nodes: [node...]}       -> {node: {theta, x}}; refused before accept
  /// Throws SmpcError on unknown ops, unregistered callers or refused requests.
  nlohmann::json call(const std::string& caller, const std::string& op, const nlohmann::json& args);

  /// The trusted party's own memory, for protocol code running inside it.
  SmpcState& internal() { return state_; }
  const SmpcState& internal() const { return state_; }

 private:
  std::set<std::string> parties_;
  SmpcState state_;
};

}  // namespace dqc
