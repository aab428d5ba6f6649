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

#include "dqc/smpc.hpp"

#include "dqc/errors.hpp"

namespace dqc {

namespace {

nlohmann::json bits_to_json(const std::map<int, int>& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

std::map<int, int> bits_from_json(const nlohmann::json& j) {
  std::map<int, int> m;
  for (const auto& [k, v] : j.items()) m[std::stoi(k)] = v.get<int>();
  return m;
}

}  // namespace

nlohmann::json SmpcState::to_json() const {
  nlohmann::json th = nlohmann::json::object();
  for (const auto& [k, v] : theta) th[std::to_string(k)] = v.value();
  nlohmann::json g = nlohmann::json::object();
  for (const auto& [k, v] : gadgets) {
    g[std::to_string(k)] = {{"b", v.b}, {"r_prime", v.r_prime}, {"s", v.s}, {"r_tilde", v.r_tilde}};
  }
  return {{"theta", th},
          {"x", bits_to_json(x)},
          {"r", bits_to_json(r)},
          {"a", bits_to_json(a)},
          {"d", bits_to_json(d)},
          {"gadgets", g},
          {"s", bits_to_json(s)},
          {"abort", abort},
          {"accepted", accepted}};
}

SmpcState SmpcState::from_json(const nlohmann::json& j) {
  SmpcState st;
  for (const auto& [k, v] : j.at("theta").items()) st.theta[std::stoi(k)] = AngleIndex(v.get<int>());
  st.x = bits_from_json(j.at("x"));
  st.r = bits_from_json(j.at("r"));
  st.a = bits_from_json(j.at("a"));
  st.d = bits_from_json(j.at("d"));
  for (const auto& [k, v] : j.at("gadgets").items()) {
    st.gadgets[std::stoi(k)] = {v.at("b").get<int>(), v.at("r_prime").get<int>(), v.at("s").get<int>(),
                                v.at("r_tilde").get<int>()};
  }
  st.s = bits_from_json(j.at("s"));
  st.abort = j.at("abort").get<bool>();
  st.accepted = j.at("accepted").get<bool>();
  return st;
}

nlohmann::json SmpcResource::call(const std::string& caller, const std::string& op, const nlohmann::json& args) {
  if (!is_registered(caller)) throw SmpcError("caller '" + caller + "' is not registered");
  if (op == "store") {
    const std::string field = args.at("field").get<std::string>();
    const int node = args.at("node").get<int>();
    const int value = args.at("value").get<int>();
    if (field == "theta") {
      state_.theta[node] = AngleIndex(value);
    } else if (field == "x") {
      state_.x[node] = value & 1;
    } else if (field == "r") {
      state_.r[node] = value & 1;
    } else if (field == "a") {
      state_.a[node] = value & 1;
    } else if (field == "d") {
      state_.d[node] = value & 1;
    } else if (field == "s") {
      state_.s[node] = value & 1;
    } else {
      throw SmpcError("unknown field '" + field + "'");
    }
    return nlohmann::json::object();
  }
  if (op == "add_angle") {
    const int node = args.at("node").get<int>();
    state_.theta[node] += AngleIndex(args.at("value").get<int>());
    return nlohmann::json::object();
  }
  if (op == "delta_minus") {
    const int node = args.at("node").get<int>();
    const AngleIndex gamma(args.at("value").get<int>());
    return {{"delta", (gamma - state_.theta[node]).value()}};
  }
  if (op == "check_traps") {
    bool ok = !state_.abort;
    for (const auto& t : args.at("traps")) {
      const int node = t.get<int>();
      auto rs = state_.r.find(node);
      auto ss = state_.s.find(node);
      if (rs == state_.r.end() || ss == state_.s.end() || rs->second != ss->second) ok = false;
    }
    if (!ok) state_.abort = true;
    state_.accepted = ok;
    return {{"accepted", ok}};
  }
  if (op == "abort") {
    state_.abort = true;
    state_.accepted = false;
    return nlohmann::json::object();
  }
  if (op == "release_keys") {
    if (!state_.accepted || state_.abort) throw SmpcError("keys are released only after acceptance");
    nlohmann::json out = nlohmann::json::object();
    for (const auto& n : args.at("nodes")) {
      const int node = n.get<int>();
      out[std::to_string(node)] = {{"theta", state_.theta[node].value()}, {"x", state_.x[node]}};
    }
    return out;
  }
  throw SmpcError("unknown SMPC operation '" + op + "'");
}

}  // namespace dqc
