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

#include "dqc/harness.hpp"

#include <cstdio>
#include <sstream>

#include "dqc/errors.hpp"

namespace dqc {

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["anchor"] = anchor;
  j["deviation"] = deviation;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  j[count_kind] = count;
  j["seed"] = seed;
  j["details"] = details;
  return j;
}

CheckReport make_report(std::string check, std::string anchor, double deviation, double tolerance,
                        std::uint64_t count, std::uint64_t seed, std::string count_kind) {
  CheckReport r;
  r.check = std::move(check);
  r.anchor = std::move(anchor);
  r.deviation = deviation;
  r.tolerance = tolerance;
  r.pass = deviation <= tolerance;
  r.count = count;
  r.seed = seed;
  r.count_kind = std::move(count_kind);
  return r;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"kraus", "involution", "identities", "heralds", "bfk",    "blindness",
                                                 "equivalence", "dbsp", "hi",         "dtgraph", "traps"};
  return names;
}

std::vector<CheckReport> run_checks(const std::string& name, std::uint64_t seed, int trials) {
  std::vector<CheckReport> out;
  if (name == "all") {
    for (const auto& n : check_names()) {
      auto part = run_checks(n, seed, trials);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "kraus") {
    out.push_back(check_kraus_equality(100, {2, 4, 8}, seed));
  } else if (name == "involution") {
    out.push_back(check_t_involution(100, seed));
  } else if (name == "identities") {
    out = check_simulator_identities(seed);
  } else if (name == "heralds") {
    out.push_back(check_herald_statistics(trials > 0 ? trials : 10000, seed));
    out.push_back(check_herald_postselection(seed));
  } else if (name == "bfk") {
    out.push_back(check_bfk_correctness(seed));
  } else if (name == "blindness") {
    for (const char* p : {"bfk", "mf13", "tau"}) out.push_back(check_blindness(p, seed));
  } else if (name == "equivalence") {
    for (const char* p : {"bfk-mf13", "bfk-tau", "dbsp", "hi", "vbdqc"}) out.push_back(check_equivalence(p, seed));
  } else if (name == "dbsp") {
    out.push_back(check_dbsp_formula(seed));
    out.push_back(check_dbsp_secrecy(seed));
  } else if (name == "hi") {
    out.push_back(check_hi_gadget(seed));
  } else if (name == "dtgraph") {
    out.push_back(check_dt_graph(100, seed));
  } else if (name == "traps") {
    const int n = trials > 0 ? trials : 200;
    for (const char* a : {"honest", "z", "report", "basis"}) out.push_back(check_traps("vbdqc-ps", a, n, seed));
    for (const char* a : {"honest", "z"}) out.push_back(check_traps("vbdqc-rm", a, n, seed));
    for (const char* a : {"honest", "z", "report", "basis"}) out.push_back(check_traps("dmpqc", a, n, seed));
  } else {
    throw DqcError("unknown check '" + name + "'");
  }
  return out;
}

std::string summary_table(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-32s %-5s %12s %10s %10s\n", "check", "pass", "deviation", "tolerance", "count");
  os << line;
  int failed = 0;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-32s %-5s %12.3e %10.1e %10llu\n", r.check.c_str(), r.pass ? "yes" : "NO",
                  r.deviation, r.tolerance, static_cast<unsigned long long>(r.count));
    os << line;
    if (!r.pass) ++failed;
  }
  os << reports.size() - failed << "/" << reports.size() << " checks passed\n";
  return os.str();
}

}  // namespace dqc
