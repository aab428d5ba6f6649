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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dqc/cli.hpp"
#include "dqc/harness.hpp"

namespace {

using namespace dqc;

constexpr std::uint64_t kSeed = 42;
const std::string kData = DQC_TEST_DATA_DIR;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Outcome all_pass(const std::vector<CheckReport>& reports, double elapsed, double budget) {
  bool ok = elapsed < budget;
  double worst = 0;
  std::string failed;
  for (const auto& r : reports) {
    ok = ok && r.pass;
    worst = std::max(worst, r.deviation);
    if (!r.pass) failed += " " + r.check;
  }
  std::string d = fmt("max deviation %.2e, %.2fs", worst, elapsed);
  if (!failed.empty()) d += ", failed:" + failed;
  if (elapsed >= budget) d += fmt(", over the %.0fs budget", budget);
  return {ok, d};
}

template <class F>
Outcome timed(F&& make_reports, double budget = 1e9) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<CheckReport> reps = make_reports();
  return all_pass(reps, seconds_since(t0), budget);
}

std::string cli(const std::vector<std::string>& args, int& code) {
  std::vector<const char*> argv = {"dqc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = cli::run_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> commands = {
      {"run", "bfk", "--graph", kData + "/line3.json", "--angles", "1,6", "--seed", "9"},
      {"run", "mf13", "--angles", "3,2,5", "--seed", "9"},
      {"run", "tau", "--angles", "3,2,5", "--seed", "9"},
      {"run", "dbsp", "--setting", "mixed", "--clients", "ps,rm,ps", "--seed", "9"},
      {"run", "dbsp", "--setting", "rm", "--clients", "rm,rm", "--seed", "9"},
      {"run", "hi", "--setting", "rm", "--seed", "9"},
      {"run", "vbdqc", "--setting", "ps", "--angles", "2", "--attack", "z", "--seed", "9"},
      {"run", "dmpqc", "--clients", "ps,rm", "--seed", "7"},
      {"graph", "--graph", kData + "/line3.json", "--seed", "9"},
      {"verify", "kraus", "identities", "dtgraph", "--seed", "9"},
  };
  int compared = 0;
  for (const auto& c : commands) {
    int code_a = 0, code_b = 0;
    const std::string a = cli(c, code_a);
    const std::string b = cli(c, code_b);
    if (code_a != 0 || code_a != code_b || a.empty() || a != b) return {false, "mismatch on: " + c[0] + " " + c[1]};
    ++compared;
  }
  return {true, std::to_string(compared) + " commands byte-identical on repeat"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"Kraus equality of PS and RM forms",
       [] { return timed([] { return std::vector{check_kraus_equality(120, {2, 4, 8}, kSeed)}; }, 5.0); }},
      {"five Bell-pair simulator identities",
       [] { return timed([] { return check_simulator_identities(kSeed, 20); }, 5.0); }},
      {"T-transformation is self-inverse", [] { return timed([] { return std::vector{check_t_involution(100, kSeed)}; }); }},
      {"herald statistics Pr[(0,0)] = 1/4",
       [] {
         const auto r = check_herald_statistics(10000, kSeed);
         return Outcome{r.pass, fmt("p00 = %.4f (deviation %.4f, tolerance 0.015)",
                                    r.details.at("frequencies").at(0).get<double>(), r.deviation)};
       }},
      {"BFK correctness against the oracle",
       [] { return timed([] { return std::vector{check_bfk_correctness(kSeed)}; }, 60.0); }},
      {"perfect blindness of BFK and MF13",
       [] { return timed([] { return std::vector{check_blindness("bfk", kSeed), check_blindness("mf13", kSeed)}; }); }},
      {"PS/RM protocol equivalence",
       [] {
         return timed([] {
           std::vector<CheckReport> v;
           for (const char* p : {"bfk-mf13", "dbsp", "hi", "vbdqc"}) v.push_back(check_equivalence(p, kSeed));
           return v;
         });
       }},
      {"DBSP output formula", [] { return timed([] { return std::vector{check_dbsp_formula(kSeed)}; }); }},
      {"H/I gadget output", [] { return timed([] { return std::vector{check_hi_gadget(kSeed)}; }); }},
      {"dotted triple-graph invariants", [] { return timed([] { return std::vector{check_dt_graph(100, kSeed)}; }); }},
      {"trap verification",
       [] {
         std::vector<CheckReport> v;
         const auto t0 = std::chrono::steady_clock::now();
         // In RM form the server neither measures nor reports, so only the
         // qubit-level attack applies there.
         for (const char* p : {"vbdqc-ps", "dmpqc"}) {
           for (const char* a : {"honest", "z", "report", "basis"}) v.push_back(check_traps(p, a, 100, kSeed));
         }
         for (const char* a : {"honest", "z"}) v.push_back(check_traps("vbdqc-rm", a, 100, kSeed));
         Outcome o = all_pass(v, seconds_since(t0), 1e9);
         std::string rates;
         for (const auto& r : v) {
           rates += " " + r.check.substr(6) + "=" + fmt("%.4f", r.details.at("abort_rate_exact").get<double>());
         }
         o.detail += "; abort rates" + rates;
         return o;
       }},
      {"CLI determinism", [] { return determinism(); }},
  };

  int failed = 0;
  int index = 1;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %2d: %s (%s)\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
    ++index;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
