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

// Verification battery. Every check returns a CheckReport whose pass flag is
// exactly (deviation <= tolerance). Distribution comparisons enumerate
// branches; only the herald statistics and attack trial counts are sampled.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "dqc/graphs.hpp"
#include "dqc/oracle.hpp"
#include "dqc/protocols.hpp"

namespace dqc {

struct CheckReport {
  std::string check;
  std::string anchor;  // short identifier of the property checked
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string count_kind = "branches";  // or "trials"
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  nlohmann::json details = nlohmann::json::object();

  /// One JSON line: {check, anchor, deviation, tolerance, pass, branches|trials, seed, details}.
  nlohmann::json to_json() const;
};

CheckReport make_report(std::string check, std::string anchor, double deviation, double tolerance,
                        std::uint64_t count, std::uint64_t seed, std::string count_kind = "branches");

inline constexpr double kAlgebraTolerance = 1e-10;
inline constexpr double kEnumerationTolerance = 1e-12;

// Random fixtures, all drawn from std::mt19937_64.
Matrix random_unitary(int dim, std::mt19937_64& rng);
QubitBasis random_basis(std::mt19937_64& rng);
RoutineSpec random_spec(Setting setting, int d_x, std::mt19937_64& rng);

/// kraus_ps against kraus_rm on random specs with d_x drawn from `dims`.
CheckReport check_kraus_equality(int n_trials, const std::vector<int>& dims, std::uint64_t seed);
/// Bit-exact t_transform(t_transform(spec)) == spec.
CheckReport check_t_involution(int n_trials, std::uint64_t seed);
/// The five Bell-pair contraction identities, one report each.
std::vector<CheckReport> check_simulator_identities(std::uint64_t seed, int n_omega = 20);
/// Bell measurement of halves of two fresh pairs: herald frequencies.
CheckReport check_herald_statistics(int n_trials, std::uint64_t seed);
/// Exact version: each herald has probability 1/4 and the corrected outer
/// wires carry the identity channel.
CheckReport check_herald_postselection(std::uint64_t seed);

/// Delegated output of BFK09, MF13 and tau against the oracle, per branch,
/// on clusters of length 1..4 and a 2x5 brickwork fragment.
CheckReport check_bfk_correctness(std::uint64_t seed);
/// Server-view total variation between pairs of computations, by full
/// enumeration. `protocol` is bfk, mf13 or tau.
CheckReport check_blindness(const std::string& protocol, std::uint64_t seed);
/// `pair` is bfk-mf13, bfk-tau, dbsp, hi or vbdqc.
CheckReport check_equivalence(const std::string& pair, std::uint64_t seed);
/// Output of DBSP against P(theta) rho P(theta)^dagger for every branch.
CheckReport check_dbsp_formula(std::uint64_t seed);
/// theta stays uniform given the view of the server and any k-1 clients.
CheckReport check_dbsp_secrecy(std::uint64_t seed);
/// Output against Pauli W rho W^dagger Pauli for both b and all branches.
CheckReport check_hi_gadget(std::uint64_t seed);
/// Counts and invariants of DT(G) on random base graphs.
CheckReport check_dt_graph(int n_graphs, std::uint64_t seed);
/// `protocol` is vbdqc-ps, vbdqc-rm or dmpqc; `attack` is honest, z, report
/// or basis. Exact rates come from enumeration; `n_trials` samples are
/// added with a Wilson interval.
CheckReport check_traps(const std::string& protocol, const std::string& attack, int n_trials, std::uint64_t seed);

/// Oracle pattern for the computation subgraph of a path base: the path with
/// every edge subdivided, base angles on the original vertices, 0 on dots.
Pattern subdivided_path_pattern(const GraphTopology& base, const std::map<int, AngleIndex>& angles,
                                const DensityState& input);

/// Wilson score interval at z = 1.96.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t n);

/// Names accepted by run_checks.
const std::vector<std::string>& check_names();
/// Runs one named group or "all"; throws DqcError for unknown names.
std::vector<CheckReport> run_checks(const std::string& name, std::uint64_t seed, int trials);
std::string summary_table(const std::vector<CheckReport>& reports);

}  // namespace dqc
