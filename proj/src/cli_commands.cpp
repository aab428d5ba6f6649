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

#include "dqc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "dqc/adversary.hpp"
#include "dqc/chooser.hpp"
#include "dqc/errors.hpp"
#include "dqc/graphs.hpp"
#include "dqc/harness.hpp"
#include "dqc/protocols.hpp"

namespace dqc::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kProtocols = {"bfk", "mf13", "tau", "dbsp", "hi", "vbdqc", "dmpqc"};

bool is_one_of(const std::string& s, const std::vector<std::string>& options) {
  return std::find(options.begin(), options.end(), s) != options.end();
}

Setting parse_setting(const std::string& s) {
  if (s != "ps" && s != "rm") throw UsageError("setting must be ps or rm, got '" + s + "'");
  return setting_from_string(s);
}

std::vector<Setting> parse_clients(const std::vector<std::string>& names, std::size_t fallback_count,
                                   Setting fallback) {
  std::vector<Setting> out;
  for (const auto& n : names) out.push_back(parse_setting(n));
  if (out.empty()) out.assign(fallback_count, fallback);
  return out;
}

GraphTopology load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DqcError("cannot open graph file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw DqcError("malformed graph file '" + path + "': " + e.what());
  }
  try {
    GraphTopology g = graph_from_json(j);
    g.validate();
    return g;
  } catch (const json::exception& e) {
    throw GraphError("malformed graph file '" + path + "': " + e.what());
  }
}

DensityState plus_input(std::size_t n_qubits) {
  if (n_qubits == 0) return DensityState::scalar();
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Vector psi = Vector::Constant(dim, cplx(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  return DensityState::from_qubit_vector(psi);
}

/// Angles go to the non-output nodes in node order; missing entries are 0.
std::map<int, AngleIndex> assign_angles(const GraphTopology& g, const std::vector<int>& angles) {
  std::map<int, AngleIndex> out;
  std::size_t i = 0;
  for (int v : g.nodes) {
    if (g.is_output(v)) continue;
    out[v] = AngleIndex(i < angles.size() ? angles[i] : 0);
    ++i;
  }
  return out;
}

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

void emit(const std::string& text, const RunConfig& config, std::ostream& out) {
  if (config.out_path.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream f(config.out_path, std::ios::binary);
  if (!f) throw DqcError("cannot write '" + config.out_path + "'");
  f << text << '\n';
}

json records_to_json(const std::vector<DbspRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) {
    arr.push_back({{"client", r.client}, {"kind", to_string(r.kind)}, {"theta", r.theta.value()},
                   {"r", r.r}, {"s", r.s}});
  }
  return arr;
}

json run_dbsp_command(const RunConfig& c, Chooser& chooser) {
  const DensityState rho = plus_input(1);
  DbspResult res;
  if (c.setting == "mixed") {
    std::vector<Setting> kinds = parse_clients(c.clients, 2, Setting::kPS);
    const AngleIndex theta0(c.angles.empty() ? 0 : c.angles.front());
    res = run_dbsp_mixed(kinds, rho, chooser, theta0);
  } else {
    const Setting s = parse_setting(c.setting);
    const int k = c.clients.empty() ? 2 : static_cast<int>(c.clients.size());
    res = run_dbsp(s, 0, rho, k, chooser);
  }
  return {{"theta", res.theta.value()},
          {"records", records_to_json(res.records)},
          {"output", density_to_json(res.output.matrix())},
          {"transcript", res.transcript.to_json()}};
}

json run_hi_command(const RunConfig& c, Chooser& chooser) {
  if (c.gadget_bit != 0 && c.gadget_bit != 1) throw UsageError("--bit must be 0 or 1");
  const HiResult res = run_hi_gadget(parse_setting(c.setting), c.gadget_bit, plus_input(1), chooser);
  return {{"b", res.b},
          {"r", res.r},
          {"s", res.s},
          {"record",
           {{"b", res.record.b}, {"r_prime", res.record.r_prime}, {"s", res.record.s}, {"r_tilde", res.record.r_tilde}}},
          {"output", density_to_json(res.output.matrix())},
          {"transcript", res.transcript.to_json()}};
}

json run_graph_protocol(const RunConfig& c, Chooser& chooser, json& doc) {
  const bool trap_based = c.protocol == "vbdqc" || c.protocol == "dmpqc";
  GraphTopology g;
  if (!c.graph_path.empty()) {
    g = load_graph(c.graph_path);
  } else {
    const int n = static_cast<int>(c.angles.size()) + 1;
    g = build_linear_cluster(trap_based ? std::max(2, n) : n);
  }
  const auto angles = assign_angles(g, c.angles);
  doc["graph"] = to_json(g);
  const DensityState input = plus_input(g.inputs.size());
  const auto adversary = make_adversary(c.attack, trap_based ? FixedReportAttack::kKnownTrap : -1);

  ProtocolResult res;
  if (!trap_based) {
    const BdqcInstance inst{g, angles, input};
    if (c.protocol == "bfk") res = run_bfk09(inst, chooser, adversary.get());
    if (c.protocol == "mf13") res = run_mf13(inst, chooser, adversary.get());
    if (c.protocol == "tau") res = run_tau(inst, chooser, adversary.get());
  } else if (c.protocol == "vbdqc") {
    const VbdqcInstance inst{g, angles, input};
    res = run_vbdqc(parse_setting(c.setting), inst, chooser, adversary.get());
  } else {
    DmpqcInstance inst;
    inst.base = g;
    inst.clients = parse_clients(c.clients, 1, Setting::kPS);
    inst.angles = angles;
    inst.input = input;
    res = run_dmpqc(inst, chooser, adversary.get());
  }
  return res.to_json();
}

}  // namespace

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  if (!is_one_of(config.protocol, kProtocols)) throw UsageError("unknown protocol '" + config.protocol + "'");
  for (int a : config.angles) {
    if (a < 0 || a > 7) throw UsageError("angles must be indices in 0..7");
  }
  if (config.setting == "mixed" && config.protocol != "dbsp") throw UsageError("--setting mixed is only for dbsp");
  if (!is_one_of(config.attack, {"honest", "z", "report", "basis"})) {
    throw UsageError("unknown attack '" + config.attack + "'");
  }

  SamplingChooser chooser(derive_seed(config.seed, "run/" + config.protocol));
  json doc = {{"protocol", config.protocol}, {"seed", config.seed}, {"angles", config.angles}};
  if (is_one_of(config.protocol, {"dbsp", "hi", "vbdqc"})) doc["setting"] = config.setting;
  if (is_one_of(config.protocol, {"dbsp", "dmpqc"})) doc["clients"] = config.clients;
  json body;
  if (config.protocol == "dbsp") {
    body = run_dbsp_command(config, chooser);
  } else if (config.protocol == "hi") {
    body = run_hi_command(config, chooser);
  } else {
    body = run_graph_protocol(config, chooser, doc);
  }
  doc["result"] = std::move(body);
  emit(dump(doc, config.pretty), config, out);
  return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  std::vector<std::string> names = config.checks;
  if (names.empty()) names.push_back("all");
  for (const auto& n : names) {
    if (n != "all" && !is_one_of(n, check_names())) throw UsageError("unknown check '" + n + "'");
  }
  std::vector<CheckReport> reports;
  for (const auto& n : names) {
    auto part = run_checks(n, config.seed, config.trials);
    reports.insert(reports.end(), part.begin(), part.end());
  }
  std::ostringstream text;
  for (const auto& r : reports) text << dump(r.to_json(), false) << '\n';
  if (!config.json_only) text << summary_table(reports);
  std::string s = text.str();
  if (!s.empty() && s.back() == '\n') s.pop_back();
  emit(s, config, out);
  for (const auto& r : reports) {
    if (!r.pass) return kCheckFailed;
  }
  return kOk;
}

int cmd_graph(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  if (config.graph_path.empty()) throw UsageError("graph needs --graph FILE");
  const GraphTopology base = load_graph(config.graph_path);
  SamplingChooser chooser(derive_seed(config.seed, "graph"));
  const DTGraph dt = dotted_triple_graph(base, chooser);
  emit(dump(to_json(dt), config.pretty), config, out);
  return kOk;
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distributed blind quantum computation simulator"};
  app.require_subcommand(1);
  RunConfig c;

  auto* run = app.add_subcommand("run", "Run one protocol instance and print its result as JSON");
  run->add_option("protocol", c.protocol, "bfk, mf13, tau, dbsp, hi, vbdqc or dmpqc")->required();
  run->add_option("--setting", c.setting, "ps or rm (dbsp also accepts mixed)");
  run->add_option("--clients", c.clients, "Client kinds, e.g. ps,rm")->delimiter(',');
  run->add_option("--graph", c.graph_path, "Graph JSON file; default is a path sized from --angles");
  run->add_option("--angles", c.angles, "Measurement angle indices k (angle k*pi/4)")->delimiter(',');
  run->add_option("--attack", c.attack, "honest, z, report or basis");
  run->add_option("--bit", c.gadget_bit, "H/I gadget bit: 1 = H, 0 = identity");

  auto* verify = app.add_subcommand("verify", "Run the check battery");
  verify->add_option("checks", c.checks, "Check groups (default all)");
  verify->add_option("--trials", c.trials, "Sampled trials for statistical checks (0 = default)");
  verify->add_flag("--json", c.json_only, "Print JSON lines only");

  auto* graph = app.add_subcommand("graph", "Build the dotted triple-graph of a base graph");
  graph->add_option("--graph", c.graph_path, "Base graph JSON file")->required();

  for (auto* sub : {run, verify, graph}) {
    sub->add_option("--seed", c.seed, "Master seed");
    sub->add_option("--out", c.out_path, "Write output to a file instead of stdout");
    sub->add_flag("--pretty", c.pretty, "Indent JSON");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (run->parsed()) return cmd_run(c, out, err);
    if (verify->parsed()) return cmd_verify(c, out, err);
    return cmd_graph(c, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DqcError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace dqc::cli
