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

// Command-line front end: run a protocol, run the check battery, or build a
// dotted triple-graph. Everything random derives from --seed.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dqc::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2, kInputError = 3 };

struct RunConfig {
  std::string command;
  std::string protocol;
  std::string setting = "ps";
  std::vector<std::string> clients;
  std::uint64_t seed = 0;
  int trials = 0;
  std::string graph_path;
  std::vector<int> angles;
  std::string out_path;
  std::string attack = "honest";
  int gadget_bit = 1;
  std::vector<std::string> checks;
  bool json_only = false;
  bool pretty = false;
};

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_graph(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; returns the process exit code.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dqc::cli
