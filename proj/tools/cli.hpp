// Copyright 2026 The gammahom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAMMAHOM_TOOLS_CLI_HPP
#define GAMMAHOM_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gammahom::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

struct Config {
  std::string space;
  std::string ring = "z";
  int max_degree = 3;
  int max_iterations = 6;
  std::uint64_t cell_budget = std::uint64_t{1} << 26;
  /// 0: every available core.
  unsigned threads = 0;
  /// table, json or csv; empty picks the command default (json for dump).
  std::string format;
  std::string out;
  std::string suite = "all";
  /// Tower level for dump.
  int level = 1;
  /// Block sizes for the wedge and smash suites.
  int n = 1;
  int n_prime = 1;
};

/// Runs one invocation. Output goes to `out` unless --out names a file;
/// diagnostics go to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gammahom::cli

#endif  // GAMMAHOM_TOOLS_CLI_HPP
