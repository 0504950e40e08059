// Copyright 2026 The circorbit Authors.
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

#ifndef CIRCORBIT_CLI_HPP_
#define CIRCORBIT_CLI_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace circorbit::cli {

// Stable process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationMismatch = 1,
  kParameterError = 2,
  kDisconnectedGraph = 3,
  kBudgetExceeded = 4,
  kInternalError = 70,
};

// Environment variable overriding the default generation/enumeration budget.
inline constexpr const char* kBudgetEnvVar = "CIRCORBIT_BUDGET";

// Runs one command line (args excludes the program name). Everything is
// written to `out` and `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circorbit::cli

#endif  // CIRCORBIT_CLI_HPP_
