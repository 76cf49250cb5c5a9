// Copyright 2026 The contract_forge Authors
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

#ifndef CONTRACT_FORGE_TOOLS_CLI_HPP_
#define CONTRACT_FORGE_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace contract_forge::cli {

// Exit codes. Results go to `out`, diagnostics to `err`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitSolver = 3;

// Environment variable overriding the bisection tolerance.
inline constexpr const char* kToleranceEnv = "CONTRACT_FORGE_TOL";

// `args` excludes the program name, e.g. {"solve", "example1.json"}.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace contract_forge::cli

#endif  // CONTRACT_FORGE_TOOLS_CLI_HPP_
