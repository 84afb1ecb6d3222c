// Copyright 2026 The qbn Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef QBN_TOOLS_CLI_HPP
#define QBN_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qbn::cli {

/// Exit codes of the qbn tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // domain error or failed check
inline constexpr int kExitUsage = 2;    // I/O or usage error

/// Runs the tool with `args` (program name excluded), writing normal output
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qbn::cli

#endif  // QBN_TOOLS_CLI_HPP
