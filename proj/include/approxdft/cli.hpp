// Copyright 2026 The approxdft Authors.
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

#ifndef APPROXDFT_CLI_HPP_
#define APPROXDFT_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace approxdft::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verification or empty search
inline constexpr int kExitUsage = 2;   // bad arguments or unreadable input

// Runs the command line `args` (args[0] is the program name) and returns
// the process exit status. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace approxdft::cli

#endif  // APPROXDFT_CLI_HPP_
