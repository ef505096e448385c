// Copyright 2026 The PrimeSRL Authors.
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

#ifndef PRIMESRL_TOOLS_CLI_H_
#define PRIMESRL_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace primesrl::cli {

// Exit codes, partitioned by failure class.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitAlignError = 3;
inline constexpr int kExitConfigError = 4;

// Runs the primesrl command line. `args` excludes the program name. Styled
// output is used only when `allow_color` is set and PRIME_SRL_NO_COLOR is
// unset.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, bool allow_color = false);

}  // namespace primesrl::cli

#endif  // PRIMESRL_TOOLS_CLI_H_
