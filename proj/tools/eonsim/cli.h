// Copyright 2026 The eonsim Authors
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

// Command-line front end. RunCli is the whole program minus process exit,
// so tests can drive it in-process.

#ifndef EONSIM_TOOLS_CLI_H_
#define EONSIM_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace eonsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

// Loads grammar: "start:stop:step" (stop included when reached) or a comma
// separated list. Throws ConfigError when malformed.
std::vector<double> ParseLoads(std::string_view text);

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace eonsim::cli

#endif  // EONSIM_TOOLS_CLI_H_
