// Copyright 2026 The mibs Authors
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
#ifndef MIBS_TOOLS_CLI_COMMANDS_HPP
#define MIBS_TOOLS_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mibs/permutation.hpp"

namespace mibs::cli {

/// Exit codes of the tool.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// First line: the degree. Then one cycle string per line; blank lines and
/// lines starting with '#' are skipped.
std::vector<Permutation> parse_generator_file(std::istream &in, std::size_t &degree);

}  // namespace mibs::cli

#endif  // MIBS_TOOLS_CLI_COMMANDS_HPP
