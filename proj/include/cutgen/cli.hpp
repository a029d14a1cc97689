// Copyright 2026 The cutgen authors
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

#ifndef CUTGEN_CLI_HPP_
#define CUTGEN_CLI_HPP_

#include <string>
#include <vector>

namespace cutgen {

// Exit code 0: the command ran (verdicts live inside the JSON payload).
// Exit code 1: domain error or malformed input, `output` is a JSON error
// object.  Exit code 2: usage error, the message is in `error`.
struct CommandResult {
  int exit_code = 0;
  std::string output;  // JSON document or SVG, printed to stdout
  std::string error;   // diagnostics, printed to stderr
};

// argv without the program name.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace cutgen

#endif  // CUTGEN_CLI_HPP_
