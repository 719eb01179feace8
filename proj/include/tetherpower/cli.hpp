// Copyright 2026 The Tetherpower Authors
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

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with in-memory streams.
//
//   tetherpower solve-circuit --config c.json --lengths 6.1,1.5 --thrusts 4,4
//   tetherpower boundary      --config c.json --lengths 6.1,1.5 --rays 64
//   tetherpower sweep         --config c.json --kind heatmap|length|intermediate
//   tetherpower optimize      --config c.json --mode one|two|compare --setpoint 30,15
//
// Exit status: 0 success, 1 internal error, 2 malformed configuration or
// arguments, 3 infeasible. Errors are written to the error stream as one
// JSON object per line.

#ifndef TETHERPOWER_CLI_HPP_
#define TETHERPOWER_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace tetherpower::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kBadInput = 2,
  kInfeasible = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tetherpower::cli

#endif  // TETHERPOWER_CLI_HPP_
