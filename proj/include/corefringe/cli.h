// Copyright 2026 The Corefringe Authors.
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


// Command-line front end. Subcommands:
//
//   eval      accuracy-vs-d curve for an edge list and core list
//   sbm       analytic (and optionally simulated) SNR curve of the block model
//   lattice   analytic (and optionally simulated) SNR curve of the lattice
//   gen       write a sampled block-model or lattice graph as edge/core files
//
// Exit codes: 0 success, 2 configuration error, 3 unreadable or malformed
// input, 4 evaluation error.

#ifndef COREFRINGE_CLI_H_
#define COREFRINGE_CLI_H_

#include <iosfwd>

namespace corefringe {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitEvaluation = 4;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace corefringe

#endif  // COREFRINGE_CLI_H_
