// Copyright 2026 The Selfreply Authors.
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

#ifndef SELFREPLY_CLI_H_
#define SELFREPLY_CLI_H_

#include <iostream>

namespace selfreply {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Entry point of the selfreply command. Subcommands: ingest, stats,
// keyness, sample, serve, classify, evaluate.
//
// Machine-readable output goes to the file named by --out; the human
// summary goes to `out`. Without --out the machine output goes to `out`
// and the summary to `err`. Progress and errors go to `err`.
//
// Returns 0 on success, 1 on usage errors and 2 on data errors.
int RunCli(int argc, const char *const *argv, std::ostream &out = std::cout,
           std::ostream &err = std::cerr);

}  // namespace selfreply

#endif  // SELFREPLY_CLI_H_
