// Copyright 2026 The qmfpr Authors
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

#ifndef QMFPR_TOOLS_CLI_H_
#define QMFPR_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace qmfpr::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

// Runs the command line `args` (args[0] is the program name). Summary
// lines go to `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Shortest round-trip decimal; "inf"/"-inf"/"nan" for non-finite values.
std::string FormatDouble(double v);

}  // namespace qmfpr::cli

#endif  // QMFPR_TOOLS_CLI_H_
