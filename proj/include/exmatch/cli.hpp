// Copyright 2026 The exmatch Authors
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

// Command-line front end. Exit codes:
//
//   0   success (solve: yes)
//   1   solve: certified no
//   2   solve: unknown, phase-2 budget exhausted
//   64  usage error
//   65  instance too large for an oracle
//   66  unreadable or invalid input
//   70  internal error
//   78  missing or inconsistent configuration

#ifndef EXMATCH_CLI_HPP
#define EXMATCH_CLI_HPP

#include <ostream>

namespace exmatch::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitOracleCap = 65;
inline constexpr int kExitInput = 66;
inline constexpr int kExitInternal = 70;
inline constexpr int kExitConfig = 78;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace exmatch::cli

#endif  // EXMATCH_CLI_HPP
