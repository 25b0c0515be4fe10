// Copyright 2026 The kuniform Authors
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

#ifndef KUNIFORM_CLI_H_
#define KUNIFORM_CLI_H_

#include <iosfwd>

namespace kuniform {

inline constexpr int kExitPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFail = 2;

// Entry point of the `kuniform` tool. `in` backs the "-" path.
// Returns 0 on a passing verdict, 2 on a failing one, 1 on any error.
int RunCli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
           std::ostream& err);

}  // namespace kuniform

#endif  // KUNIFORM_CLI_H_
