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

#ifndef KUNIFORM_STATE_IO_H_
#define KUNIFORM_STATE_IO_H_

#include <string>
#include <string_view>

#include "kuniform/state.h"

namespace kuniform {

// Plain state text:
//
//   # comment
//   nqubits 3
//   000 0.7071067811865476 0
//   111 0.7071067811865476
//
// `im` is optional. Errors carry 1-based line numbers.
PureState ParsePlainState(std::string_view text, bool normalize = false);

// Writes amplitudes with round-trip precision, one line per support entry
// in ascending basis order.
std::string WritePlainState(const PureState& psi);

// True when the first meaningful token of `text` is "nqubits".
bool LooksLikePlainState(std::string_view text);

}  // namespace kuniform

#endif  // KUNIFORM_STATE_IO_H_
