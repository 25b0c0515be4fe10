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

#ifndef KUNIFORM_ERROR_H_
#define KUNIFORM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace kuniform {

enum class ErrorCode {
  kInvalidArgument,
  kNotNormalized,
  kDuplicateBasisState,
  kBadBitstring,
  kDimensionMismatch,
  kSyntaxError,
  kQubitCoverageError,
  kBlockWidthMismatch,
  kSubsetTooLarge,
  kIndexOutOfRange,
  kNonHermitianResidue,
  kInternalInconsistency,
  kDuplicateRow,
  kNotUniformMagnitude,
  kSupportTooLarge,
  kUnknownId,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception; `code()` lets
// callers (tests, the CLI) branch on the failure kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace kuniform

#endif  // KUNIFORM_ERROR_H_
