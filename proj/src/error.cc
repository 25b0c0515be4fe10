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

#include "kuniform/error.h"

namespace kuniform {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kDuplicateBasisState: return "DuplicateBasisState";
    case ErrorCode::kBadBitstring: return "BadBitstring";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kQubitCoverageError: return "QubitCoverageError";
    case ErrorCode::kBlockWidthMismatch: return "BlockWidthMismatch";
    case ErrorCode::kSubsetTooLarge: return "SubsetTooLarge";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNonHermitianResidue: return "NonHermitianResidue";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
    case ErrorCode::kDuplicateRow: return "DuplicateRow";
    case ErrorCode::kNotUniformMagnitude: return "NotUniformMagnitude";
    case ErrorCode::kSupportTooLarge: return "SupportTooLarge";
    case ErrorCode::kUnknownId: return "UnknownId";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

SyntaxError::SyntaxError(int line, int column, const std::string& message)
    : Error(ErrorCode::kSyntaxError, "line " + std::to_string(line) +
                                         ", column " + std::to_string(column) +
                                         ": " + message),
      line_(line),
      column_(column) {}

}  // namespace kuniform
