//
// Copyright 2026 The kmdp Authors
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
//

#include "kmdp/error.h"

namespace kmdp {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyDataset:
      return "empty dataset";
    case ErrorCode::kInvalidRecord:
      return "invalid record";
    case ErrorCode::kInvalidParameter:
      return "invalid parameter";
    case ErrorCode::kMismatchedGrid:
      return "mismatched grid";
    case ErrorCode::kDegenerateDataset:
      return "degenerate dataset";
    case ErrorCode::kEmptyFile:
      return "empty file";
    case ErrorCode::kMissingColumn:
      return "missing column";
    case ErrorCode::kUnparseableValue:
      return "unparseable value";
    case ErrorCode::kUnknownStatus:
      return "unknown status code";
    case ErrorCode::kNotFound:
      return "not found";
    case ErrorCode::kIo:
      return "i/o error";
    case ErrorCode::kInternal:
      return "internal error";
  }
  return "unknown error";
}

bool IsValidationError(ErrorCode code) {
  return code != ErrorCode::kIo && code != ErrorCode::kInternal;
}

}  // namespace kmdp
