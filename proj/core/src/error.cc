/*
 * Copyright 2026 The featstudy Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "featstudy/error.h"

namespace featstudy {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return "parse error";
    case ErrorCode::kSchema:
      return "schema violation";
    case ErrorCode::kConfig:
      return "configuration error";
    case ErrorCode::kStratification:
      return "stratification error";
    case ErrorCode::kDegenerateTask:
      return "degenerate task";
    case ErrorCode::kSolver:
      return "solver failure";
    case ErrorCode::kDimension:
      return "dimension mismatch";
    case ErrorCode::kEmptySelection:
      return "empty selection";
    case ErrorCode::kIo:
      return "I/O error";
  }
  return "error";
}

bool Error::IsValidationError() const {
  switch (code_) {
    case ErrorCode::kParse:
    case ErrorCode::kSchema:
    case ErrorCode::kConfig:
    case ErrorCode::kStratification:
      return true;
    default:
      return false;
  }
}

Error Error::WithContext(std::string_view context) const {
  std::string message(context);
  message += ": ";
  message += what();
  return Error(code_, message);
}

}  // namespace featstudy
