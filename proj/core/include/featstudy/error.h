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

#ifndef FEATSTUDY_ERROR_H_
#define FEATSTUDY_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace featstudy {

// Broad failure categories. The command-line tool maps the validation kinds
// (parse, schema, config, stratification) to exit code 2 and everything else
// to exit code 1.
enum class ErrorCode {
  kParse,
  kSchema,
  kConfig,
  kStratification,
  kDegenerateTask,
  kSolver,
  kDimension,
  kEmptySelection,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

  // True for failures caused by bad input or configuration rather than by a
  // computation going wrong.
  bool IsValidationError() const;

  // Returns a copy of this error with `context` prepended to the message.
  Error WithContext(std::string_view context) const;

 private:
  ErrorCode code_;
};

}  // namespace featstudy

#endif  // FEATSTUDY_ERROR_H_
