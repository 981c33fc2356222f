// Copyright 2026 The shredq Authors.
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

#ifndef SHREDQ_AST_ERROR_H_
#define SHREDQ_AST_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace shredq {

enum class ErrorCode {
  kSyntax,
  kSchema,
  kData,
  kType,
  kNotFlatNested,
  kTypeHasFunctions,
  kInternalNonTermination,
  kNotNormalInput,
  kInvalidPath,
  kUnannotatedInput,
  kUnboundVariable,
  kMissingTable,
  kIndexUndefined,
  kNoKeyDeclared,
  kKeyNotUnique,
  kUnboundQueryName,
  kNameClashZ,
  kColumnMismatch,
  kUnflattenedInput,
  kDanglingIndex,
  kConfig,
  kEquivalenceFailure,
  kDatabase,
};

std::string_view ErrorCodeName(ErrorCode code);

// Base exception for every failure reported by the library. The code is
// stable and is what tests and the command line tool dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace shredq

#endif  // SHREDQ_AST_ERROR_H_
