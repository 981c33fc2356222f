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

#include "shredq/ast/error.h"

namespace shredq {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax:
      return "SyntaxError";
    case ErrorCode::kSchema:
      return "SchemaError";
    case ErrorCode::kData:
      return "DataError";
    case ErrorCode::kType:
      return "TypeError";
    case ErrorCode::kNotFlatNested:
      return "NotFlatNested";
    case ErrorCode::kTypeHasFunctions:
      return "TypeHasFunctions";
    case ErrorCode::kInternalNonTermination:
      return "InternalNonTermination";
    case ErrorCode::kNotNormalInput:
      return "NotNormalInput";
    case ErrorCode::kInvalidPath:
      return "InvalidPath";
    case ErrorCode::kUnannotatedInput:
      return "UnannotatedInput";
    case ErrorCode::kUnboundVariable:
      return "UnboundVariable";
    case ErrorCode::kMissingTable:
      return "MissingTable";
    case ErrorCode::kIndexUndefined:
      return "IndexUndefined";
    case ErrorCode::kNoKeyDeclared:
      return "NoKeyDeclared";
    case ErrorCode::kKeyNotUnique:
      return "KeyNotUnique";
    case ErrorCode::kUnboundQueryName:
      return "UnboundQueryName";
    case ErrorCode::kNameClashZ:
      return "NameClashZ";
    case ErrorCode::kColumnMismatch:
      return "ColumnMismatch";
    case ErrorCode::kUnflattenedInput:
      return "UnflattenedInput";
    case ErrorCode::kDanglingIndex:
      return "DanglingIndex";
    case ErrorCode::kConfig:
      return "ConfigError";
    case ErrorCode::kEquivalenceFailure:
      return "EquivalenceFailure";
    case ErrorCode::kDatabase:
      return "DatabaseError";
  }
  return "Error";
}

SyntaxError::SyntaxError(int line, int column, const std::string& message)
    : Error(ErrorCode::kSyntax, std::to_string(line) + ":" +
                                    std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace shredq
