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

#ifndef SHREDQ_BACKEND_SQL_H_
#define SHREDQ_BACKEND_SQL_H_

#include <string>
#include <string_view>

#include "shredq/ast/query.h"
#include "shredq/ast/schema.h"
#include "shredq/ast/types.h"

namespace shredq {

struct SqlOptions {
  // Emit the let-bound subquery as a derived table in FROM instead of a
  // WITH clause.
  bool inline_with = false;
  // Number rows by the declared key columns instead of every column. Only
  // applies to subqueries whose tables all declare a key.
  bool key_rownum = false;
};

// Prefix of every result column name.
inline constexpr std::string_view kSqlColumnPrefix = "i#";

// The SQL name of a flattened column label.
std::string SqlColumnName(const std::string& label);

// Column type used for a base type.
std::string_view SqlTypeName(BaseType t);

// Double-quoted identifier.
std::string QuoteIdent(std::string_view name);

// One SQL:1999 SELECT statement for a flattened let-inserted query. Each
// comprehension becomes one branch of a UNION ALL; the columns are
// FlattenType(row) renamed by SqlColumnName. A query without comprehensions
// selects no rows. Throws kUnflattenedInput when q is not flattened.
std::string EmitSql(const LiQuery& q, const Schema& schema, const Type& row,
                    const SqlOptions& options = {});

}  // namespace shredq

#endif  // SHREDQ_BACKEND_SQL_H_
