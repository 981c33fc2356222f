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

#ifndef SHREDQ_CLI_DB_DRIVER_H_
#define SHREDQ_CLI_DB_DRIVER_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shredq/ast/schema.h"
#include "shredq/ast/types.h"
#include "shredq/ast/value.h"
#include "shredq/backend/flatten.h"

namespace shredq {

// Rows returned by a statement, as text. A missing cell is SQL NULL.
struct ResultSet {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<std::string>>> rows;
};

// Narrow interface to a database. Every method throws kDatabase on failure.
class DbDriver {
 public:
  virtual ~DbDriver() = default;
  virtual ResultSet Execute(const std::string& sql) = 0;
  virtual void Ping() = 0;
  virtual void Close() = 0;
};

// Connects to PostgreSQL through libpq, which is loaded at run time. Throws
// kDatabase when the library is unavailable, the driver was not built, or
// the connection fails.
std::unique_ptr<DbDriver> ConnectPostgres(const std::string& dsn);

// Replaces the tables of the schema with the rows of db. Text columns use
// the "C" collation so that string comparisons agree with the evaluator.
void LoadDatabase(DbDriver& driver, const Schema& schema, const Database& db);

// Converts a result set to a bag of flat records, matching the columns by
// their SQL names. Throws kColumnMismatch and kDatabase for unparsable
// cells.
Value ReadFlatRows(const ResultSet& rs, const std::vector<FlatColumn>& columns);

}  // namespace shredq

#endif  // SHREDQ_CLI_DB_DRIVER_H_
