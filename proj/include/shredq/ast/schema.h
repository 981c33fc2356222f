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

#ifndef SHREDQ_AST_SCHEMA_H_
#define SHREDQ_AST_SCHEMA_H_

#include <map>
#include <string>
#include <vector>

#include "shredq/ast/types.h"
#include "shredq/ast/value.h"

namespace shredq {

struct Column {
  std::string name;
  BaseType type = BaseType::kInt;
};

struct TableSchema {
  std::string name;
  std::vector<Column> columns;   // declaration order
  std::vector<std::string> key;  // empty when no key is declared

  // The record type of one row.
  Type RowType() const;
  const Column* FindColumn(const std::string& column) const;
};

class Schema {
 public:
  Schema() = default;

  // Validates names, column types and key columns. Throws kSchema.
  void AddTable(TableSchema table);

  bool HasTable(const std::string& name) const;
  // Throws kMissingTable.
  const TableSchema& table(const std::string& name) const;
  const std::vector<TableSchema>& tables() const { return tables_; }

 private:
  std::vector<TableSchema> tables_;
};

// A database instance: one bag of flat records per table. Rows are kept in
// canonical order, i.e. sorted by the declared columns of the table.
class Database {
 public:
  Database() = default;

  // Checks every row against the schema (throws kData) and sorts.
  void SetTable(const Schema& schema, const std::string& name,
                std::vector<Value> rows);

  bool HasTable(const std::string& name) const;
  // Throws kMissingTable.
  const std::vector<Value>& rows(const std::string& name) const;
  const std::map<std::string, std::vector<Value>>& tables() const {
    return tables_;
  }

  // Throws kNoKeyDeclared / kKeyNotUnique when the table cannot support
  // natural indexes.
  void CheckKey(const Schema& schema, const std::string& name) const;

 private:
  std::map<std::string, std::vector<Value>> tables_;
};

// Orders rows by the declared columns of the table, in declaration order.
void SortRows(const TableSchema& table, std::vector<Value>& rows);

}  // namespace shredq

#endif  // SHREDQ_AST_SCHEMA_H_
