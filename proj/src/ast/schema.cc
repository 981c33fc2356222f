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

#include "shredq/ast/schema.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "shredq/ast/error.h"

namespace shredq {

namespace {

bool IsIdentifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Type TableSchema::RowType() const {
  std::vector<TypeField> fields;
  fields.reserve(columns.size());
  for (const auto& c : columns) fields.push_back({c.name, Type::Base(c.type)});
  return Type::Record(std::move(fields));
}

const Column* TableSchema::FindColumn(const std::string& column) const {
  for (const auto& c : columns) {
    if (c.name == column) return &c;
  }
  return nullptr;
}

void Schema::AddTable(TableSchema table) {
  if (!IsIdentifier(table.name)) {
    Fail(ErrorCode::kSchema, "invalid table name '" + table.name + "'");
  }
  if (HasTable(table.name)) {
    Fail(ErrorCode::kSchema, "duplicate table '" + table.name + "'");
  }
  if (table.columns.empty()) {
    Fail(ErrorCode::kSchema, "table '" + table.name + "' has no columns");
  }
  std::set<std::string> seen;
  for (const auto& c : table.columns) {
    if (!IsIdentifier(c.name)) {
      Fail(ErrorCode::kSchema,
           "invalid column name '" + c.name + "' in " + table.name);
    }
    if (!seen.insert(c.name).second) {
      Fail(ErrorCode::kSchema,
           "duplicate column '" + c.name + "' in " + table.name);
    }
    if (c.type == BaseType::kUnit) {
      Fail(ErrorCode::kSchema, "column '" + c.name + "' cannot have type Unit");
    }
  }
  for (const auto& k : table.key) {
    if (table.FindColumn(k) == nullptr) {
      Fail(ErrorCode::kSchema, "key column '" + k + "' not in " + table.name);
    }
  }
  tables_.push_back(std::move(table));
}

bool Schema::HasTable(const std::string& name) const {
  return std::any_of(tables_.begin(), tables_.end(),
                     [&](const TableSchema& t) { return t.name == name; });
}

const TableSchema& Schema::table(const std::string& name) const {
  for (const auto& t : tables_) {
    if (t.name == name) return t;
  }
  Fail(ErrorCode::kMissingTable, "unknown table '" + name + "'");
}

void SortRows(const TableSchema& table, std::vector<Value>& rows) {
  std::stable_sort(
      rows.begin(), rows.end(), [&](const Value& a, const Value& b) {
        for (const auto& c : table.columns) {
          auto o = a.field(c.name)->literal() <=> b.field(c.name)->literal();
          if (o != 0) return o < 0;
        }
        return false;
      });
}

void Database::SetTable(const Schema& schema, const std::string& name,
                        std::vector<Value> rows) {
  const TableSchema& ts = schema.table(name);
  for (const auto& row : rows) {
    if (!row.is_record() || row.fields().size() != ts.columns.size()) {
      Fail(ErrorCode::kData,
           "row of " + name + " does not match its schema: " + row.ToString());
    }
    for (const auto& c : ts.columns) {
      const Value* v = row.field(c.name);
      if (v == nullptr || !v->is_const() ||
          LiteralType(v->literal()) != c.type) {
        Fail(ErrorCode::kData, "column '" + c.name + "' of " + name +
                                   " has the wrong type in " + row.ToString());
      }
    }
  }
  SortRows(ts, rows);
  tables_[name] = std::move(rows);
}

bool Database::HasTable(const std::string& name) const {
  return tables_.count(name) > 0;
}

const std::vector<Value>& Database::rows(const std::string& name) const {
  auto it = tables_.find(name);
  if (it == tables_.end()) {
    Fail(ErrorCode::kMissingTable, "no data for table '" + name + "'");
  }
  return it->second;
}

void Database::CheckKey(const Schema& schema, const std::string& name) const {
  const TableSchema& ts = schema.table(name);
  if (ts.key.empty()) {
    Fail(ErrorCode::kNoKeyDeclared, "table '" + name + "' declares no key");
  }
  std::set<std::vector<Literal>> seen;
  for (const auto& row : rows(name)) {
    std::vector<Literal> k;
    for (const auto& c : ts.key) k.push_back(row.field(c)->literal());
    if (!seen.insert(std::move(k)).second) {
      Fail(ErrorCode::kKeyNotUnique,
           "key of table '" + name + "' is not unique: " + row.ToString());
    }
  }
}

}  // namespace shredq
