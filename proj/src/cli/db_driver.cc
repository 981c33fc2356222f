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

#include "shredq/cli/db_driver.h"

#include <charconv>
#include <map>

#include "shredq/ast/error.h"
#include "shredq/backend/sql.h"

namespace shredq {

namespace {

std::string LiteralText(const Value& v) {
  const Literal& lit = v.literal();
  switch (lit.index()) {
    case 0:
      return std::get<bool>(lit) ? "TRUE" : "FALSE";
    case 1:
      return std::to_string(std::get<int64_t>(lit));
    case 2: {
      std::string out = "'";
      for (char c : std::get<std::string>(lit)) {
        if (c == '\'') out += '\'';
        out += c;
      }
      return out + "'";
    }
    default:
      return "0";
  }
}

Value ParseCell(const std::string& text, BaseType type) {
  switch (type) {
    case BaseType::kInt: {
      int64_t i = 0;
      auto [end, ec] =
          std::from_chars(text.data(), text.data() + text.size(), i);
      if (ec != std::errc() || end != text.data() + text.size()) {
        Fail(ErrorCode::kDatabase, "not an integer: " + text);
      }
      return Value::Int(i);
    }
    case BaseType::kBool:
      if (text == "t" || text == "true" || text == "1")
        return Value::Bool(true);
      if (text == "f" || text == "false" || text == "0")
        return Value::Bool(false);
      Fail(ErrorCode::kDatabase, "not a boolean: " + text);
    case BaseType::kString:
      return Value::String(text);
    case BaseType::kUnit:
      return Value();
  }
  return Value();
}

}  // namespace

void LoadDatabase(DbDriver& driver, const Schema& schema, const Database& db) {
  constexpr size_t kBatch = 500;
  for (const auto& table : schema.tables()) {
    driver.Execute("DROP TABLE IF EXISTS " + QuoteIdent(table.name));
    std::string create = "CREATE TABLE " + QuoteIdent(table.name) + " (";
    for (size_t i = 0; i < table.columns.size(); ++i) {
      const Column& c = table.columns[i];
      if (i > 0) create += ", ";
      create += QuoteIdent(c.name) + " " + std::string(SqlTypeName(c.type));
      if (c.type == BaseType::kString) create += " COLLATE \"C\"";
      create += " NOT NULL";
    }
    driver.Execute(create + ")");
    const std::vector<Value>& rows = db.rows(table.name);
    for (size_t start = 0; start < rows.size(); start += kBatch) {
      std::string insert = "INSERT INTO " + QuoteIdent(table.name) + " VALUES ";
      for (size_t r = start; r < rows.size() && r < start + kBatch; ++r) {
        if (r > start) insert += ", ";
        insert += "(";
        for (size_t i = 0; i < table.columns.size(); ++i) {
          if (i > 0) insert += ", ";
          insert += LiteralText(*rows[r].field(table.columns[i].name));
        }
        insert += ")";
      }
      driver.Execute(insert);
    }
  }
}

Value ReadFlatRows(const ResultSet& rs,
                   const std::vector<FlatColumn>& columns) {
  std::map<std::string, size_t> position;
  for (size_t i = 0; i < rs.columns.size(); ++i) position[rs.columns[i]] = i;
  std::vector<size_t> source;
  for (const auto& c : columns) {
    auto it = position.find(SqlColumnName(c.label));
    if (it == position.end()) {
      Fail(ErrorCode::kColumnMismatch,
           "result lacks column " + SqlColumnName(c.label));
    }
    source.push_back(it->second);
  }
  std::vector<Value> out;
  out.reserve(rs.rows.size());
  for (const auto& row : rs.rows) {
    std::vector<std::pair<std::string, Value>> fields;
    for (size_t i = 0; i < columns.size(); ++i) {
      const std::optional<std::string>& cell = row.at(source[i]);
      if (!cell)
        Fail(ErrorCode::kDatabase, "unexpected NULL in " + columns[i].label);
      fields.emplace_back(columns[i].label, ParseCell(*cell, columns[i].type));
    }
    out.push_back(Value::Record(std::move(fields)));
  }
  return Value::Bag(std::move(out));
}

}  // namespace shredq
