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

#include "shredq/frontend/json_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "shredq/ast/error.h"

namespace shredq {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json ParseOrFail(const std::string& text, ErrorCode code) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    Fail(code, std::string("malformed JSON: ") + e.what());
  }
}

ordered_json LiteralJson(const Literal& lit) {
  switch (lit.index()) {
    case 0:
      return std::get<bool>(lit);
    case 1:
      return std::get<int64_t>(lit);
    case 2:
      return std::get<std::string>(lit);
    default:
      return nullptr;
  }
}

ordered_json ToJson(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::kConst:
      return LiteralJson(v.literal());
    case Value::Kind::kIndex:
      return v.index().ToString();
    case Value::Kind::kClosure:
      return "<closure>";
    case Value::Kind::kRecord: {
      ordered_json o = ordered_json::object();
      for (const auto& [l, f] : v.fields()) o[l] = ToJson(f);
      return o;
    }
    case Value::Kind::kBag: {
      ordered_json a = ordered_json::array();
      for (const auto& e : v.elements()) a.push_back(ToJson(e.value));
      return a;
    }
  }
  return nullptr;
}

}  // namespace

Schema ParseSchemaJson(const std::string& text) {
  json j = ParseOrFail(text, ErrorCode::kSchema);
  if (!j.is_object() || !j.contains("tables") || !j["tables"].is_object()) {
    Fail(ErrorCode::kSchema,
         "schema must be an object with a \"tables\" object");
  }
  Schema schema;
  for (const auto& [name, spec] : j["tables"].items()) {
    TableSchema table;
    table.name = name;
    if (!spec.is_object() || !spec.contains("columns") ||
        !spec["columns"].is_array()) {
      Fail(ErrorCode::kSchema,
           "table '" + name + "' needs a \"columns\" array");
    }
    for (const auto& col : spec["columns"]) {
      if (!col.is_array() || col.size() != 2 || !col[0].is_string() ||
          !col[1].is_string()) {
        Fail(ErrorCode::kSchema,
             "columns of '" + name + "' must be [name, type] pairs");
      }
      auto bt = ParseBaseType(col[1].get<std::string>());
      if (!bt) {
        Fail(ErrorCode::kSchema, "unknown column type '" +
                                     col[1].get<std::string>() + "' in " +
                                     name);
      }
      table.columns.push_back({col[0].get<std::string>(), *bt});
    }
    if (spec.contains("key")) {
      if (!spec["key"].is_array()) {
        Fail(ErrorCode::kSchema, "key of '" + name + "' must be an array");
      }
      for (const auto& k : spec["key"]) {
        if (!k.is_string()) {
          Fail(ErrorCode::kSchema, "key of '" + name + "' must list columns");
        }
        table.key.push_back(k.get<std::string>());
      }
    }
    schema.AddTable(std::move(table));
  }
  return schema;
}

std::string SchemaToJson(const Schema& schema) {
  ordered_json tables = ordered_json::object();
  for (const auto& t : schema.tables()) {
    ordered_json cols = ordered_json::array();
    for (const auto& c : t.columns) {
      cols.push_back({c.name, std::string(BaseTypeName(c.type))});
    }
    ordered_json spec = {{"columns", cols}};
    if (!t.key.empty()) spec["key"] = t.key;
    tables[t.name] = spec;
  }
  ordered_json root = {{"tables", tables}};
  return root.dump(2);
}

Database ParseDatabaseJson(const std::string& text, const Schema& schema) {
  json j = ParseOrFail(text, ErrorCode::kData);
  if (!j.is_object()) Fail(ErrorCode::kData, "data must be a JSON object");
  Database db;
  for (const auto& table : schema.tables()) {
    if (!j.contains(table.name)) {
      Fail(ErrorCode::kData, "no rows given for table '" + table.name + "'");
    }
    const json& rows = j[table.name];
    if (!rows.is_array()) {
      Fail(ErrorCode::kData, "rows of '" + table.name + "' must be an array");
    }
    std::vector<Value> values;
    for (const auto& row : rows) {
      if (!row.is_object()) {
        Fail(ErrorCode::kData, "row of '" + table.name + "' must be an object");
      }
      std::vector<std::pair<std::string, Value>> fields;
      for (const auto& col : table.columns) {
        if (!row.contains(col.name)) {
          Fail(ErrorCode::kData, "row of '" + table.name + "' lacks column '" +
                                     col.name + "': " + row.dump());
        }
        const json& cell = row[col.name];
        Literal lit;
        if (col.type == BaseType::kInt && cell.is_number_integer()) {
          lit = cell.get<int64_t>();
        } else if (col.type == BaseType::kBool && cell.is_boolean()) {
          lit = cell.get<bool>();
        } else if (col.type == BaseType::kString && cell.is_string()) {
          lit = cell.get<std::string>();
        } else {
          Fail(ErrorCode::kData, "column '" + col.name + "' of '" + table.name +
                                     "' has the wrong type: " + row.dump());
        }
        fields.emplace_back(col.name, Value::Const(std::move(lit)));
      }
      if (row.size() != table.columns.size()) {
        Fail(ErrorCode::kData,
             "row of '" + table.name + "' has extra columns: " + row.dump());
      }
      values.push_back(Value::Record(std::move(fields)));
    }
    db.SetTable(schema, table.name, std::move(values));
    if (!table.key.empty()) {
      try {
        db.CheckKey(schema, table.name);
      } catch (const Error& e) {
        Fail(ErrorCode::kData, e.what());
      }
    }
  }
  for (const auto& [name, rows] : j.items()) {
    if (!schema.HasTable(name)) {
      Fail(ErrorCode::kData, "data for unknown table '" + name + "'");
    }
  }
  return db;
}

std::string DatabaseToJson(const Schema& schema, const Database& db) {
  ordered_json root = ordered_json::object();
  for (const auto& t : schema.tables()) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : db.rows(t.name)) rows.push_back(ToJson(row));
    root[t.name] = rows;
  }
  return root.dump(2);
}

std::string ValueToJson(const Value& v, bool sorted, int indent) {
  return ToJson(sorted ? Canonicalize(v) : v).dump(indent);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kConfig, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace shredq
