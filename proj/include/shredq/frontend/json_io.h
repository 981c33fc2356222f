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

// JSON formats:
//
//   schema: {"tables": {"employees": {"columns": [["dept", "String"], ...],
//                                     "key": ["id"]}, ...}}
//   data:   {"employees": [{"dept": "Product", "id": 1, ...}, ...], ...}

#ifndef SHREDQ_FRONTEND_JSON_IO_H_
#define SHREDQ_FRONTEND_JSON_IO_H_

#include <string>

#include "shredq/ast/schema.h"
#include "shredq/ast/value.h"

namespace shredq {

// Throws kSchema.
Schema ParseSchemaJson(const std::string& text);
std::string SchemaToJson(const Schema& schema);

// Every table of the schema must be present and declared keys must be
// unique. Throws kData.
Database ParseDatabaseJson(const std::string& text, const Schema& schema);
std::string DatabaseToJson(const Schema& schema, const Database& db);

// Bags print as arrays in canonical (sorted) order when sorted is set,
// records as objects in field order, Unit as null, indexes as strings.
std::string ValueToJson(const Value& v, bool sorted = true, int indent = 2);

// Reads a file into a string. Throws kConfig when it cannot be read.
std::string ReadFile(const std::string& path);

}  // namespace shredq

#endif  // SHREDQ_FRONTEND_JSON_IO_H_
