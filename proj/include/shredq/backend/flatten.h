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

#ifndef SHREDQ_BACKEND_FLATTEN_H_
#define SHREDQ_BACKEND_FLATTEN_H_

#include <string>
#include <vector>

#include "shredq/ast/query.h"
#include "shredq/ast/schema.h"
#include "shredq/ast/types.h"
#include "shredq/ast/value.h"

namespace shredq {

// One column of a flattened record type.
struct FlatColumn {
  std::string label;
  BaseType type = BaseType::kInt;

  bool operator==(const FlatColumn&) const = default;
};

// Column label of a label path: segments joined with '#', where a tuple
// label "#k" contributes "k". The empty path is "•".
std::string FlatLabel(const std::vector<std::string>& path);

// The columns of a flat type, left to right. An empty record occupies one
// Unit column. Throws kSchema for labels containing '#' that are not tuple
// labels and kType for types that are not flat.
std::vector<FlatColumn> FlattenType(const Type& t);

// Rewrites a let-inserted query so that every body is one record of base
// columns and every projection names a single column. The main bodies are
// ordered as FlattenType(row) and must produce exactly those columns
// (kColumnMismatch). Throws kSchema for table columns that cannot be told
// apart from flattened labels.
LiQuery FlattenQuery(const LiQuery& q, const Schema& schema, const Type& row);

// True when q is in the shape produced by FlattenQuery.
bool IsFlattened(const LiQuery& q);

// Value-level counterparts, guided by the unflattened type.
Value FlattenValue(const Value& v, const Type& t);
Value UnflattenValue(const Value& flat, const Type& t);
// Applies UnflattenValue to every element of a bag.
Value UnflattenRows(const Value& rows, const Type& row);

}  // namespace shredq

#endif  // SHREDQ_BACKEND_FLATTEN_H_
