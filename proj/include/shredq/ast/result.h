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

#ifndef SHREDQ_AST_RESULT_H_
#define SHREDQ_AST_RESULT_H_

#include <optional>
#include <string>
#include <vector>

#include "shredq/ast/value.h"

namespace shredq {

// One row of a shredded query result: the outer index locating the row in
// the enclosing bag, a flat payload, and optionally the index of the row
// itself.
struct ShreddedRow {
  Index outer;
  Value payload;
  std::optional<Index> annotation;
};

using ShreddedResult = std::vector<ShreddedRow>;

// "<outer> | payload", one row per line.
std::string ShreddedResultToString(const ShreddedResult& r);

// Row lists equal as multisets of (outer, payload) pairs.
bool ShreddedResultsMultisetEqual(const ShreddedResult& a,
                                  const ShreddedResult& b);

// Row lists equal element by element, ignoring annotations.
bool ShreddedResultsEqual(const ShreddedResult& a, const ShreddedResult& b);

}  // namespace shredq

#endif  // SHREDQ_AST_RESULT_H_
