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

#ifndef SHREDQ_BACKEND_LET_INSERT_H_
#define SHREDQ_BACKEND_LET_INSERT_H_

#include "shredq/ast/query.h"
#include "shredq/ast/schema.h"

namespace shredq {

// Rearranges every comprehension of a shredded query into a let-bound
// subquery that enumerates the bindings of the enclosing levels, and a main
// subquery over (z <- q) and the last level. Indexes become (tag, position)
// pairs; a single-level comprehension needs no let and gets the outer index
// (tag, 1). Emptiness tests keep their generators and guards and return {}.
// Throws kNameClashZ when a generator is named z.
LiQuery LetInsert(const ShQuery& m, const Schema& schema);

}  // namespace shredq

#endif  // SHREDQ_BACKEND_LET_INSERT_H_
