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

#ifndef SHREDQ_SHREDDER_TYPING_H_
#define SHREDQ_SHREDDER_TYPING_H_

#include <map>
#include <string>

#include "shredq/ast/query.h"
#include "shredq/ast/schema.h"
#include "shredq/ast/types.h"

namespace shredq {

using TypeEnv = std::map<std::string, Type>;

// Typing rules for shredded queries. Returns Bag((Index, F)); a query with
// no comprehensions has type Bag(Any). Inner indexes must carry the tag of
// their own comprehension, outer indexes may only appear as the first
// component of a body. Throws kType.
Type TypecheckShredded(const ShQuery& q, const Schema& schema,
                       const TypeEnv& env = {});

// Typing rules for let-inserted queries, where indexes are (Int, Int)
// pairs and `index` has type Int. Throws kType.
Type TypecheckLetInserted(const LiQuery& q, const Schema& schema,
                          const TypeEnv& env = {});

// The let-inserted counterpart of a shredded type: Index becomes (Int, Int).
Type LetInsertedType(const Type& shredded);

// Type equality where Any in actual matches any expected type.
bool Conforms(const Type& actual, const Type& expected);

}  // namespace shredq

#endif  // SHREDQ_SHREDDER_TYPING_H_
