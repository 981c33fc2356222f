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

#ifndef SHREDQ_SHREDDER_SHREDDER_H_
#define SHREDQ_SHREDDER_SHREDDER_H_

#include <vector>

#include "shredq/ast/package.h"
#include "shredq/ast/path.h"
#include "shredq/ast/query.h"
#include "shredq/ast/types.h"

namespace shredq {

// Inner shredding of a type: bags become Index, records map pointwise.
// Throws kTypeHasFunctions.
Type ShredTypeInner(const Type& a);

// Outer shredding at path p: Bag((Index, inner shredding of the element
// type of the bag at p)). Throws kInvalidPath.
Type ShredTypeOuter(const Type& a, const Path& p);

// The shredded query for the bag at path p of an annotated normal form.
// Throws kUnannotatedInput when a comprehension has no tag and
// kInvalidPath when p does not follow the structure of the query.
ShQuery ShredQuery(const NfQuery& l, const Path& p);

// Every bag of a annotated with its outer shredded type.
Package<Type> ShredTypePackage(const Type& a);

// Every bag of a annotated with the shredded query of l at its path.
Package<ShQuery> ShredPackage(const NfQuery& l, const Type& a);

}  // namespace shredq

#endif  // SHREDQ_SHREDDER_SHREDDER_H_
