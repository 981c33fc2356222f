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

#ifndef SHREDQ_FRONTEND_TYPECHECK_H_
#define SHREDQ_FRONTEND_TYPECHECK_H_

#include <map>
#include <string>

#include "shredq/ast/schema.h"
#include "shredq/ast/term.h"
#include "shredq/ast/types.h"
#include "shredq/frontend/parser.h"

namespace shredq {

// Resolves free names that denote tables, inlines the function bindings into
// the main expression and makes every bound variable name unique. Throws
// kUnboundVariable for names that are neither bound nor tables.
Term Elaborate(const SourceQuery& q, const Schema& schema);

// Renames binders so that no two binders share a name and none uses a
// reserved name ("z" or the "_t" prefix). The first binder of each name
// keeps it.
Term RenameBoundVariables(const Term& t);

// Infers the type of t. Lambdas carry no annotations: a lambda is checked at
// each application against the argument type, so an unapplied lambda gets a
// function type whose parameter and result are Any. Throws kType.
Type Typecheck(const Term& t, const Schema& schema,
               const std::map<std::string, Type>& env = {});

// Checks that t is a closed flat-nested query: it must have a bag type built
// from base, record and bag types only. Throws kNotFlatNested otherwise.
Type CheckQuery(const Term& t, const Schema& schema);

// Parse + Elaborate + CheckQuery.
struct CheckedQuery {
  Term term;
  Type type;
};
CheckedQuery CompileSource(const std::string& text, const Schema& schema);

}  // namespace shredq

#endif  // SHREDQ_FRONTEND_TYPECHECK_H_
