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

#ifndef SHREDQ_NORMALIZER_NORMALIZER_H_
#define SHREDQ_NORMALIZER_NORMALIZER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "shredq/ast/query.h"
#include "shredq/ast/schema.h"
#include "shredq/ast/term.h"
#include "shredq/ast/types.h"

namespace shredq {

struct RewriteStep {
  std::string rule;      // e.g. "beta.fun", "comm.for.if", "hoist.record"
  std::string location;  // child-index path from the root, e.g. "0.1"
};

using RewriteTrace = std::vector<RewriteStep>;

// Rewrites to normal form under beta reduction and the commuting
// conversions that move for, if, [] and ++ out of elimination positions.
// isEmpty is opaque: its argument is reduced but never interacts with its
// context. Throws kInternalNonTermination when fuel runs out.
Term SymbolicEval(const Term& t, RewriteTrace* trace = nullptr,
                  int64_t fuel = -1);

// Moves conditionals out of primitive arguments, record fields, union
// operands and singleton bodies.
Term HoistIfs(const Term& t, RewriteTrace* trace = nullptr, int64_t fuel = -1);

// Alternates the two rewrite systems until neither applies: hoisting can
// expose new redexes (an if hoisted into the condition of another if).
Term Simplify(const Term& t, RewriteTrace* trace = nullptr, int64_t fuel = -1);

// Default fuel for a term: ten times its size squared.
int64_t DefaultFuel(const Term& t);

// Splits a simplified term of type Bag(element) into a union of
// comprehensions. Throws kNotNormalInput when t is not simplified.
NfQuery Split(const Term& t, const Type& element, const Schema& schema);

// Simplify + Split + UniquifyVariables. The type is the bag type of t.
NfQuery Normalize(const Term& t, const Type& type, const Schema& schema,
                  RewriteTrace* trace = nullptr);

// Renames generator variables so that every generator of the query, nested
// ones included, binds a distinct name.
NfQuery UniquifyVariables(const NfQuery& q);

// Assigns static tags 1, 2, 3, ... to comprehensions in leftmost-outermost
// order (a comprehension before its guard, its guard before its body).
NfQuery Annotate(const NfQuery& q);

// Grammar and scoping check. Throws kNotNormalInput (kUnannotatedInput when
// require_tags is set and a tag is missing or repeated).
void ValidateNormalForm(const NfQuery& q, const Schema& schema,
                        bool require_tags);

// Embeds a normal form back into the source calculus.
Term NormalFormToTerm(const NfQuery& q);

// Reads a term that is already in normal-form shape (a union of for/where/
// return chains over tables) without rewriting it.
NfQuery ReadNormalForm(const Term& t);

// Equality up to consistent renaming of generator variables and, when
// compare_tags is set, of static tags.
bool AlphaEquivalent(const NfQuery& a, const NfQuery& b, bool compare_tags);

}  // namespace shredq

#endif  // SHREDQ_NORMALIZER_NORMALIZER_H_
