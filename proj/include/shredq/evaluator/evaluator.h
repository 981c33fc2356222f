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

#ifndef SHREDQ_EVALUATOR_EVALUATOR_H_
#define SHREDQ_EVALUATOR_EVALUATOR_H_

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "shredq/ast/query.h"
#include "shredq/ast/result.h"
#include "shredq/ast/schema.h"
#include "shredq/ast/term.h"
#include "shredq/ast/types.h"
#include "shredq/ast/value.h"

namespace shredq {

// Persistent environment for source-term evaluation.
struct EnvNode {
  std::string name;
  Value value;
  std::shared_ptr<const EnvNode> next;
};
using TermEnv = std::shared_ptr<const EnvNode>;

TermEnv Extend(TermEnv env, std::string name, Value value);

struct Closure {
  std::string param;
  Term body;
  TermEnv env;
};

// List-based bag semantics of source terms. Tables are read in canonical
// row order. Throws kUnboundVariable and kMissingTable.
Value EvalTerm(const Term& t, const Database& db, const TermEnv& env = nullptr);

// The same semantics on normal forms. Annotations are not produced.
Value EvalNormalForm(const NfQuery& q, const Database& db);

// Maps canonical indexes to the concrete indexes of one scheme.
class IndexFn {
 public:
  // The identity.
  static IndexFn Canonical();
  // i-th canonical index to the i-th natural index. Throws kNoKeyDeclared
  // and kKeyNotUnique for generator tables without a usable key.
  static IndexFn Natural(const NfQuery& l, const Database& db,
                         const Schema& schema);
  // a<iota> to <a, position of iota among the canonical indexes tagged a>.
  static IndexFn Flat(const NfQuery& l, const Database& db);
  // Arbitrary function; used to exercise the harness with invalid schemes.
  static IndexFn FromFunction(IndexScheme scheme,
                              std::function<Index(const Index&)> f, Index root);

  IndexScheme scheme() const { return scheme_; }
  // Throws kIndexUndefined outside the domain.
  Index Apply(const Index& canonical) const;
  // The image of the top index top<1>.
  Index Root() const { return root_; }

  // Defined and injective on the given canonical indexes.
  bool IsValidOn(const std::vector<Index>& canonical) const;

 private:
  using Table = std::unordered_map<Index, Index, IndexHash>;

  IndexScheme scheme_ = IndexScheme::kCanonical;
  Index root_;
  std::shared_ptr<const Table> table_;
  std::function<Index(const Index&)> fn_;
};

// Canonical indexes of an annotated normal form, in enumeration order.
std::vector<Index> CanonicalIndexes(const NfQuery& l, const Database& db);

// Natural indexes of an annotated normal form, in the same order. Each
// dynamic part lists the keys of the rows bound by every enclosing
// generator, outermost first.
std::vector<Index> NaturalIndexes(const NfQuery& l, const Database& db,
                                  const Schema& schema);

// Annotated semantics: every bag element is annotated with the image of its
// canonical index. Throws kIndexUndefined.
Value EvalAnnotated(const NfQuery& l, const Database& db, const IndexFn& ix);

// The annotations on each path of the result type are pairwise distinct.
bool IsWellIndexed(const Value& annotated, const Type& type);

// Semantics of shredded queries. Every row is annotated with its own index.
ShreddedResult EvalShredded(const ShQuery& q, const Database& db,
                            const IndexFn& ix);

// Semantics of let-inserted queries: a bag of ((tag, position), payload)
// pairs where `index` is the position of the current binding.
Value EvalLetInserted(const LiQuery& q, const Database& db);

// Reads let-inserted rows back as shredded rows with flat indexes, guided
// by the inner shredded type of the payload.
ShreddedResult DecodeLetInserted(const Value& rows, const Type& inner);

}  // namespace shredq

#endif  // SHREDQ_EVALUATOR_EVALUATOR_H_
