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

#ifndef SHREDQ_SRC_EVALUATOR_CONTEXT_H_
#define SHREDQ_SRC_EVALUATOR_CONTEXT_H_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "shredq/ast/query.h"
#include "shredq/ast/schema.h"
#include "shredq/ast/value.h"

namespace shredq::eval_internal {

// Scoped variable bindings and evaluation of the flat terms shared by the
// normal, shredded and let-inserted forms.
class Context {
 public:
  explicit Context(const Database& db) : db_(db) {}

  const Database& db() const { return db_; }

  void Push(const std::string& var, Value v) {
    scope_.emplace_back(var, std::move(v));
  }
  void PopTo(size_t depth) { scope_.resize(depth); }
  size_t depth() const { return scope_.size(); }
  const Value& Lookup(const std::string& var) const;

  // Projections, constants, primitives, emptiness tests, flat records and
  // the row index. Throws kType on other kinds.
  Value Eval(const Expr& e);
  bool EvalGuard(const Expr& e) { return Eval(e).as_bool(); }

  // Calls visit(position, rows) for every binding of the generators that
  // satisfies the guard, in enumeration order; positions start at 1. The
  // bindings are in scope during the call. Generators drawing from the let
  // query read let_rows. Stops early and returns false when visit does.
  bool Enumerate(const std::vector<Generator>& gens, const Expr& guard,
                 const std::vector<Value>* let_rows,
                 const std::function<bool(int64_t)>& visit);

  bool IsEmpty(const NfQuery& q);
  bool IsEmpty(const ShQuery& q);
  bool IsEmpty(const LiQuery& q);

  // Rows of a let-bound subquery.
  std::vector<Value> EvalSubquery(const LiSubquery& s,
                                  const std::vector<Value>* let_rows);

  int64_t row_index = 0;

 private:
  // checks[i] holds the guard conjuncts tested once the first i generators
  // are bound.
  bool EnumerateFrom(const std::vector<Generator>& gens, size_t i,
                     const std::vector<std::vector<const Expr*>>& checks,
                     const std::vector<Value>* let_rows, int64_t& position,
                     const std::function<bool(int64_t)>& visit);
  bool LevelsEmpty(const std::vector<ShLevel>& levels, size_t i);

  const Database& db_;
  std::vector<std::pair<std::string, Value>> scope_;
};

Value ApplyPrim(PrimOp op, const std::vector<Value>& args);

}  // namespace shredq::eval_internal

#endif  // SHREDQ_SRC_EVALUATOR_CONTEXT_H_
