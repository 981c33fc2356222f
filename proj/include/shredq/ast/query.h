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

// Comprehension-based query forms produced by the compiler stages:
//
//   NfQuery  normal form: a union of comprehensions over tables whose bodies
//            are base terms, records or nested queries
//   ShQuery  shredded form: flat comprehensions, possibly nested in several
//            generator levels, returning (outer index, flat payload) pairs
//   LiQuery  let-inserted form: at most one let-bound subquery per
//            comprehension, with indexes made explicit as row numbers
//
// All three share the Expr node type for the terms inside comprehensions.
// Which Expr kinds may appear where is checked by each stage's validator.

#ifndef SHREDQ_AST_QUERY_H_
#define SHREDQ_AST_QUERY_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shredq/ast/path.h"
#include "shredq/ast/term.h"
#include "shredq/ast/value.h"

namespace shredq {

struct NfQuery;
struct ShQuery;
struct LiQuery;

// `var <- source`. The source is a table name, or the let-bound subquery
// when from_let is set.
struct Generator {
  std::string var;
  std::string source;
  bool from_let = false;

  bool operator==(const Generator&) const = default;
};

// a<out> refers to the index of the enclosing comprehension, a<in> to the
// index of the current one.
struct IndexRef {
  enum class Dir { kOuter, kInner };
  StaticTag tag;
  Dir dir = Dir::kOuter;

  bool operator==(const IndexRef&) const = default;
};

class Expr {
 public:
  enum class Kind {
    kProject,  // var.l1.l2...
    kConst,
    kPrim,
    kIsEmpty,
    kRecord,
    kQuery,     // nested query; normal form only
    kIndex,     // a<out> / a<in>; shredded form only
    kRowIndex,  // position of the current binding; let-inserted form only
  };

  Expr();  // The constant true.

  static Expr Project(std::string var, std::vector<std::string> path);
  static Expr Project(std::string var, std::string label);
  static Expr Const(Literal lit);
  static Expr True() { return Const(Literal(true)); }
  static Expr Prim(PrimOp op, std::vector<Expr> args);
  static Expr IsEmpty(NfQuery q);
  static Expr IsEmpty(ShQuery q);
  static Expr IsEmpty(LiQuery q);
  static Expr Record(std::vector<std::string> labels, std::vector<Expr> fields);
  static Expr Tuple(std::vector<Expr> components);
  static Expr Query(NfQuery q);
  static Expr OfIndex(IndexRef ref);
  static Expr RowIndex();

  Kind kind() const;
  const std::string& var() const;
  const std::vector<std::string>& path() const;
  const Literal& literal() const;
  PrimOp op() const;
  const std::vector<Expr>& args() const;  // prim arguments / record fields
  const std::vector<std::string>& labels() const;
  const Expr* field(const std::string& label) const;
  const NfQuery& nf_query() const;  // kQuery or kIsEmpty over NfQuery
  const ShQuery& sh_query() const;  // kIsEmpty over ShQuery
  const LiQuery& li_query() const;  // kIsEmpty over LiQuery
  bool has_nf_query() const;
  bool has_sh_query() const;
  bool has_li_query() const;
  const IndexRef& index_ref() const;

  bool is_true() const;

  bool operator==(const Expr& other) const;
  bool operator!=(const Expr& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Conjunction that drops literal `true` operands.
Expr Conjoin(const Expr& a, const Expr& b);

struct NfComprehension {
  std::vector<Generator> generators;
  Expr guard;
  Expr body;
  std::optional<StaticTag> tag;

  bool operator==(const NfComprehension&) const = default;
};

struct NfQuery {
  std::vector<NfComprehension> comprehensions;

  bool operator==(const NfQuery&) const = default;
};

struct ShLevel {
  std::vector<Generator> generators;
  Expr guard;

  bool operator==(const ShLevel&) const = default;
};

// for (G1 where X1) ... for (Gn where Xn) return^tag (outer, inner)
struct ShComprehension {
  std::vector<ShLevel> levels;
  StaticTag tag;
  IndexRef outer;
  Expr inner;

  bool operator==(const ShComprehension&) const = default;
};

struct ShQuery {
  std::vector<ShComprehension> comprehensions;

  bool operator==(const ShQuery&) const = default;
};

// for (G where guard) return body
struct LiSubquery {
  std::vector<Generator> generators;
  Expr guard;
  Expr body;

  bool operator==(const LiSubquery&) const = default;
};

// let q = let_query in main; without a let the main subquery stands alone.
struct LiComprehension {
  std::optional<LiSubquery> let_query;
  LiSubquery main;

  bool operator==(const LiComprehension&) const = default;
};

struct LiQuery {
  std::vector<LiComprehension> comprehensions;

  bool operator==(const LiQuery&) const = default;
};

// Name of the variable bound to rows of the let-bound subquery.
inline constexpr const char* kLetVar = "z";
// Name of the let-bound subquery.
inline constexpr const char* kLetQuery = "q";

}  // namespace shredq

#endif  // SHREDQ_AST_QUERY_H_
