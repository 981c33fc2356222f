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

#ifndef SHREDQ_AST_TERM_H_
#define SHREDQ_AST_TERM_H_

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "shredq/ast/value.h"

namespace shredq {

struct SourcePos {
  int line = 0;
  int column = 0;
};

enum class TermKind {
  kVar,
  kConst,
  kPrim,
  kTable,
  kIf,
  kLam,
  kApp,
  kRecord,
  kProject,
  kEmpty,
  kSingleton,
  kUnion,
  kFor,
  kIsEmpty,
};

// Primitive operators. Comparisons are defined on every base type; the
// boolean connectives on Bool; arithmetic on Int.
enum class PrimOp {
  kEq,
  kNe,
  kLt,
  kGt,
  kLe,
  kGe,
  kAnd,
  kOr,
  kNot,
  kAdd,
  kSub,
  kMul
};

std::string_view PrimOpSymbol(PrimOp op);
int PrimOpArity(PrimOp op);

// Immutable, cheaply copyable source term of the higher-order nested
// relational calculus. Children are accessed through kind-specific getters.
class Term {
 public:
  Term();  // The unit constant.

  static Term Var(std::string name, SourcePos pos = {});
  static Term Const(Literal lit, SourcePos pos = {});
  static Term Prim(PrimOp op, std::vector<Term> args, SourcePos pos = {});
  static Term Table(std::string name, SourcePos pos = {});
  static Term If(Term cond, Term then_branch, Term else_branch,
                 SourcePos pos = {});
  static Term Lam(std::string param, Term body, SourcePos pos = {});
  static Term App(Term fun, Term arg, SourcePos pos = {});
  static Term Record(std::vector<std::string> labels, std::vector<Term> fields,
                     SourcePos pos = {});
  static Term Tuple(std::vector<Term> components, SourcePos pos = {});
  static Term Project(Term record, std::string label, SourcePos pos = {});
  static Term Empty(SourcePos pos = {});
  static Term Singleton(Term element, SourcePos pos = {});
  static Term Union(Term left, Term right, SourcePos pos = {});
  static Term For(std::string var, Term source, Term body, SourcePos pos = {});
  static Term IsEmpty(Term bag, SourcePos pos = {});

  static Term Bool(bool b) { return Const(Literal(b)); }

  TermKind kind() const { return node_->kind; }
  SourcePos pos() const { return node_->pos; }

  // Variable, table, lambda parameter or for-bound variable name.
  const std::string& name() const { return node_->name; }
  // Projected label.
  const std::string& label() const { return node_->name; }
  const Literal& literal() const { return node_->literal; }
  PrimOp op() const { return node_->op; }
  const std::vector<std::string>& labels() const { return node_->labels; }
  const std::vector<Term>& children() const { return node_->children; }
  const Term& child(size_t i) const { return node_->children.at(i); }

  const Term& cond() const { return child(0); }
  const Term& then_branch() const { return child(1); }
  const Term& else_branch() const { return child(2); }
  const Term& body() const { return child(kind() == TermKind::kFor ? 1 : 0); }
  const Term& fun() const { return child(0); }
  const Term& arg() const { return child(1); }
  const Term& source() const { return child(0); }
  const Term& left() const { return child(0); }
  const Term& right() const { return child(1); }

  bool is_bool_const(bool b) const;

  // Rebuilds this node with new children, keeping everything else.
  Term WithChildren(std::vector<Term> children) const;
  // Rebuilds a binder (Lam or For) with a new bound name.
  Term WithName(std::string name) const;

  // Structural equality; source positions are ignored.
  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

  int Size() const;

 private:
  struct Node {
    TermKind kind = TermKind::kConst;
    std::string name;
    Literal literal = UnitValue{};
    PrimOp op = PrimOp::kEq;
    std::vector<std::string> labels;
    std::vector<Term> children;
    SourcePos pos;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term Make(Node n);

  std::shared_ptr<const Node> node_;
};

std::set<std::string> FreeVars(const Term& t);

// Capture-avoiding substitution of value for the free occurrences of var.
// Fresh names are drawn with the given prefix avoiding every name in taken,
// which is extended with the names it allocates.
Term Substitute(const Term& t, const std::string& var, const Term& value,
                std::set<std::string>& taken);

// All variable names (bound or free) occurring in t.
void CollectNames(const Term& t, std::set<std::string>& out);

// Allocates a name derived from base that is not in taken, and records it.
std::string FreshName(const std::string& base, std::set<std::string>& taken);

}  // namespace shredq

#endif  // SHREDQ_AST_TERM_H_
