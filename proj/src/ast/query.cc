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

#include "shredq/ast/query.h"

#include "shredq/ast/error.h"

namespace shredq {

struct Expr::Node {
  Kind kind = Kind::kConst;
  std::string var;
  std::vector<std::string> path;
  Literal literal = true;
  PrimOp op = PrimOp::kEq;
  std::vector<std::string> labels;
  std::vector<Expr> args;
  std::shared_ptr<const NfQuery> nf;
  std::shared_ptr<const ShQuery> sh;
  std::shared_ptr<const LiQuery> li;
  IndexRef index_ref;
};

Expr::Expr() : Expr(True()) {}

Expr Expr::Project(std::string var, std::vector<std::string> path) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kProject;
  n->var = std::move(var);
  n->path = std::move(path);
  return Expr(std::move(n));
}

Expr Expr::Project(std::string var, std::string label) {
  return Project(std::move(var), std::vector<std::string>{std::move(label)});
}

Expr Expr::Const(Literal lit) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kConst;
  n->literal = std::move(lit);
  return Expr(std::move(n));
}

Expr Expr::Prim(PrimOp op, std::vector<Expr> args) {
  if (static_cast<int>(args.size()) != PrimOpArity(op)) {
    Fail(ErrorCode::kType, "wrong number of arguments for '" +
                               std::string(PrimOpSymbol(op)) + "'");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::kPrim;
  n->op = op;
  n->args = std::move(args);
  return Expr(std::move(n));
}

Expr Expr::IsEmpty(NfQuery q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kIsEmpty;
  n->nf = std::make_shared<const NfQuery>(std::move(q));
  return Expr(std::move(n));
}

Expr Expr::IsEmpty(ShQuery q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kIsEmpty;
  n->sh = std::make_shared<const ShQuery>(std::move(q));
  return Expr(std::move(n));
}

Expr Expr::IsEmpty(LiQuery q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kIsEmpty;
  n->li = std::make_shared<const LiQuery>(std::move(q));
  return Expr(std::move(n));
}

Expr Expr::Record(std::vector<std::string> labels, std::vector<Expr> fields) {
  if (labels.size() != fields.size()) {
    Fail(ErrorCode::kType, "record labels and fields differ in length");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::kRecord;
  n->labels = std::move(labels);
  n->args = std::move(fields);
  return Expr(std::move(n));
}

Expr Expr::Tuple(std::vector<Expr> components) {
  std::vector<std::string> labels;
  for (size_t i = 0; i < components.size(); ++i) {
    labels.push_back(TupleLabel(static_cast<int>(i + 1)));
  }
  return Record(std::move(labels), std::move(components));
}

Expr Expr::Query(NfQuery q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kQuery;
  n->nf = std::make_shared<const NfQuery>(std::move(q));
  return Expr(std::move(n));
}

Expr Expr::OfIndex(IndexRef ref) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kIndex;
  n->index_ref = ref;
  return Expr(std::move(n));
}

Expr Expr::RowIndex() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kRowIndex;
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const std::string& Expr::var() const { return node_->var; }
const std::vector<std::string>& Expr::path() const { return node_->path; }
const Literal& Expr::literal() const { return node_->literal; }
PrimOp Expr::op() const { return node_->op; }
const std::vector<Expr>& Expr::args() const { return node_->args; }
const std::vector<std::string>& Expr::labels() const { return node_->labels; }

const Expr* Expr::field(const std::string& label) const {
  for (size_t i = 0; i < node_->labels.size(); ++i) {
    if (node_->labels[i] == label) return &node_->args[i];
  }
  return nullptr;
}

const NfQuery& Expr::nf_query() const { return *node_->nf; }
const ShQuery& Expr::sh_query() const { return *node_->sh; }
const LiQuery& Expr::li_query() const { return *node_->li; }
bool Expr::has_nf_query() const { return node_->nf != nullptr; }
bool Expr::has_sh_query() const { return node_->sh != nullptr; }
bool Expr::has_li_query() const { return node_->li != nullptr; }
const IndexRef& Expr::index_ref() const { return node_->index_ref; }

bool Expr::is_true() const {
  return kind() == Kind::kConst && literal().index() == 0 &&
         std::get<bool>(literal());
}

bool Expr::operator==(const Expr& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::kProject:
      return a.var == b.var && a.path == b.path;
    case Kind::kConst:
      return a.literal == b.literal;
    case Kind::kPrim:
      return a.op == b.op && a.args == b.args;
    case Kind::kRecord:
      return a.labels == b.labels && a.args == b.args;
    case Kind::kIndex:
      return a.index_ref == b.index_ref;
    case Kind::kRowIndex:
      return true;
    case Kind::kQuery:
    case Kind::kIsEmpty:
      if ((a.nf == nullptr) != (b.nf == nullptr) ||
          (a.sh == nullptr) != (b.sh == nullptr) ||
          (a.li == nullptr) != (b.li == nullptr)) {
        return false;
      }
      if (a.nf) return *a.nf == *b.nf;
      if (a.sh) return *a.sh == *b.sh;
      if (a.li) return *a.li == *b.li;
      return true;
  }
  return false;
}

Expr Conjoin(const Expr& a, const Expr& b) {
  if (a.is_true()) return b;
  if (b.is_true()) return a;
  return Expr::Prim(PrimOp::kAnd, {a, b});
}

}  // namespace shredq
