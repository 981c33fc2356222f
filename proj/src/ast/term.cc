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

#include "shredq/ast/term.h"

#include <cctype>

#include "shredq/ast/error.h"

namespace shredq {

std::string_view PrimOpSymbol(PrimOp op) {
  switch (op) {
    case PrimOp::kEq:
      return "=";
    case PrimOp::kNe:
      return "<>";
    case PrimOp::kLt:
      return "<";
    case PrimOp::kGt:
      return ">";
    case PrimOp::kLe:
      return "<=";
    case PrimOp::kGe:
      return ">=";
    case PrimOp::kAnd:
      return "&&";
    case PrimOp::kOr:
      return "||";
    case PrimOp::kNot:
      return "not";
    case PrimOp::kAdd:
      return "+";
    case PrimOp::kSub:
      return "-";
    case PrimOp::kMul:
      return "*";
  }
  return "?";
}

int PrimOpArity(PrimOp op) { return op == PrimOp::kNot ? 1 : 2; }

Term::Term() : Term(Const(UnitValue{})) {}

Term Term::Make(Node n) {
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::Var(std::string name, SourcePos pos) {
  Node n;
  n.kind = TermKind::kVar;
  n.name = std::move(name);
  n.pos = pos;
  return Make(std::move(n));
}

Term Term::Const(Literal lit, SourcePos pos) {
  Node n;
  n.kind = TermKind::kConst;
  n.literal = std::move(lit);
  n.pos = pos;
  return Make(std::move(n));
}

Term Term::Prim(PrimOp op, std::vector<Term> args, SourcePos pos) {
  if (static_cast<int>(args.size()) != PrimOpArity(op)) {
    Fail(ErrorCode::kType, "wrong number of arguments for '" +
                               std::string(PrimOpSymbol(op)) + "'");
  }
  Node n;
  n.kind = TermKind::kPrim;
  n.op = op;
  n.children = std::move(args);
  n.pos = pos;
  return Make(std::move(n));
}

Term Term::Table(std::string name, SourcePos pos) {
  Node n;
  n.kind = TermKind::kTable;
  n.name = std::move(name);
  n.pos = pos;
  return Make(std::move(n));
}

Term Term::If(Term cond, Term then_branch, Term else_branch, SourcePos pos) {
  Node n;
  n.kind = TermKind::kIf;
  n.children = {std::move(cond), std::move(then_branch),
                std::move(else_branch)};
  n.pos = pos;
  return Make(std::move(n));
}

Term Term::Lam(std::string param, Term body, SourcePos pos) {
  Node n;
  n.kind = TermKind::kLam;
  n.name = std::move(param);
  n.children = {std::move(body)};
  n.pos = pos;
  return Make(std::move(n));
}

Term Term::App(Term fun, Term arg, SourcePos pos) {
  Node n;
  n.kind = TermKind::kApp;
  n.children = {std::move(fun), std::move(arg)};
  n.pos = pos;
  return Make(std::move(n));
}

Term Term::Record(std::vector<std::string> labels, std::vector<Term> fields,
                  SourcePos pos) {
  if (labels.size() != fields.size()) {
    Fail(ErrorCode::kType, "record labels and fields differ in length");
  }
  for (size_t i = 0; i < labels.size(); ++i) {
    for (size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == labels[j]) {
        Fail(ErrorCode::kType, "duplicate record label '" + labels[i] + "'");
      }
    }
  }
  Node n;
  n.kind = TermKind::kRecord;
  n.labels = std::move(labels);
  n.children = std::move(fields);
  n.pos = pos;
  return Make(std::move(n));
}

Term Term::Tuple(std::vector<Term> components, SourcePos pos) {
  std::vector<std::string> labels;
  for (size_t i = 0; i < components.size(); ++i) {
    labels.push_back(TupleLabel(static_cast<int>(i + 1)));
  }
  return Record(std::move(labels), std::move(components), pos);
}

Term Term::Project(Term record, std::string label, SourcePos pos) {
  Node n;
  n.kind = TermKind::kProject;
  n.name = std::move(label);
  n.children = {std::move(record)};
  n.pos = pos;
  return Make(std::move(n));
}

Term Term::Empty(SourcePos pos) {
  Node n;
  n.kind = TermKind::kEmpty;
  n.pos = pos;
  return Make(std::move(n));
}

Term Term::Singleton(Term element, SourcePos pos) {
  Node n;
  n.kind = TermKind::kSingleton;
  n.children = {std::move(element)};
  n.pos = pos;
  return Make(std::move(n));
}

Term Term::Union(Term left, Term right, SourcePos pos) {
  Node n;
  n.kind = TermKind::kUnion;
  n.children = {std::move(left), std::move(right)};
  n.pos = pos;
  return Make(std::move(n));
}

Term Term::For(std::string var, Term source, Term body, SourcePos pos) {
  Node n;
  n.kind = TermKind::kFor;
  n.name = std::move(var);
  n.children = {std::move(source), std::move(body)};
  n.pos = pos;
  return Make(std::move(n));
}

Term Term::IsEmpty(Term bag, SourcePos pos) {
  Node n;
  n.kind = TermKind::kIsEmpty;
  n.children = {std::move(bag)};
  n.pos = pos;
  return Make(std::move(n));
}

bool Term::is_bool_const(bool b) const {
  return kind() == TermKind::kConst && literal().index() == 0 &&
         std::get<bool>(literal()) == b;
}

Term Term::WithChildren(std::vector<Term> children) const {
  Node n = *node_;
  n.children = std::move(children);
  return Make(std::move(n));
}

Term Term::WithName(std::string name) const {
  Node n = *node_;
  n.name = std::move(name);
  return Make(std::move(n));
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind || a.name != b.name || a.labels != b.labels ||
      a.children.size() != b.children.size()) {
    return false;
  }
  if (a.kind == TermKind::kConst && a.literal != b.literal) return false;
  if (a.kind == TermKind::kPrim && a.op != b.op) return false;
  for (size_t i = 0; i < a.children.size(); ++i) {
    if (a.children[i] != b.children[i]) return false;
  }
  return true;
}

int Term::Size() const {
  int n = 1;
  for (const auto& c : children()) n += c.Size();
  return n;
}

namespace {

void Free(const Term& t, std::set<std::string>& bound,
          std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::kVar:
      if (!bound.count(t.name())) out.insert(t.name());
      return;
    case TermKind::kLam:
    case TermKind::kFor: {
      if (t.kind() == TermKind::kFor) Free(t.source(), bound, out);
      bool fresh = bound.insert(t.name()).second;
      Free(t.body(), bound, out);
      if (fresh) bound.erase(t.name());
      return;
    }
    default:
      for (const auto& c : t.children()) Free(c, bound, out);
  }
}

bool OccursFree(const Term& t, const std::string& var) {
  switch (t.kind()) {
    case TermKind::kVar:
      return t.name() == var;
    case TermKind::kLam:
      return t.name() != var && OccursFree(t.body(), var);
    case TermKind::kFor:
      return OccursFree(t.source(), var) ||
             (t.name() != var && OccursFree(t.body(), var));
    default:
      for (const auto& c : t.children()) {
        if (OccursFree(c, var)) return true;
      }
      return false;
  }
}

Term Subst(const Term& t, const std::string& var, const Term& value,
           const std::set<std::string>& value_free,
           std::set<std::string>& taken) {
  switch (t.kind()) {
    case TermKind::kVar:
      return t.name() == var ? value : t;
    case TermKind::kConst:
    case TermKind::kTable:
    case TermKind::kEmpty:
      return t;
    case TermKind::kLam:
    case TermKind::kFor: {
      std::vector<Term> kids = t.children();
      size_t body_ix = kids.size() - 1;
      if (t.kind() == TermKind::kFor) {
        kids[0] = Subst(kids[0], var, value, value_free, taken);
      }
      if (t.name() == var || !OccursFree(kids[body_ix], var)) {
        return t.WithChildren(std::move(kids));
      }
      std::string name = t.name();
      if (value_free.count(name)) {
        std::string renamed = FreshName(name, taken);
        kids[body_ix] =
            Subst(kids[body_ix], name, Term::Var(renamed), {renamed}, taken);
        name = renamed;
      }
      kids[body_ix] = Subst(kids[body_ix], var, value, value_free, taken);
      return t.WithChildren(std::move(kids)).WithName(name);
    }
    default: {
      std::vector<Term> kids;
      kids.reserve(t.children().size());
      bool changed = false;
      for (const auto& c : t.children()) {
        kids.push_back(Subst(c, var, value, value_free, taken));
        changed = changed || !(kids.back() == c);
      }
      return changed ? t.WithChildren(std::move(kids)) : t;
    }
  }
}

}  // namespace

std::set<std::string> FreeVars(const Term& t) {
  std::set<std::string> bound, out;
  Free(t, bound, out);
  return out;
}

Term Substitute(const Term& t, const std::string& var, const Term& value,
                std::set<std::string>& taken) {
  return Subst(t, var, value, FreeVars(value), taken);
}

void CollectNames(const Term& t, std::set<std::string>& out) {
  if (t.kind() == TermKind::kVar || t.kind() == TermKind::kLam ||
      t.kind() == TermKind::kFor) {
    out.insert(t.name());
  }
  for (const auto& c : t.children()) CollectNames(c, out);
}

std::string FreshName(const std::string& base, std::set<std::string>& taken) {
  if (!taken.count(base)) {
    taken.insert(base);
    return base;
  }
  std::string stem = base;
  while (stem.size() > 1 &&
         std::isdigit(static_cast<unsigned char>(stem.back()))) {
    stem.pop_back();
  }
  for (int i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (taken.insert(candidate).second) return candidate;
  }
}

}  // namespace shredq
