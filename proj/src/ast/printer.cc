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

#include "shredq/ast/printer.h"

namespace shredq {

namespace {

// Precedence levels, loosest first.
enum Level {
  kOpen = 0,  // if, for, lambda, return: extend to the right
  kUnion = 1,
  kOr = 2,
  kAnd = 3,
  kNot = 4,
  kCompare = 5,
  kAdditive = 6,
  kMultiplicative = 7,
  kPostfix = 8,
  kAtom = 9,
};

int PrimLevel(PrimOp op) {
  switch (op) {
    case PrimOp::kOr:
      return kOr;
    case PrimOp::kAnd:
      return kAnd;
    case PrimOp::kNot:
      return kNot;
    case PrimOp::kAdd:
    case PrimOp::kSub:
      return kAdditive;
    case PrimOp::kMul:
      return kMultiplicative;
    default:
      return kCompare;
  }
}

bool IsTupleLabels(const std::vector<std::string>& labels) {
  if (labels.empty()) return false;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (TupleLabelIndex(labels[i]) != static_cast<int>(i + 1)) return false;
  }
  return true;
}

std::string LabelText(const std::string& label) {
  int k = TupleLabelIndex(label);
  return k > 0 ? std::to_string(k) : label;
}

bool IsNegativeInt(const Literal& lit) {
  return lit.index() == 1 && std::get<int64_t>(lit) < 0;
}

std::string LiteralText(const Literal& lit) {
  std::string s = LiteralToString(lit);
  return IsNegativeInt(lit) ? "(" + s + ")" : s;
}

// Prints a prim application given callbacks for its operands.
template <typename Node, typename PrintFn>
void PrintPrim(PrimOp op, const std::vector<Node>& args, std::string& out,
               const PrintFn& print) {
  int level = PrimLevel(op);
  if (op == PrimOp::kNot) {
    out += "not ";
    print(args[0], kNot, out);
    return;
  }
  bool compare = level == kCompare;
  print(args[0], compare ? kAdditive : level, out);
  out += " ";
  out += PrimOpSymbol(op);
  out += " ";
  print(args[1], compare ? kAdditive : level + 1, out);
}

void PrintTermAt(const Term& t, int min_level, std::string& out);

int TermLevel(const Term& t) {
  switch (t.kind()) {
    case TermKind::kIf:
    case TermKind::kFor:
    case TermKind::kLam:
    case TermKind::kSingleton:
      return kOpen;
    case TermKind::kUnion:
      return kUnion;
    case TermKind::kPrim:
      return PrimLevel(t.op());
    case TermKind::kApp:
    case TermKind::kProject:
      return kPostfix;
    default:
      return kAtom;
  }
}

void PrintTermBody(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::kVar:
      out += t.name();
      return;
    case TermKind::kConst:
      out += LiteralText(t.literal());
      return;
    case TermKind::kTable:
      out += "table " + t.name();
      return;
    case TermKind::kEmpty:
      out += "[]";
      return;
    case TermKind::kIsEmpty:
      out += "empty(";
      PrintTermAt(t.child(0), kOpen, out);
      out += ")";
      return;
    case TermKind::kRecord: {
      bool tuple = IsTupleLabels(t.labels());
      out += tuple ? "(" : "{";
      for (size_t i = 0; i < t.children().size(); ++i) {
        if (i > 0) out += ", ";
        if (!tuple) out += t.labels()[i] + " = ";
        PrintTermAt(t.child(i), kOpen, out);
      }
      if (tuple && t.children().size() == 1) out += ",";
      out += tuple ? ")" : "}";
      return;
    }
    case TermKind::kProject:
      PrintTermAt(t.child(0), kPostfix, out);
      out += "." + LabelText(t.label());
      return;
    case TermKind::kApp:
      PrintTermAt(t.fun(), kPostfix, out);
      out += "(";
      PrintTermAt(t.arg(), kOpen, out);
      out += ")";
      return;
    case TermKind::kPrim:
      PrintPrim(
          t.op(), t.children(), out,
          [](const Term& c, int l, std::string& o) { PrintTermAt(c, l, o); });
      return;
    case TermKind::kUnion:
      PrintTermAt(t.left(), kUnion, out);
      out += " ++ ";
      PrintTermAt(t.right(), kOr, out);
      return;
    case TermKind::kIf:
      out += "if ";
      PrintTermAt(t.cond(), kOpen, out);
      out += " then ";
      PrintTermAt(t.then_branch(), kOpen, out);
      out += " else ";
      PrintTermAt(t.else_branch(), kOpen, out);
      return;
    case TermKind::kFor:
      out += "for (" + t.name() + " <- ";
      PrintTermAt(t.source(), kOpen, out);
      out += ") ";
      PrintTermAt(t.body(), kOpen, out);
      return;
    case TermKind::kLam:
      out += "\\" + t.name() + " -> ";
      PrintTermAt(t.body(), kOpen, out);
      return;
    case TermKind::kSingleton:
      out += "return ";
      PrintTermAt(t.child(0), kOpen, out);
      return;
  }
}

void PrintTermAt(const Term& t, int min_level, std::string& out) {
  bool parens = TermLevel(t) < min_level;
  if (parens) out += "(";
  PrintTermBody(t, out);
  if (parens) out += ")";
}

// ---------------------------------------------------------------------------
// Comprehension forms.

void PrintNfQuery(const NfQuery& q, const std::string& sep, std::string& out);
void PrintShQuery(const ShQuery& q, const std::string& sep, std::string& out);
void PrintLiQuery(const LiQuery& q, const std::string& sep, std::string& out);

void PrintExprAt(const Expr& e, int min_level, std::string& out);

int ExprLevel(const Expr& e) {
  if (e.kind() == Expr::Kind::kPrim) return PrimLevel(e.op());
  return kAtom;
}

std::string IndexRefText(const IndexRef& r) {
  return r.tag.Alias() + (r.dir == IndexRef::Dir::kOuter ? "<out>" : "<in>");
}

void PrintExprBody(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case Expr::Kind::kProject:
      out += e.var();
      for (const auto& l : e.path()) out += "." + LabelText(l);
      return;
    case Expr::Kind::kConst:
      out += LiteralText(e.literal());
      return;
    case Expr::Kind::kPrim:
      PrintPrim(
          e.op(), e.args(), out,
          [](const Expr& c, int l, std::string& o) { PrintExprAt(c, l, o); });
      return;
    case Expr::Kind::kIsEmpty:
      out += "empty(";
      if (e.has_nf_query()) PrintNfQuery(e.nf_query(), " ++ ", out);
      if (e.has_sh_query()) PrintShQuery(e.sh_query(), " ++ ", out);
      if (e.has_li_query()) PrintLiQuery(e.li_query(), " ++ ", out);
      out += ")";
      return;
    case Expr::Kind::kRecord: {
      bool tuple = IsTupleLabels(e.labels());
      out += tuple ? "(" : "{";
      for (size_t i = 0; i < e.args().size(); ++i) {
        if (i > 0) out += ", ";
        if (!tuple) out += e.labels()[i] + " = ";
        PrintExprAt(e.args()[i], kOpen, out);
      }
      if (tuple && e.args().size() == 1) out += ",";
      out += tuple ? ")" : "}";
      return;
    }
    case Expr::Kind::kQuery:
      out += "(";
      PrintNfQuery(e.nf_query(), " ++ ", out);
      out += ")";
      return;
    case Expr::Kind::kIndex:
      out += IndexRefText(e.index_ref());
      return;
    case Expr::Kind::kRowIndex:
      out += "index";
      return;
  }
}

void PrintExprAt(const Expr& e, int min_level, std::string& out) {
  bool parens = ExprLevel(e) < min_level;
  if (parens) out += "(";
  PrintExprBody(e, out);
  if (parens) out += ")";
}

void PrintGenerators(const std::vector<Generator>& gens, std::string& out) {
  out += "for (";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += ", ";
    out += gens[i].var + " <- " + gens[i].source;
  }
  out += ")";
}

void PrintWhere(const Expr& guard, std::string& out) {
  if (guard.is_true()) return;
  out += " where (";
  PrintExprAt(guard, kOpen, out);
  out += ")";
}

// Prints "for (G) where (X) " and omits the parts that are empty or true.
void PrintClause(const std::vector<Generator>& gens, const Expr& guard,
                 std::string& out) {
  if (!gens.empty()) {
    PrintGenerators(gens, out);
    PrintWhere(guard, out);
    out += " ";
  } else if (!guard.is_true()) {
    out += "where (";
    PrintExprAt(guard, kOpen, out);
    out += ") ";
  }
}

void PrintNfQuery(const NfQuery& q, const std::string& sep, std::string& out) {
  if (q.comprehensions.empty()) {
    out += "[]";
    return;
  }
  for (size_t i = 0; i < q.comprehensions.size(); ++i) {
    const auto& c = q.comprehensions[i];
    if (i > 0) out += sep;
    PrintClause(c.generators, c.guard, out);
    out += "return";
    if (c.tag) out += "^" + c.tag->Alias();
    out += " ";
    PrintExprAt(c.body, kOpen, out);
  }
}

void PrintShQuery(const ShQuery& q, const std::string& sep, std::string& out) {
  if (q.comprehensions.empty()) {
    out += "[]";
    return;
  }
  for (size_t i = 0; i < q.comprehensions.size(); ++i) {
    const auto& c = q.comprehensions[i];
    if (i > 0) out += sep;
    for (const auto& level : c.levels) {
      PrintClause(level.generators, level.guard, out);
    }
    out += "return^" + c.tag.Alias() + " (" + IndexRefText(c.outer) + ", ";
    PrintExprAt(c.inner, kOpen, out);
    out += ")";
  }
}

void PrintSubquery(const LiSubquery& s, std::string& out) {
  PrintClause(s.generators, s.guard, out);
  out += "return ";
  PrintExprAt(s.body, kOpen, out);
}

void PrintLiQuery(const LiQuery& q, const std::string& sep, std::string& out) {
  if (q.comprehensions.empty()) {
    out += "[]";
    return;
  }
  for (size_t i = 0; i < q.comprehensions.size(); ++i) {
    const auto& c = q.comprehensions[i];
    if (i > 0) out += sep;
    if (c.let_query) {
      out += std::string("let ") + kLetQuery + " = ";
      PrintSubquery(*c.let_query, out);
      out += " in ";
    }
    PrintSubquery(c.main, out);
  }
}

}  // namespace

std::string PrintTerm(const Term& t) {
  std::string out;
  PrintTermAt(t, kOpen, out);
  return out;
}

std::string PrintExpr(const Expr& e) {
  std::string out;
  PrintExprAt(e, kOpen, out);
  return out;
}

std::string PrintNf(const NfQuery& q) {
  std::string out;
  PrintNfQuery(q, "\n++ ", out);
  return out;
}

std::string PrintSh(const ShQuery& q) {
  std::string out;
  PrintShQuery(q, "\n++ ", out);
  return out;
}

std::string PrintLi(const LiQuery& q) {
  std::string out;
  PrintLiQuery(q, "\n++ ", out);
  return out;
}

}  // namespace shredq
