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

#include <optional>
#include <set>

#include "shredq/ast/error.h"
#include "shredq/normalizer/normalizer.h"

namespace shredq {

namespace {

struct Contraction {
  Term result;
  const char* rule;
};

class Rewriter {
 public:
  Rewriter(const Term& root, RewriteTrace* trace, int64_t fuel)
      : trace_(trace), fuel_(fuel < 0 ? DefaultFuel(root) : fuel) {
    CollectNames(root, taken_);
  }

  // One leftmost-outermost pass: contract at the root while possible, then
  // recurse into the children. Returns whether anything changed.
  template <typename Contract>
  Term Pass(const Term& t, const std::string& loc, bool& changed,
            const Contract& contract) {
    Term cur = t;
    while (std::optional<Contraction> c = contract(cur)) {
      Spend(c->rule, loc);
      cur = c->result;
      changed = true;
    }
    if (cur.children().empty()) return cur;
    std::vector<Term> kids;
    kids.reserve(cur.children().size());
    bool kid_changed = false;
    for (size_t i = 0; i < cur.children().size(); ++i) {
      bool c = false;
      kids.push_back(
          Pass(cur.child(i),
               loc.empty() ? std::to_string(i) : loc + "." + std::to_string(i),
               c, contract));
      kid_changed = kid_changed || c;
    }
    if (!kid_changed) return cur;
    changed = true;
    return cur.WithChildren(std::move(kids));
  }

  template <typename Contract>
  Term Fixpoint(const Term& t, bool& changed, const Contract& contract) {
    Term cur = t;
    while (true) {
      bool c = false;
      cur = Pass(cur, "", c, contract);
      if (!c) return cur;
      changed = true;
    }
  }

  std::optional<Contraction> ContractC(const Term& t) {
    switch (t.kind()) {
      case TermKind::kApp: {
        const Term& f = t.fun();
        if (f.kind() == TermKind::kLam) {
          return Contraction{Substitute(f.body(), f.name(), t.arg(), taken_),
                             "beta.fun"};
        }
        if (f.kind() == TermKind::kIf) {
          return Contraction{
              Term::If(f.cond(), Term::App(f.then_branch(), t.arg()),
                       Term::App(f.else_branch(), t.arg())),
              "comm.app.if"};
        }
        return std::nullopt;
      }
      case TermKind::kProject: {
        const Term& r = t.child(0);
        if (r.kind() == TermKind::kRecord) {
          for (size_t i = 0; i < r.labels().size(); ++i) {
            if (r.labels()[i] == t.label()) {
              return Contraction{r.child(i), "beta.record"};
            }
          }
          Fail(ErrorCode::kType, "projection of missing label " + t.label());
        }
        if (r.kind() == TermKind::kIf) {
          return Contraction{
              Term::If(r.cond(), Term::Project(r.then_branch(), t.label()),
                       Term::Project(r.else_branch(), t.label())),
              "comm.project.if"};
        }
        return std::nullopt;
      }
      case TermKind::kIf: {
        const Term& c = t.cond();
        if (c.is_bool_const(true))
          return Contraction{t.then_branch(), "beta.if"};
        if (c.is_bool_const(false))
          return Contraction{t.else_branch(), "beta.if"};
        if (c.kind() == TermKind::kIf) {
          return Contraction{
              Term::If(
                  c.cond(),
                  Term::If(c.then_branch(), t.then_branch(), t.else_branch()),
                  Term::If(c.else_branch(), t.then_branch(), t.else_branch())),
              "comm.if.if"};
        }
        return std::nullopt;
      }
      case TermKind::kFor: {
        const Term& src = t.source();
        const std::string& x = t.name();
        switch (src.kind()) {
          case TermKind::kSingleton:
            return Contraction{Substitute(t.body(), x, src.child(0), taken_),
                               "beta.for"};
          case TermKind::kFor: {
            // for (x <- for (y <- L) M) N  ~>  for (y <- L) for (x <- M) N
            std::string y = src.name();
            Term inner = src.body();
            if (FreeVars(t.body()).count(y)) {
              std::string fresh = FreshName(y, taken_);
              inner = Substitute(inner, y, Term::Var(fresh), taken_);
              y = fresh;
            }
            return Contraction{
                Term::For(y, src.source(), Term::For(x, inner, t.body())),
                "comm.for.for"};
          }
          case TermKind::kIf:
            return Contraction{
                Term::If(src.cond(), Term::For(x, src.then_branch(), t.body()),
                         Term::For(x, src.else_branch(), t.body())),
                "comm.for.if"};
          case TermKind::kEmpty:
            return Contraction{Term::Empty(), "comm.for.empty"};
          case TermKind::kUnion:
            return Contraction{Term::Union(Term::For(x, src.left(), t.body()),
                                           Term::For(x, src.right(), t.body())),
                               "comm.for.union"};
          default:
            return std::nullopt;
        }
      }
      default:
        return std::nullopt;
    }
  }

  std::optional<Contraction> ContractH(const Term& t) {
    const char* rule = nullptr;
    switch (t.kind()) {
      case TermKind::kPrim:
        rule = "hoist.prim";
        break;
      case TermKind::kRecord:
        rule = "hoist.record";
        break;
      case TermKind::kUnion:
        rule = "hoist.union";
        break;
      case TermKind::kSingleton:
        rule = "hoist.return";
        break;
      default:
        return std::nullopt;
    }
    for (size_t i = 0; i < t.children().size(); ++i) {
      const Term& c = t.child(i);
      if (c.kind() != TermKind::kIf) continue;
      std::vector<Term> then_kids = t.children();
      std::vector<Term> else_kids = t.children();
      then_kids[i] = c.then_branch();
      else_kids[i] = c.else_branch();
      return Contraction{
          Term::If(c.cond(), t.WithChildren(std::move(then_kids)),
                   t.WithChildren(std::move(else_kids))),
          rule};
    }
    return std::nullopt;
  }

 private:
  void Spend(const char* rule, const std::string& loc) {
    if (--fuel_ < 0) {
      Fail(ErrorCode::kInternalNonTermination,
           "rewriting did not terminate within its fuel");
    }
    if (trace_ != nullptr) trace_->push_back({rule, loc});
  }

  RewriteTrace* trace_;
  int64_t fuel_;
  std::set<std::string> taken_;
};

}  // namespace

int64_t DefaultFuel(const Term& t) {
  int64_t n = t.Size();
  return 10 * n * n;
}

Term SymbolicEval(const Term& t, RewriteTrace* trace, int64_t fuel) {
  Rewriter rw(t, trace, fuel);
  bool changed = false;
  return rw.Fixpoint(t, changed,
                     [&rw](const Term& u) { return rw.ContractC(u); });
}

Term HoistIfs(const Term& t, RewriteTrace* trace, int64_t fuel) {
  Rewriter rw(t, trace, fuel);
  bool changed = false;
  return rw.Fixpoint(t, changed,
                     [&rw](const Term& u) { return rw.ContractH(u); });
}

Term Simplify(const Term& t, RewriteTrace* trace, int64_t fuel) {
  Rewriter rw(t, trace, fuel);
  Term cur = t;
  while (true) {
    bool changed = false;
    cur = rw.Fixpoint(cur, changed,
                      [&rw](const Term& u) { return rw.ContractC(u); });
    bool hoisted = false;
    cur = rw.Fixpoint(cur, hoisted,
                      [&rw](const Term& u) { return rw.ContractH(u); });
    if (!hoisted) return cur;
  }
}

}  // namespace shredq
