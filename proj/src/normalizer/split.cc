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

#include <map>
#include <set>

#include "shredq/ast/error.h"
#include "shredq/ast/printer.h"
#include "shredq/frontend/typecheck.h"
#include "shredq/normalizer/normalizer.h"

namespace shredq {

namespace {

[[noreturn]] void NotNormal(const Term& t, const std::string& what) {
  Fail(ErrorCode::kNotNormalInput, what + ": " + PrintTerm(t));
}

class Splitter {
 public:
  Splitter(const Term& root, const Schema& schema) : schema_(schema) {
    CollectNames(root, taken_);
  }

  NfQuery SplitQuery(const Term& m, const Type& element,
                     std::map<std::string, Type>& env) {
    NfQuery q;
    SplitBag(m, element, env, {}, Expr::True(), q.comprehensions);
    return q;
  }

 private:
  void SplitBag(const Term& m, const Type& element,
                std::map<std::string, Type>& env, std::vector<Generator> gens,
                const Expr& guard, std::vector<NfComprehension>& out) {
    switch (m.kind()) {
      case TermKind::kSingleton: {
        NfComprehension c;
        c.generators = gens;
        c.guard = guard;
        c.body = SplitTerm(m.child(0), element, env);
        out.push_back(std::move(c));
        return;
      }
      case TermKind::kFor: {
        if (m.source().kind() != TermKind::kTable) {
          NotNormal(m, "generator over a non-table");
        }
        std::string x = m.name();
        Term body = m.body();
        if (env.count(x)) {
          std::string fresh = FreshName(x, taken_);
          body = Substitute(body, x, Term::Var(fresh), taken_);
          x = fresh;
        }
        const std::string& table = m.source().name();
        gens.push_back({x, table, false});
        env[x] = schema_.table(table).RowType();
        SplitBag(body, element, env, std::move(gens), guard, out);
        env.erase(x);
        return;
      }
      case TermKind::kTable: {
        std::string x = FreshName("_t" + std::to_string(table_vars_++), taken_);
        gens.push_back({x, m.name(), false});
        env[x] = schema_.table(m.name()).RowType();
        SplitBag(Term::Singleton(Term::Var(x)), element, env, std::move(gens),
                 guard, out);
        env.erase(x);
        return;
      }
      case TermKind::kEmpty:
        return;
      case TermKind::kUnion:
        SplitBag(m.left(), element, env, gens, guard, out);
        SplitBag(m.right(), element, env, std::move(gens), guard, out);
        return;
      case TermKind::kIf: {
        Expr c = SplitBase(m.cond(), env);
        SplitBag(m.then_branch(), element, env, gens, Conjoin(guard, c), out);
        SplitBag(m.else_branch(), element, env, std::move(gens),
                 Conjoin(guard, Expr::Prim(PrimOp::kNot, {c})), out);
        return;
      }
      default:
        NotNormal(m, "unexpected bag term");
    }
  }

  Expr SplitTerm(const Term& m, const Type& type,
                 std::map<std::string, Type>& env) {
    switch (type.kind()) {
      case Type::Kind::kBag: {
        return Expr::Query(SplitQuery(m, type.element(), env));
      }
      case Type::Kind::kRecord: {
        if (m.kind() == TermKind::kRecord) {
          std::vector<Expr> fields;
          for (size_t i = 0; i < m.labels().size(); ++i) {
            const Type* ft = type.field(m.labels()[i]);
            if (ft == nullptr) NotNormal(m, "record does not match its type");
            fields.push_back(SplitTerm(m.child(i), *ft, env));
          }
          return Expr::Record(m.labels(), std::move(fields));
        }
        if (m.kind() == TermKind::kVar) {
          std::vector<std::string> labels;
          std::vector<Expr> fields;
          for (const auto& f : type.fields()) {
            if (!f.type.is_base()) NotNormal(m, "variable of non-flat type");
            labels.push_back(f.label);
            fields.push_back(Expr::Project(m.name(), f.label));
          }
          return Expr::Record(std::move(labels), std::move(fields));
        }
        NotNormal(m, "unexpected record term");
      }
      case Type::Kind::kAny:
        return SplitUntyped(m, env);
      default:
        return SplitBase(m, env);
    }
  }

  // Used below bags whose element type could not be fixed (empty bags).
  Expr SplitUntyped(const Term& m, std::map<std::string, Type>& env) {
    switch (m.kind()) {
      case TermKind::kRecord: {
        std::vector<Expr> fields;
        for (const auto& c : m.children())
          fields.push_back(SplitUntyped(c, env));
        return Expr::Record(m.labels(), std::move(fields));
      }
      case TermKind::kVar: {
        auto it = env.find(m.name());
        if (it == env.end()) NotNormal(m, "unbound variable");
        return SplitTerm(m, it->second, env);
      }
      case TermKind::kEmpty:
      case TermKind::kFor:
      case TermKind::kUnion:
      case TermKind::kSingleton:
      case TermKind::kIf:
      case TermKind::kTable:
        return Expr::Query(SplitQuery(m, Type::Any(), env));
      default:
        return SplitBase(m, env);
    }
  }

  Expr SplitBase(const Term& m, std::map<std::string, Type>& env) {
    switch (m.kind()) {
      case TermKind::kProject:
        if (m.child(0).kind() != TermKind::kVar) {
          NotNormal(m, "projection from a non-variable");
        }
        if (!env.count(m.child(0).name())) NotNormal(m, "unbound variable");
        return Expr::Project(m.child(0).name(), m.label());
      case TermKind::kConst:
        return Expr::Const(m.literal());
      case TermKind::kPrim: {
        std::vector<Expr> args;
        for (const auto& c : m.children()) args.push_back(SplitBase(c, env));
        return Expr::Prim(m.op(), std::move(args));
      }
      case TermKind::kIsEmpty: {
        Type bag = Typecheck(m.child(0), schema_, env);
        if (!bag.is_bag()) NotNormal(m, "isEmpty of a non-bag");
        return Expr::IsEmpty(SplitQuery(m.child(0), bag.element(), env));
      }
      default:
        NotNormal(m, "unexpected base term");
    }
  }

  const Schema& schema_;
  std::set<std::string> taken_;
  int table_vars_ = 0;
};

// ---------------------------------------------------------------------------
// Generic traversal helpers over normal forms.

class Uniquifier {
 public:
  NfQuery Run(const NfQuery& q) {
    NfQuery out;
    for (const auto& c : q.comprehensions) {
      size_t depth = scope_.size();
      NfComprehension nc;
      for (const auto& g : c.generators) {
        std::string name = FreshName(g.var, taken_);
        scope_.emplace_back(g.var, name);
        nc.generators.push_back({name, g.source, g.from_let});
      }
      nc.guard = Rename(c.guard);
      nc.body = Rename(c.body);
      nc.tag = c.tag;
      scope_.resize(depth);
      out.comprehensions.push_back(std::move(nc));
    }
    return out;
  }

 private:
  Expr Rename(const Expr& e) {
    switch (e.kind()) {
      case Expr::Kind::kProject:
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
          if (it->first == e.var()) return Expr::Project(it->second, e.path());
        }
        return e;
      case Expr::Kind::kPrim: {
        std::vector<Expr> args;
        for (const auto& a : e.args()) args.push_back(Rename(a));
        return Expr::Prim(e.op(), std::move(args));
      }
      case Expr::Kind::kRecord: {
        std::vector<Expr> args;
        for (const auto& a : e.args()) args.push_back(Rename(a));
        return Expr::Record(e.labels(), std::move(args));
      }
      case Expr::Kind::kIsEmpty:
        return Expr::IsEmpty(Run(e.nf_query()));
      case Expr::Kind::kQuery:
        return Expr::Query(Run(e.nf_query()));
      default:
        return e;
    }
  }

  std::vector<std::pair<std::string, std::string>> scope_;
  std::set<std::string> taken_{"z"};
};

class Annotator {
 public:
  NfQuery Run(const NfQuery& q) {
    NfQuery out;
    for (const auto& c : q.comprehensions) {
      NfComprehension nc = c;
      nc.tag = StaticTag{next_++};
      nc.guard = Visit(c.guard);
      nc.body = Visit(c.body);
      out.comprehensions.push_back(std::move(nc));
    }
    return out;
  }

 private:
  Expr Visit(const Expr& e) {
    switch (e.kind()) {
      case Expr::Kind::kPrim: {
        std::vector<Expr> args;
        for (const auto& a : e.args()) args.push_back(Visit(a));
        return Expr::Prim(e.op(), std::move(args));
      }
      case Expr::Kind::kRecord: {
        std::vector<Expr> args;
        for (const auto& a : e.args()) args.push_back(Visit(a));
        return Expr::Record(e.labels(), std::move(args));
      }
      case Expr::Kind::kIsEmpty:
        return Expr::IsEmpty(Run(e.nf_query()));
      case Expr::Kind::kQuery:
        return Expr::Query(Run(e.nf_query()));
      default:
        return e;
    }
  }

  int next_ = 1;
};

class Validator {
 public:
  Validator(const Schema& schema, bool require_tags)
      : schema_(schema), require_tags_(require_tags) {}

  void Query(const NfQuery& q) {
    for (const auto& c : q.comprehensions) {
      if (c.tag) {
        if (c.tag->is_top()) Bad("the top tag is reserved");
        if (!tags_.insert(c.tag->id).second) {
          Fail(ErrorCode::kUnannotatedInput,
               "static tag " + c.tag->Alias() + " is used twice");
        }
      } else if (require_tags_) {
        Fail(ErrorCode::kUnannotatedInput, "comprehension without a tag");
      }
      size_t depth = scope_.size();
      for (const auto& g : c.generators) {
        if (g.from_let) Bad("let-bound generator in a normal form");
        if (!schema_.HasTable(g.source)) {
          Fail(ErrorCode::kMissingTable, "unknown table '" + g.source + "'");
        }
        for (const auto& [v, t] : scope_) {
          if (v == g.var) Bad("generator variable '" + g.var + "' is shadowed");
        }
        scope_.emplace_back(g.var, g.source);
      }
      Base(c.guard);
      Body(c.body);
      scope_.resize(depth);
    }
  }

 private:
  [[noreturn]] void Bad(const std::string& what) {
    Fail(ErrorCode::kNotNormalInput, "not a normal form: " + what);
  }

  void Base(const Expr& e) {
    switch (e.kind()) {
      case Expr::Kind::kProject: {
        if (e.path().size() != 1) Bad("projection path of length != 1");
        const std::string* table = nullptr;
        for (const auto& [v, t] : scope_) {
          if (v == e.var()) table = &t;
        }
        if (table == nullptr) Bad("unbound variable '" + e.var() + "'");
        if (schema_.table(*table).FindColumn(e.path()[0]) == nullptr) {
          Bad("no column '" + e.path()[0] + "' in " + *table);
        }
        return;
      }
      case Expr::Kind::kConst:
        return;
      case Expr::Kind::kPrim:
        for (const auto& a : e.args()) Base(a);
        return;
      case Expr::Kind::kIsEmpty:
        if (!e.has_nf_query()) Bad("isEmpty over a non-normal query");
        Query(e.nf_query());
        return;
      default:
        Bad("unexpected term in base position: " + PrintExpr(e));
    }
  }

  void Body(const Expr& e) {
    switch (e.kind()) {
      case Expr::Kind::kRecord:
        for (const auto& a : e.args()) Body(a);
        return;
      case Expr::Kind::kQuery:
        Query(e.nf_query());
        return;
      default:
        Base(e);
    }
  }

  const Schema& schema_;
  bool require_tags_;
  std::set<int> tags_;
  std::vector<std::pair<std::string, std::string>> scope_;
};

Term ExprToTerm(const Expr& e);

Term QueryToTerm(const NfQuery& q) {
  std::optional<Term> out;
  for (const auto& c : q.comprehensions) {
    Term t = Term::Singleton(ExprToTerm(c.body));
    if (!c.guard.is_true()) t = Term::If(ExprToTerm(c.guard), t, Term::Empty());
    for (auto it = c.generators.rbegin(); it != c.generators.rend(); ++it) {
      t = Term::For(it->var, Term::Table(it->source), t);
    }
    out = out ? Term::Union(*out, t) : t;
  }
  return out ? *out : Term::Empty();
}

Term ExprToTerm(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::kProject: {
      Term t = Term::Var(e.var());
      for (const auto& l : e.path()) t = Term::Project(t, l);
      return t;
    }
    case Expr::Kind::kConst:
      return Term::Const(e.literal());
    case Expr::Kind::kPrim: {
      std::vector<Term> args;
      for (const auto& a : e.args()) args.push_back(ExprToTerm(a));
      return Term::Prim(e.op(), std::move(args));
    }
    case Expr::Kind::kRecord: {
      std::vector<Term> fields;
      for (const auto& a : e.args()) fields.push_back(ExprToTerm(a));
      return Term::Record(e.labels(), std::move(fields));
    }
    case Expr::Kind::kIsEmpty:
      return Term::IsEmpty(QueryToTerm(e.nf_query()));
    case Expr::Kind::kQuery:
      return QueryToTerm(e.nf_query());
    default:
      Fail(ErrorCode::kNotNormalInput,
           "expression has no source equivalent: " + PrintExpr(e));
  }
}

// Reading normal-form-shaped terms.

bool IsBagShaped(const Term& t) {
  switch (t.kind()) {
    case TermKind::kFor:
    case TermKind::kUnion:
    case TermKind::kEmpty:
    case TermKind::kSingleton:
    case TermKind::kTable:
      return true;
    case TermKind::kIf:
      return t.else_branch().kind() == TermKind::kEmpty;
    default:
      return false;
  }
}

void ReadInto(const Term& t, std::vector<Generator> gens, const Expr& guard,
              std::vector<NfComprehension>& out);

Expr ReadExpr(const Term& t) {
  if (IsBagShaped(t)) {
    NfQuery q;
    ReadInto(t, {}, Expr::True(), q.comprehensions);
    return Expr::Query(std::move(q));
  }
  switch (t.kind()) {
    case TermKind::kProject:
      if (t.child(0).kind() != TermKind::kVar) {
        NotNormal(t, "projection from a non-variable");
      }
      return Expr::Project(t.child(0).name(), t.label());
    case TermKind::kConst:
      return Expr::Const(t.literal());
    case TermKind::kPrim: {
      std::vector<Expr> args;
      for (const auto& c : t.children()) args.push_back(ReadExpr(c));
      return Expr::Prim(t.op(), std::move(args));
    }
    case TermKind::kRecord: {
      std::vector<Expr> fields;
      for (const auto& c : t.children()) fields.push_back(ReadExpr(c));
      return Expr::Record(t.labels(), std::move(fields));
    }
    case TermKind::kIsEmpty: {
      NfQuery q;
      ReadInto(t.child(0), {}, Expr::True(), q.comprehensions);
      return Expr::IsEmpty(std::move(q));
    }
    default:
      NotNormal(t, "not in normal-form shape");
  }
}

void ReadInto(const Term& t, std::vector<Generator> gens, const Expr& guard,
              std::vector<NfComprehension>& out) {
  switch (t.kind()) {
    case TermKind::kUnion:
      ReadInto(t.left(), gens, guard, out);
      ReadInto(t.right(), std::move(gens), guard, out);
      return;
    case TermKind::kEmpty:
      return;
    case TermKind::kFor:
      if (t.source().kind() != TermKind::kTable) {
        NotNormal(t, "generator over a non-table");
      }
      gens.push_back({t.name(), t.source().name(), false});
      ReadInto(t.body(), std::move(gens), guard, out);
      return;
    case TermKind::kIf:
      if (t.else_branch().kind() != TermKind::kEmpty) {
        NotNormal(t, "conditional with a non-empty else branch");
      }
      ReadInto(t.then_branch(), std::move(gens),
               Conjoin(guard, ReadExpr(t.cond())), out);
      return;
    case TermKind::kSingleton: {
      NfComprehension c;
      c.generators = std::move(gens);
      c.guard = guard;
      c.body = ReadExpr(t.child(0));
      out.push_back(std::move(c));
      return;
    }
    default:
      NotNormal(t, "not in normal-form shape");
  }
}

class AlphaChecker {
 public:
  explicit AlphaChecker(bool tags) : tags_(tags) {}

  bool Query(const NfQuery& a, const NfQuery& b) {
    if (a.comprehensions.size() != b.comprehensions.size()) return false;
    for (size_t i = 0; i < a.comprehensions.size(); ++i) {
      const auto& ca = a.comprehensions[i];
      const auto& cb = b.comprehensions[i];
      if (ca.generators.size() != cb.generators.size()) return false;
      if (tags_) {
        if (ca.tag.has_value() != cb.tag.has_value()) return false;
        if (ca.tag && !Bijective(tag_map_, tag_rev_, ca.tag->id, cb.tag->id)) {
          return false;
        }
      }
      size_t depth = vars_.size();
      for (size_t j = 0; j < ca.generators.size(); ++j) {
        if (ca.generators[j].source != cb.generators[j].source) return false;
        vars_.emplace_back(ca.generators[j].var, cb.generators[j].var);
      }
      bool ok = Same(ca.guard, cb.guard) && Same(ca.body, cb.body);
      vars_.resize(depth);
      if (!ok) return false;
    }
    return true;
  }

 private:
  static bool Bijective(std::map<int, int>& fwd, std::map<int, int>& rev, int a,
                        int b) {
    auto f = fwd.find(a);
    auto r = rev.find(b);
    if (f == fwd.end() && r == rev.end()) {
      fwd[a] = b;
      rev[b] = a;
      return true;
    }
    return f != fwd.end() && r != rev.end() && f->second == b && r->second == a;
  }

  bool SameVar(const std::string& a, const std::string& b) {
    for (auto it = vars_.rbegin(); it != vars_.rend(); ++it) {
      if (it->first == a || it->second == b) {
        return it->first == a && it->second == b;
      }
    }
    return a == b;
  }

  bool Same(const Expr& a, const Expr& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Expr::Kind::kProject:
        return a.path() == b.path() && SameVar(a.var(), b.var());
      case Expr::Kind::kConst:
        return a.literal() == b.literal();
      case Expr::Kind::kPrim:
        if (a.op() != b.op()) return false;
        for (size_t i = 0; i < a.args().size(); ++i) {
          if (!Same(a.args()[i], b.args()[i])) return false;
        }
        return true;
      case Expr::Kind::kRecord:
        if (a.labels().size() != b.labels().size()) return false;
        for (size_t i = 0; i < a.labels().size(); ++i) {
          const Expr* other = b.field(a.labels()[i]);
          if (other == nullptr || !Same(a.args()[i], *other)) return false;
        }
        return true;
      case Expr::Kind::kIsEmpty:
      case Expr::Kind::kQuery:
        return a.has_nf_query() && b.has_nf_query() &&
               Query(a.nf_query(), b.nf_query());
      default:
        return a == b;
    }
  }

  bool tags_;
  std::vector<std::pair<std::string, std::string>> vars_;
  std::map<int, int> tag_map_, tag_rev_;
};

}  // namespace

NfQuery Split(const Term& t, const Type& element, const Schema& schema) {
  Splitter s(t, schema);
  std::map<std::string, Type> env;
  return s.SplitQuery(t, element, env);
}

NfQuery Normalize(const Term& t, const Type& type, const Schema& schema,
                  RewriteTrace* trace) {
  if (!type.is_bag()) {
    Fail(ErrorCode::kNotFlatNested,
         "query must have a bag type, got " + type.ToString());
  }
  Term simplified = Simplify(t, trace);
  return UniquifyVariables(Split(simplified, type.element(), schema));
}

NfQuery UniquifyVariables(const NfQuery& q) { return Uniquifier().Run(q); }

NfQuery Annotate(const NfQuery& q) { return Annotator().Run(q); }

void ValidateNormalForm(const NfQuery& q, const Schema& schema,
                        bool require_tags) {
  Validator(schema, require_tags).Query(q);
}

Term NormalFormToTerm(const NfQuery& q) { return QueryToTerm(q); }

NfQuery ReadNormalForm(const Term& t) {
  NfQuery q;
  ReadInto(t, {}, Expr::True(), q.comprehensions);
  return q;
}

bool AlphaEquivalent(const NfQuery& a, const NfQuery& b, bool compare_tags) {
  return AlphaChecker(compare_tags).Query(a, b);
}

}  // namespace shredq
