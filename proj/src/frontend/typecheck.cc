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

#include "shredq/frontend/typecheck.h"

#include <memory>
#include <set>
#include <vector>

#include "shredq/ast/error.h"
#include "shredq/ast/printer.h"

namespace shredq {

namespace {

std::string At(const Term& t) {
  if (t.pos().line == 0) return "";
  return std::to_string(t.pos().line) + ":" + std::to_string(t.pos().column) +
         ": ";
}

// ---------------------------------------------------------------------------
// Elaboration.

Term Resolve(const Term& t, std::set<std::string>& bound,
             const std::set<std::string>& globals, const Schema& schema) {
  switch (t.kind()) {
    case TermKind::kVar:
      if (bound.count(t.name()) || globals.count(t.name())) return t;
      if (schema.HasTable(t.name())) return Term::Table(t.name(), t.pos());
      Fail(ErrorCode::kUnboundVariable,
           At(t) + "unbound variable '" + t.name() + "'");
    case TermKind::kTable:
      if (!schema.HasTable(t.name())) {
        Fail(ErrorCode::kMissingTable,
             At(t) + "unknown table '" + t.name() + "'");
      }
      return t;
    case TermKind::kLam:
    case TermKind::kFor: {
      std::vector<Term> kids = t.children();
      size_t body = kids.size() - 1;
      if (t.kind() == TermKind::kFor) {
        kids[0] = Resolve(kids[0], bound, globals, schema);
      }
      bool fresh = bound.insert(t.name()).second;
      kids[body] = Resolve(kids[body], bound, globals, schema);
      if (fresh) bound.erase(t.name());
      return t.WithChildren(std::move(kids));
    }
    default: {
      if (t.children().empty()) return t;
      std::vector<Term> kids;
      for (const auto& c : t.children()) {
        kids.push_back(Resolve(c, bound, globals, schema));
      }
      return t.WithChildren(std::move(kids));
    }
  }
}

Term Rename(const Term& t,
            std::vector<std::pair<std::string, std::string>>& scope,
            std::set<std::string>& taken) {
  switch (t.kind()) {
    case TermKind::kVar:
      for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
        if (it->first == t.name()) return Term::Var(it->second, t.pos());
      }
      return t;
    case TermKind::kLam:
    case TermKind::kFor: {
      std::vector<Term> kids = t.children();
      size_t body = kids.size() - 1;
      if (t.kind() == TermKind::kFor) kids[0] = Rename(kids[0], scope, taken);
      std::string base = t.name().rfind("_t", 0) == 0 ? "u" : t.name();
      std::string name = FreshName(base, taken);
      scope.emplace_back(t.name(), name);
      kids[body] = Rename(kids[body], scope, taken);
      scope.pop_back();
      return t.WithChildren(std::move(kids)).WithName(name);
    }
    default: {
      if (t.children().empty()) return t;
      std::vector<Term> kids;
      for (const auto& c : t.children())
        kids.push_back(Rename(c, scope, taken));
      return t.WithChildren(std::move(kids));
    }
  }
}

// ---------------------------------------------------------------------------
// Type inference. Function types are represented by the set of closures
// that may flow to a position; applying one checks the closure body against
// the argument type.

struct TcType;
using TcPtr = std::shared_ptr<const TcType>;

struct TcEnvNode;
using TcEnv = std::shared_ptr<const TcEnvNode>;

struct TcEnvNode {
  std::string name;
  TcPtr type;
  TcEnv next;
};

struct ClosureAlt {
  Term lam;
  TcEnv env;
};

struct TcType {
  enum class Kind { kBase, kRecord, kBag, kAny, kClosure, kIndex };
  Kind kind = Kind::kAny;
  BaseType base = BaseType::kUnit;
  std::vector<std::pair<std::string, TcPtr>> fields;
  TcPtr element;
  std::vector<ClosureAlt> alts;
};

TcPtr MakeBase(BaseType b) {
  auto t = std::make_shared<TcType>();
  t->kind = TcType::Kind::kBase;
  t->base = b;
  return t;
}

TcPtr MakeAny() {
  static const TcPtr kAny = std::make_shared<TcType>();
  return kAny;
}

TcPtr MakeBag(TcPtr element) {
  auto t = std::make_shared<TcType>();
  t->kind = TcType::Kind::kBag;
  t->element = std::move(element);
  return t;
}

TcPtr FromType(const Type& ty) {
  switch (ty.kind()) {
    case Type::Kind::kBase:
      return MakeBase(ty.base());
    case Type::Kind::kBag:
      return MakeBag(FromType(ty.element()));
    case Type::Kind::kRecord: {
      auto t = std::make_shared<TcType>();
      t->kind = TcType::Kind::kRecord;
      for (const auto& f : ty.fields()) {
        t->fields.emplace_back(f.label, FromType(f.type));
      }
      return t;
    }
    case Type::Kind::kIndex: {
      auto t = std::make_shared<TcType>();
      t->kind = TcType::Kind::kIndex;
      return t;
    }
    case Type::Kind::kAny:
      return MakeAny();
    case Type::Kind::kFun:
      break;
  }
  Fail(ErrorCode::kType, "function types cannot be given for free variables");
}

Type ToType(const TcPtr& t) {
  switch (t->kind) {
    case TcType::Kind::kBase:
      return Type::Base(t->base);
    case TcType::Kind::kBag:
      return Type::Bag(ToType(t->element));
    case TcType::Kind::kRecord: {
      std::vector<TypeField> fields;
      for (const auto& [l, f] : t->fields) fields.push_back({l, ToType(f)});
      return Type::Record(std::move(fields));
    }
    case TcType::Kind::kIndex:
      return Type::Index();
    case TcType::Kind::kAny:
      return Type::Any();
    case TcType::Kind::kClosure:
      return Type::Fun(Type::Any(), Type::Any());
  }
  return Type::Any();
}

std::string Show(const TcPtr& t) { return ToType(t).ToString(); }

const TcPtr* FindField(const TcType& t, const std::string& label) {
  for (const auto& f : t.fields) {
    if (f.first == label) return &f.second;
  }
  return nullptr;
}

TcPtr Join(const TcPtr& a, const TcPtr& b, const Term& where) {
  if (a->kind == TcType::Kind::kAny) return b;
  if (b->kind == TcType::Kind::kAny) return a;
  auto mismatch = [&]() {
    Fail(ErrorCode::kType, At(where) + "type mismatch: " + Show(a) + " vs " +
                               Show(b) + " in " + PrintTerm(where));
  };
  if (a->kind != b->kind) mismatch();
  switch (a->kind) {
    case TcType::Kind::kBase:
      if (a->base != b->base) mismatch();
      return a;
    case TcType::Kind::kIndex:
      return a;
    case TcType::Kind::kBag:
      return MakeBag(Join(a->element, b->element, where));
    case TcType::Kind::kRecord: {
      if (a->fields.size() != b->fields.size()) mismatch();
      auto t = std::make_shared<TcType>();
      t->kind = TcType::Kind::kRecord;
      for (const auto& [l, f] : a->fields) {
        const TcPtr* o = FindField(*b, l);
        if (o == nullptr) mismatch();
        t->fields.emplace_back(l, Join(f, *o, where));
      }
      return t;
    }
    case TcType::Kind::kClosure: {
      auto t = std::make_shared<TcType>(*a);
      t->alts.insert(t->alts.end(), b->alts.begin(), b->alts.end());
      return t;
    }
    case TcType::Kind::kAny:
      break;
  }
  return a;
}

class Checker {
 public:
  explicit Checker(const Schema& schema) : schema_(schema) {}

  TcPtr Synth(const Term& t, const TcEnv& env) {
    switch (t.kind()) {
      case TermKind::kVar:
        for (const TcEnvNode* n = env.get(); n != nullptr; n = n->next.get()) {
          if (n->name == t.name()) return n->type;
        }
        Fail(ErrorCode::kUnboundVariable,
             At(t) + "unbound variable '" + t.name() + "'");
      case TermKind::kConst:
        return MakeBase(LiteralType(t.literal()));
      case TermKind::kTable:
        return FromType(Type::Bag(schema_.table(t.name()).RowType()));
      case TermKind::kPrim:
        return SynthPrim(t, env);
      case TermKind::kIf: {
        ExpectBase(t.cond(), Synth(t.cond(), env), BaseType::kBool);
        return Join(Synth(t.then_branch(), env), Synth(t.else_branch(), env),
                    t);
      }
      case TermKind::kLam: {
        auto c = std::make_shared<TcType>();
        c->kind = TcType::Kind::kClosure;
        c->alts.push_back({t, env});
        return c;
      }
      case TermKind::kApp:
        return SynthApp(t, env);
      case TermKind::kRecord: {
        auto r = std::make_shared<TcType>();
        r->kind = TcType::Kind::kRecord;
        for (size_t i = 0; i < t.labels().size(); ++i) {
          r->fields.emplace_back(t.labels()[i], Synth(t.child(i), env));
        }
        return r;
      }
      case TermKind::kProject: {
        TcPtr r = Synth(t.child(0), env);
        if (r->kind == TcType::Kind::kAny) return MakeAny();
        if (r->kind != TcType::Kind::kRecord) {
          Fail(ErrorCode::kType, At(t) + "projection ." + t.label() +
                                     " from non-record type " + Show(r));
        }
        const TcPtr* f = FindField(*r, t.label());
        if (f == nullptr) {
          Fail(ErrorCode::kType,
               At(t) + "no field '" + t.label() + "' in " + Show(r));
        }
        return *f;
      }
      case TermKind::kEmpty:
        return MakeBag(MakeAny());
      case TermKind::kSingleton:
        return MakeBag(Synth(t.child(0), env));
      case TermKind::kUnion: {
        TcPtr a = ExpectBag(t.left(), Synth(t.left(), env));
        TcPtr b = ExpectBag(t.right(), Synth(t.right(), env));
        return Join(a, b, t);
      }
      case TermKind::kFor: {
        TcPtr src = ExpectBag(t.source(), Synth(t.source(), env));
        TcEnv inner = std::make_shared<const TcEnvNode>(
            TcEnvNode{t.name(), src->element ? src->element : MakeAny(), env});
        return ExpectBag(t.body(), Synth(t.body(), inner));
      }
      case TermKind::kIsEmpty:
        ExpectBag(t.child(0), Synth(t.child(0), env));
        return MakeBase(BaseType::kBool);
    }
    Fail(ErrorCode::kType, "unknown term");
  }

 private:
  TcPtr ExpectBag(const Term& t, const TcPtr& ty) {
    if (ty->kind == TcType::Kind::kAny) return MakeBag(MakeAny());
    if (ty->kind != TcType::Kind::kBag) {
      Fail(ErrorCode::kType,
           At(t) + "expected a bag, got " + Show(ty) + " in " + PrintTerm(t));
    }
    return ty;
  }

  void ExpectBase(const Term& t, const TcPtr& ty, BaseType b) {
    if (ty->kind == TcType::Kind::kAny) return;
    if (ty->kind != TcType::Kind::kBase || ty->base != b) {
      Fail(ErrorCode::kType, At(t) + "expected " +
                                 std::string(BaseTypeName(b)) + ", got " +
                                 Show(ty) + " in " + PrintTerm(t));
    }
  }

  TcPtr SynthPrim(const Term& t, const TcEnv& env) {
    std::vector<TcPtr> args;
    for (const auto& c : t.children()) args.push_back(Synth(c, env));
    switch (t.op()) {
      case PrimOp::kAnd:
      case PrimOp::kOr:
      case PrimOp::kNot:
        for (size_t i = 0; i < args.size(); ++i) {
          ExpectBase(t.child(i), args[i], BaseType::kBool);
        }
        return MakeBase(BaseType::kBool);
      case PrimOp::kAdd:
      case PrimOp::kSub:
      case PrimOp::kMul:
        for (size_t i = 0; i < args.size(); ++i) {
          ExpectBase(t.child(i), args[i], BaseType::kInt);
        }
        return MakeBase(BaseType::kInt);
      default: {
        TcPtr joined = Join(args[0], args[1], t);
        if (joined->kind != TcType::Kind::kBase &&
            joined->kind != TcType::Kind::kAny) {
          Fail(ErrorCode::kType,
               At(t) + "comparison of non-base type " + Show(joined));
        }
        return MakeBase(BaseType::kBool);
      }
    }
  }

  TcPtr SynthApp(const Term& t, const TcEnv& env) {
    TcPtr f = Synth(t.fun(), env);
    TcPtr a = Synth(t.arg(), env);
    if (f->kind != TcType::Kind::kClosure) {
      Fail(ErrorCode::kType, At(t) + "application of non-function type " +
                                 Show(f) + " in " + PrintTerm(t));
    }
    if (++depth_ > kMaxDepth) {
      Fail(ErrorCode::kType,
           At(t) + "function application does not have a simple type");
    }
    TcPtr result;
    for (const auto& alt : f->alts) {
      TcEnv inner = std::make_shared<const TcEnvNode>(
          TcEnvNode{alt.lam.name(), a, alt.env});
      TcPtr r = Synth(alt.lam.body(), inner);
      result = result ? Join(result, r, t) : r;
    }
    --depth_;
    return result;
  }

  static constexpr int kMaxDepth = 2000;
  const Schema& schema_;
  int depth_ = 0;
};

}  // namespace

Term Elaborate(const SourceQuery& q, const Schema& schema) {
  std::set<std::string> globals;
  std::vector<std::pair<std::string, Term>> defs;
  std::set<std::string> taken;
  for (const auto& b : q.bindings) {
    if (globals.count(b.name)) {
      throw SyntaxError(b.pos.line, b.pos.column,
                        "duplicate binding '" + b.name + "'");
    }
    std::set<std::string> bound(b.params.begin(), b.params.end());
    Term body = Resolve(b.body, bound, globals, schema);
    for (auto it = b.params.rbegin(); it != b.params.rend(); ++it) {
      body = Term::Lam(*it, body, b.pos);
    }
    CollectNames(body, taken);
    for (const auto& [name, def] : defs) {
      body = Substitute(body, name, def, taken);
    }
    defs.emplace_back(b.name, body);
    globals.insert(b.name);
  }
  std::set<std::string> bound;
  Term main = Resolve(q.main, bound, globals, schema);
  CollectNames(main, taken);
  for (const auto& [name, def] : defs)
    main = Substitute(main, name, def, taken);
  return RenameBoundVariables(main);
}

Term RenameBoundVariables(const Term& t) {
  std::set<std::string> taken = FreeVars(t);
  taken.insert("z");
  std::vector<std::pair<std::string, std::string>> scope;
  return Rename(t, scope, taken);
}

Type Typecheck(const Term& t, const Schema& schema,
               const std::map<std::string, Type>& env) {
  TcEnv e;
  for (const auto& [name, ty] : env) {
    e = std::make_shared<const TcEnvNode>(TcEnvNode{name, FromType(ty), e});
  }
  return ToType(Checker(schema).Synth(t, e));
}

Type CheckQuery(const Term& t, const Schema& schema) {
  Type ty = Typecheck(t, schema);
  if (ContainsFunction(ty)) {
    Fail(ErrorCode::kNotFlatNested,
         "query result type contains a function: " + ty.ToString());
  }
  if (!ty.is_bag()) {
    Fail(ErrorCode::kNotFlatNested,
         "query must return a bag, got " + ty.ToString());
  }
  if (ContainsAny(ty)) {
    Fail(ErrorCode::kType,
         "cannot determine the element type of an empty bag in result type " +
             ty.ToString());
  }
  return ty;
}

CheckedQuery CompileSource(const std::string& text, const Schema& schema) {
  Term t = Elaborate(ParseQuery(text), schema);
  Type ty = CheckQuery(t, schema);
  return {t, ty};
}

}  // namespace shredq
