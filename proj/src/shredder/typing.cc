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

#include "shredq/shredder/typing.h"

#include "shredq/ast/error.h"
#include "shredq/ast/printer.h"

namespace shredq {

namespace {

enum class Form { kShredded, kLetInserted };

class Typer {
 public:
  Typer(const Schema& schema, Form form, const TypeEnv& env)
      : schema_(schema), form_(form), env_(env) {}

  Type Shredded(const ShQuery& q) {
    std::optional<Type> row;
    for (const auto& c : q.comprehensions) {
      TypeEnv saved = env_;
      for (const auto& level : c.levels) {
        for (const auto& g : level.generators) Bind(g, std::nullopt);
        ExpectBool(level.guard);
      }
      if (c.outer.dir != IndexRef::Dir::kOuter) {
        Fail(ErrorCode::kType,
             "inner index in the outer position of " + c.tag.Alias());
      }
      tag_ = c.tag;
      Type body = Type::Tuple({Type::Index(), Of(c.inner)});
      env_ = std::move(saved);
      Join(row, body);
    }
    return Type::Bag(row ? *row : Type::Any());
  }

  Type LetInserted(const LiQuery& q) {
    std::optional<Type> row;
    for (const auto& c : q.comprehensions) {
      TypeEnv saved = env_;
      std::optional<Type> let_row;
      if (c.let_query) let_row = Subquery(*c.let_query, std::nullopt);
      Type body = Subquery(c.main, let_row);
      env_ = std::move(saved);
      Join(row, body);
    }
    return Type::Bag(row ? *row : Type::Any());
  }

 private:
  Type Subquery(const LiSubquery& s, const std::optional<Type>& let_row) {
    TypeEnv saved = env_;
    for (const auto& g : s.generators) Bind(g, let_row);
    ExpectBool(s.guard);
    Type body = Of(s.body);
    env_ = std::move(saved);
    return body;
  }

  void Bind(const Generator& g, const std::optional<Type>& let_row) {
    if (g.from_let) {
      if (form_ != Form::kLetInserted || !let_row) {
        Fail(ErrorCode::kType,
             "generator '" + g.var + "' draws from an unbound let query");
      }
      env_[g.var] = *let_row;
      return;
    }
    if (!schema_.HasTable(g.source)) {
      Fail(ErrorCode::kMissingTable, "unknown table '" + g.source + "'");
    }
    env_[g.var] = schema_.table(g.source).RowType();
  }

  void ExpectBool(const Expr& e) {
    Type t = Of(e);
    if (t != Type::Bool()) {
      Fail(ErrorCode::kType,
           "guard " + PrintExpr(e) + " has type " + t.ToString());
    }
  }

  static void Join(std::optional<Type>& acc, const Type& t) {
    if (!acc) {
      acc = t;
    } else if (!Conforms(t, *acc)) {
      if (!Conforms(*acc, t)) {
        Fail(ErrorCode::kType, "union branches have types " + acc->ToString() +
                                   " and " + t.ToString());
      }
      acc = t;
    }
  }

  Type Of(const Expr& e) {
    switch (e.kind()) {
      case Expr::Kind::kProject: {
        auto it = env_.find(e.var());
        if (it == env_.end()) {
          Fail(ErrorCode::kUnboundVariable,
               "unbound variable '" + e.var() + "'");
        }
        Type t = it->second;
        for (const auto& l : e.path()) {
          const Type* f = t.is_record() ? t.field(l) : nullptr;
          if (f == nullptr) {
            Fail(ErrorCode::kType, "no field '" + l + "' in " + t.ToString());
          }
          t = *f;
        }
        return t;
      }
      case Expr::Kind::kConst:
        return Type::Base(LiteralType(e.literal()));
      case Expr::Kind::kPrim:
        return Prim(e);
      case Expr::Kind::kRecord: {
        std::vector<TypeField> fields;
        for (size_t i = 0; i < e.labels().size(); ++i) {
          fields.push_back({e.labels()[i], Of(e.args()[i])});
        }
        return Type::Record(std::move(fields));
      }
      case Expr::Kind::kIsEmpty: {
        if (form_ == Form::kShredded && e.has_sh_query()) {
          Typer(schema_, form_, env_).Shredded(e.sh_query());
        } else if (form_ == Form::kLetInserted && e.has_li_query()) {
          Typer(schema_, form_, env_).LetInserted(e.li_query());
        } else {
          Fail(ErrorCode::kType, "emptiness test over a query of another form");
        }
        return Type::Bool();
      }
      case Expr::Kind::kIndex:
        if (form_ != Form::kShredded ||
            e.index_ref().dir != IndexRef::Dir::kInner || !tag_ ||
            e.index_ref().tag != *tag_) {
          Fail(ErrorCode::kType, "misplaced index " + PrintExpr(e));
        }
        return Type::Index();
      case Expr::Kind::kRowIndex:
        if (form_ != Form::kLetInserted) {
          Fail(ErrorCode::kType, "row index outside a let-inserted query");
        }
        return Type::Int();
      case Expr::Kind::kQuery:
        Fail(ErrorCode::kType, "nested query inside a flat term");
    }
    Fail(ErrorCode::kType, "corrupt expression");
  }

  Type Prim(const Expr& e) {
    std::vector<Type> args;
    for (const auto& a : e.args()) args.push_back(Of(a));
    auto expect = [&](const Type& want) {
      for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] != want) {
          Fail(ErrorCode::kType, "argument " + PrintExpr(e.args()[i]) +
                                     " has type " + args[i].ToString() +
                                     ", expected " + want.ToString());
        }
      }
    };
    switch (e.op()) {
      case PrimOp::kAnd:
      case PrimOp::kOr:
      case PrimOp::kNot:
        expect(Type::Bool());
        return Type::Bool();
      case PrimOp::kAdd:
      case PrimOp::kSub:
      case PrimOp::kMul:
        expect(Type::Int());
        return Type::Int();
      default:
        if (!args[0].is_base() || args[0] != args[1]) {
          Fail(ErrorCode::kType, "ill-typed comparison " + PrintExpr(e));
        }
        return Type::Bool();
    }
  }

  const Schema& schema_;
  Form form_;
  TypeEnv env_;
  std::optional<StaticTag> tag_;
};

}  // namespace

Type TypecheckShredded(const ShQuery& q, const Schema& schema,
                       const TypeEnv& env) {
  return Typer(schema, Form::kShredded, env).Shredded(q);
}

Type TypecheckLetInserted(const LiQuery& q, const Schema& schema,
                          const TypeEnv& env) {
  return Typer(schema, Form::kLetInserted, env).LetInserted(q);
}

Type LetInsertedType(const Type& shredded) {
  switch (shredded.kind()) {
    case Type::Kind::kIndex:
      return Type::Tuple({Type::Int(), Type::Int()});
    case Type::Kind::kRecord: {
      std::vector<TypeField> fields;
      for (const auto& f : shredded.fields()) {
        fields.push_back({f.label, LetInsertedType(f.type)});
      }
      return Type::Record(std::move(fields));
    }
    case Type::Kind::kBag:
      return Type::Bag(LetInsertedType(shredded.element()));
    default:
      return shredded;
  }
}

bool Conforms(const Type& actual, const Type& expected) {
  if (actual.kind() == Type::Kind::kAny) return true;
  if (actual.kind() != expected.kind()) return false;
  switch (actual.kind()) {
    case Type::Kind::kRecord: {
      if (actual.fields().size() != expected.fields().size()) return false;
      for (const auto& f : actual.fields()) {
        const Type* other = expected.field(f.label);
        if (other == nullptr || !Conforms(f.type, *other)) return false;
      }
      return true;
    }
    case Type::Kind::kBag:
      return Conforms(actual.element(), expected.element());
    case Type::Kind::kFun:
      return Conforms(actual.param(), expected.param()) &&
             Conforms(actual.result(), expected.result());
    default:
      return actual == expected;
  }
}

}  // namespace shredq
