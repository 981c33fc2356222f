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

#include "context.h"
#include "shredq/ast/error.h"
#include "shredq/evaluator/evaluator.h"

namespace shredq {

namespace {

class TermEvaluator {
 public:
  explicit TermEvaluator(const Database& db) : db_(db) {}

  Value Eval(const Term& t, const TermEnv& env) {
    switch (t.kind()) {
      case TermKind::kVar:
        for (const EnvNode* n = env.get(); n != nullptr; n = n->next.get()) {
          if (n->name == t.name()) return n->value;
        }
        Fail(ErrorCode::kUnboundVariable,
             "unbound variable '" + t.name() + "'");
      case TermKind::kConst:
        return Value::Const(t.literal());
      case TermKind::kPrim: {
        if (t.op() == PrimOp::kAnd) {
          return Value::Bool(Eval(t.child(0), env).as_bool() &&
                             Eval(t.child(1), env).as_bool());
        }
        if (t.op() == PrimOp::kOr) {
          return Value::Bool(Eval(t.child(0), env).as_bool() ||
                             Eval(t.child(1), env).as_bool());
        }
        std::vector<Value> args;
        for (const auto& c : t.children()) args.push_back(Eval(c, env));
        return eval_internal::ApplyPrim(t.op(), args);
      }
      case TermKind::kTable:
        return Value::Bag(db_.rows(t.name()));
      case TermKind::kIf:
        return Eval(t.cond(), env).as_bool() ? Eval(t.then_branch(), env)
                                             : Eval(t.else_branch(), env);
      case TermKind::kLam:
        return Value::OfClosure(
            std::make_shared<const Closure>(Closure{t.name(), t.body(), env}));
      case TermKind::kApp: {
        Value f = Eval(t.fun(), env);
        if (!f.is_closure()) {
          Fail(ErrorCode::kType, "application of a non-function");
        }
        Value a = Eval(t.arg(), env);
        const Closure& c = *f.closure();
        return Eval(c.body, Extend(c.env, c.param, std::move(a)));
      }
      case TermKind::kRecord: {
        std::vector<std::pair<std::string, Value>> fields;
        for (size_t i = 0; i < t.labels().size(); ++i) {
          fields.emplace_back(t.labels()[i], Eval(t.child(i), env));
        }
        return Value::Record(std::move(fields));
      }
      case TermKind::kProject: {
        Value r = Eval(t.child(0), env);
        const Value* f = r.is_record() ? r.field(t.label()) : nullptr;
        if (f == nullptr) {
          Fail(ErrorCode::kType,
               "no field '" + t.label() + "' in " + r.ToString());
        }
        return *f;
      }
      case TermKind::kEmpty:
        return Value::Bag({});
      case TermKind::kSingleton:
        return Value::Bag({Eval(t.child(0), env)});
      case TermKind::kUnion: {
        std::vector<Value> out = Elements(Eval(t.left(), env));
        for (auto& v : Elements(Eval(t.right(), env)))
          out.push_back(std::move(v));
        return Value::Bag(std::move(out));
      }
      case TermKind::kFor: {
        std::vector<Value> out;
        for (auto& x : Elements(Eval(t.source(), env))) {
          for (auto& v : Elements(Eval(t.body(), Extend(env, t.name(), x)))) {
            out.push_back(std::move(v));
          }
        }
        return Value::Bag(std::move(out));
      }
      case TermKind::kIsEmpty:
        return Value::Bool(Eval(t.child(0), env).elements().empty());
    }
    Fail(ErrorCode::kType, "corrupt term");
  }

 private:
  static std::vector<Value> Elements(const Value& bag) {
    if (!bag.is_bag())
      Fail(ErrorCode::kType, "expected a bag, got " + bag.ToString());
    std::vector<Value> out;
    out.reserve(bag.elements().size());
    for (const auto& e : bag.elements()) out.push_back(e.value);
    return out;
  }

  const Database& db_;
};

}  // namespace

TermEnv Extend(TermEnv env, std::string name, Value value) {
  return std::make_shared<const EnvNode>(
      EnvNode{std::move(name), std::move(value), std::move(env)});
}

Value EvalTerm(const Term& t, const Database& db, const TermEnv& env) {
  return TermEvaluator(db).Eval(t, env);
}

}  // namespace shredq
