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

#include <set>

#include "shredq/ast/error.h"
#include "shredq/ast/printer.h"

namespace shredq::eval_internal {

namespace {

int64_t Wrap(uint64_t v) { return static_cast<int64_t>(v); }

void CollectVars(const Expr& e, std::set<std::string>& out);

void CollectVars(const std::vector<Generator>& gens, const Expr& guard,
                 std::set<std::string>& out) {
  for (const auto& g : gens) out.insert(g.var);
  CollectVars(guard, out);
}

void CollectVars(const NfQuery& q, std::set<std::string>& out) {
  for (const auto& c : q.comprehensions) {
    CollectVars(c.generators, c.guard, out);
    CollectVars(c.body, out);
  }
}

// Every variable name occurring in e, including names bound inside nested
// queries.
void CollectVars(const Expr& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case Expr::Kind::kProject:
      out.insert(e.var());
      return;
    case Expr::Kind::kIsEmpty:
    case Expr::Kind::kQuery:
      if (e.has_nf_query()) {
        CollectVars(e.nf_query(), out);
      } else if (e.has_sh_query()) {
        for (const auto& c : e.sh_query().comprehensions) {
          for (const auto& l : c.levels)
            CollectVars(l.generators, l.guard, out);
          CollectVars(c.inner, out);
        }
      } else {
        for (const auto& c : e.li_query().comprehensions) {
          for (const LiSubquery* s :
               {c.let_query ? &*c.let_query : nullptr, &c.main}) {
            if (s == nullptr) continue;
            CollectVars(s->generators, s->guard, out);
            CollectVars(s->body, out);
          }
        }
      }
      return;
    default:
      for (const auto& a : e.args()) CollectVars(a, out);
      return;
  }
}

void SplitConjuncts(const Expr& e, std::vector<const Expr*>& out) {
  if (e.kind() == Expr::Kind::kPrim && e.op() == PrimOp::kAnd) {
    for (const auto& a : e.args()) SplitConjuncts(a, out);
  } else if (!e.is_true()) {
    out.push_back(&e);
  }
}

}  // namespace

Value ApplyPrim(PrimOp op, const std::vector<Value>& args) {
  switch (op) {
    case PrimOp::kAnd:
      return Value::Bool(args[0].as_bool() && args[1].as_bool());
    case PrimOp::kOr:
      return Value::Bool(args[0].as_bool() || args[1].as_bool());
    case PrimOp::kNot:
      return Value::Bool(!args[0].as_bool());
    case PrimOp::kAdd:
      return Value::Int(Wrap(static_cast<uint64_t>(args[0].as_int()) +
                             static_cast<uint64_t>(args[1].as_int())));
    case PrimOp::kSub:
      return Value::Int(Wrap(static_cast<uint64_t>(args[0].as_int()) -
                             static_cast<uint64_t>(args[1].as_int())));
    case PrimOp::kMul:
      return Value::Int(Wrap(static_cast<uint64_t>(args[0].as_int()) *
                             static_cast<uint64_t>(args[1].as_int())));
    default:
      break;
  }
  if (!args[0].is_const() || !args[1].is_const()) {
    Fail(ErrorCode::kType, "comparison of non-base values");
  }
  auto c = args[0].literal() <=> args[1].literal();
  switch (op) {
    case PrimOp::kEq:
      return Value::Bool(c == 0);
    case PrimOp::kNe:
      return Value::Bool(c != 0);
    case PrimOp::kLt:
      return Value::Bool(c < 0);
    case PrimOp::kGt:
      return Value::Bool(c > 0);
    case PrimOp::kLe:
      return Value::Bool(c <= 0);
    case PrimOp::kGe:
      return Value::Bool(c >= 0);
    default:
      break;
  }
  Fail(ErrorCode::kType, "unknown primitive");
}

const Value& Context::Lookup(const std::string& var) const {
  for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
    if (it->first == var) return it->second;
  }
  Fail(ErrorCode::kUnboundVariable, "unbound variable '" + var + "'");
}

Value Context::Eval(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::kProject: {
      const Value* v = &Lookup(e.var());
      for (const auto& l : e.path()) {
        const Value* f = v->is_record() ? v->field(l) : nullptr;
        if (f == nullptr) {
          Fail(ErrorCode::kType, "no field '" + l + "' in " + v->ToString());
        }
        v = f;
      }
      return *v;
    }
    case Expr::Kind::kConst:
      return Value::Const(e.literal());
    case Expr::Kind::kPrim: {
      if (e.op() == PrimOp::kAnd) {
        return Value::Bool(Eval(e.args()[0]).as_bool() &&
                           Eval(e.args()[1]).as_bool());
      }
      if (e.op() == PrimOp::kOr) {
        return Value::Bool(Eval(e.args()[0]).as_bool() ||
                           Eval(e.args()[1]).as_bool());
      }
      std::vector<Value> args;
      for (const auto& a : e.args()) args.push_back(Eval(a));
      return ApplyPrim(e.op(), args);
    }
    case Expr::Kind::kIsEmpty:
      if (e.has_nf_query()) return Value::Bool(IsEmpty(e.nf_query()));
      if (e.has_sh_query()) return Value::Bool(IsEmpty(e.sh_query()));
      return Value::Bool(IsEmpty(e.li_query()));
    case Expr::Kind::kRecord: {
      std::vector<std::pair<std::string, Value>> fields;
      for (size_t i = 0; i < e.labels().size(); ++i) {
        fields.emplace_back(e.labels()[i], Eval(e.args()[i]));
      }
      return Value::Record(std::move(fields));
    }
    case Expr::Kind::kRowIndex:
      return Value::Int(row_index);
    default:
      Fail(ErrorCode::kType, "cannot evaluate " + PrintExpr(e) + " here");
  }
}

bool Context::Enumerate(const std::vector<Generator>& gens, const Expr& guard,
                        const std::vector<Value>* let_rows,
                        const std::function<bool(int64_t)>& visit) {
  std::vector<const Expr*> conjuncts;
  SplitConjuncts(guard, conjuncts);
  std::vector<std::vector<const Expr*>> checks(gens.size() + 1);
  for (const Expr* c : conjuncts) {
    std::set<std::string> vars;
    CollectVars(*c, vars);
    size_t level = 0;
    for (size_t j = 0; j < gens.size(); ++j) {
      if (vars.count(gens[j].var)) level = j + 1;
    }
    checks[level].push_back(c);
  }
  int64_t position = 0;
  size_t depth = scope_.size();
  bool done = EnumerateFrom(gens, 0, checks, let_rows, position, visit);
  PopTo(depth);
  return done;
}

bool Context::EnumerateFrom(const std::vector<Generator>& gens, size_t i,
                            const std::vector<std::vector<const Expr*>>& checks,
                            const std::vector<Value>* let_rows,
                            int64_t& position,
                            const std::function<bool(int64_t)>& visit) {
  for (const Expr* c : checks[i]) {
    if (!EvalGuard(*c)) return true;
  }
  if (i == gens.size()) {
    size_t depth = scope_.size();
    bool go_on = visit(++position);
    PopTo(depth);
    return go_on;
  }
  const Generator& g = gens[i];
  const std::vector<Value>* rows;
  if (g.from_let) {
    if (let_rows == nullptr) {
      Fail(ErrorCode::kUnboundQueryName,
           "generator '" + g.var + "' reads an unbound let query");
    }
    rows = let_rows;
  } else {
    rows = &db_.rows(g.source);
  }
  for (const auto& r : *rows) {
    Push(g.var, r);
    bool go_on = EnumerateFrom(gens, i + 1, checks, let_rows, position, visit);
    scope_.pop_back();
    if (!go_on) return false;
  }
  return true;
}

bool Context::IsEmpty(const NfQuery& q) {
  for (const auto& c : q.comprehensions) {
    if (!Enumerate(c.generators, c.guard, nullptr,
                   [](int64_t) { return false; })) {
      return false;
    }
  }
  return true;
}

bool Context::LevelsEmpty(const std::vector<ShLevel>& levels, size_t i) {
  if (i == levels.size()) return false;
  return Enumerate(levels[i].generators, levels[i].guard, nullptr,
                   [&](int64_t) { return LevelsEmpty(levels, i + 1); });
}

bool Context::IsEmpty(const ShQuery& q) {
  for (const auto& c : q.comprehensions) {
    if (!LevelsEmpty(c.levels, 0)) return false;
  }
  return true;
}

bool Context::IsEmpty(const LiQuery& q) {
  for (const auto& c : q.comprehensions) {
    std::vector<Value> let_rows;
    if (c.let_query) let_rows = EvalSubquery(*c.let_query, nullptr);
    if (!Enumerate(c.main.generators, c.main.guard,
                   c.let_query ? &let_rows : nullptr,
                   [](int64_t) { return false; })) {
      return false;
    }
  }
  return true;
}

std::vector<Value> Context::EvalSubquery(const LiSubquery& s,
                                         const std::vector<Value>* let_rows) {
  std::vector<Value> out;
  int64_t saved = row_index;
  Enumerate(s.generators, s.guard, let_rows, [&](int64_t i) {
    row_index = i;
    out.push_back(Eval(s.body));
    return true;
  });
  row_index = saved;
  return out;
}

}  // namespace shredq::eval_internal
