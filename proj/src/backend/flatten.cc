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

#include "shredq/backend/flatten.h"

#include <map>
#include <utility>

#include "shredq/ast/error.h"
#include "shredq/ast/printer.h"

namespace shredq {

namespace {

constexpr const char* kUnitLabel = "•";
// Environment slot of the let-bound subquery; not a valid identifier.
constexpr const char* kLetSlot = " let";

using Path = std::vector<std::string>;
using Env = std::map<std::string, Type>;
using Columns = std::vector<std::pair<std::string, Expr>>;

void CheckLabel(const std::string& label) {
  if (label.find('#') != std::string::npos && TupleLabelIndex(label) == 0) {
    Fail(ErrorCode::kSchema, "label '" + label + "' cannot be flattened");
  }
  if (label == kUnitLabel) {
    Fail(ErrorCode::kSchema, "label '" + label + "' is reserved");
  }
}

Path Append(const Path& p, const std::string& label) {
  Path out = p;
  out.push_back(label);
  return out;
}

void TypeColumns(const Type& t, const Path& prefix,
                 std::vector<FlatColumn>& out) {
  if (t.is_base()) {
    out.push_back({FlatLabel(prefix), t.base()});
    return;
  }
  if (!t.is_record())
    Fail(ErrorCode::kType, "not a flat type: " + t.ToString());
  if (t.fields().empty()) {
    out.push_back({FlatLabel(Append(prefix, kUnitLabel)), BaseType::kUnit});
    return;
  }
  for (const auto& f : t.fields()) {
    CheckLabel(f.label);
    TypeColumns(f.type, Append(prefix, f.label), out);
  }
}

Type WalkType(const Type& t, const Path& path) {
  Type cur = t;
  for (const auto& l : path) {
    const Type* f = cur.is_record() ? cur.field(l) : nullptr;
    if (f == nullptr) {
      Fail(ErrorCode::kType, "no field '" + l + "' in " + cur.ToString());
    }
    cur = *f;
  }
  return cur;
}

class Flattener {
 public:
  explicit Flattener(const Schema& schema) : schema_(schema) {}

  LiQuery Query(const LiQuery& q, const Env& env) {
    LiQuery out;
    for (const auto& c : q.comprehensions)
      out.comprehensions.push_back(Comp(c, env));
    return out;
  }

  LiComprehension Comp(const LiComprehension& c, const Env& env) {
    LiComprehension out;
    Env inner = env;
    if (c.let_query) {
      Env let_env = env;
      out.let_query = Sub(*c.let_query, let_env);
      inner[kLetSlot] = TypeOf(c.let_query->body, let_env);
    }
    out.main = Sub(c.main, inner);
    return out;
  }

 private:
  // Flattens a subquery; env is extended with its generators.
  LiSubquery Sub(const LiSubquery& s, Env& env) {
    for (const auto& g : s.generators) {
      if (g.from_let) {
        auto it = env.find(kLetSlot);
        if (it == env.end())
          Fail(ErrorCode::kType, "generator over an unbound let");
        env[g.var] = it->second;
      } else {
        const TableSchema& table = schema_.table(g.source);
        for (const auto& col : table.columns) CheckLabel(col.name);
        env[g.var] = table.RowType();
      }
    }
    LiSubquery out;
    out.generators = s.generators;
    out.guard = Scalar(s.guard, env);
    Columns cols;
    Expand(s.body, {}, env, cols);
    std::vector<std::string> labels;
    std::vector<Expr> fields;
    for (auto& [l, e] : cols) {
      labels.push_back(l);
      fields.push_back(std::move(e));
    }
    out.body = Expr::Record(std::move(labels), std::move(fields));
    return out;
  }

  void Expand(const Expr& e, const Path& prefix, const Env& env, Columns& out) {
    if (e.kind() == Expr::Kind::kRecord) {
      if (e.labels().empty()) {
        out.emplace_back(FlatLabel(Append(prefix, kUnitLabel)),
                         Expr::Const(UnitValue{}));
        return;
      }
      for (size_t i = 0; i < e.labels().size(); ++i) {
        CheckLabel(e.labels()[i]);
        Expand(e.args()[i], Append(prefix, e.labels()[i]), env, out);
      }
      return;
    }
    if (e.kind() == Expr::Kind::kProject) {
      ExpandProjection(e.var(), e.path(), Lookup(env, e.var(), e.path()),
                       prefix, out);
      return;
    }
    out.emplace_back(FlatLabel(prefix), Scalar(e, env));
  }

  void ExpandProjection(const std::string& var, const Path& path, const Type& t,
                        const Path& prefix, Columns& out) {
    if (t.is_base()) {
      out.emplace_back(FlatLabel(prefix), Expr::Project(var, FlatLabel(path)));
      return;
    }
    if (!t.is_record())
      Fail(ErrorCode::kType, "not a flat type: " + t.ToString());
    if (t.fields().empty()) {
      out.emplace_back(FlatLabel(Append(prefix, kUnitLabel)),
                       Expr::Const(UnitValue{}));
      return;
    }
    for (const auto& f : t.fields()) {
      ExpandProjection(var, Append(path, f.label), f.type,
                       Append(prefix, f.label), out);
    }
  }

  Expr Scalar(const Expr& e, const Env& env) {
    switch (e.kind()) {
      case Expr::Kind::kConst:
      case Expr::Kind::kRowIndex:
        return e;
      case Expr::Kind::kProject: {
        Type t = Lookup(env, e.var(), e.path());
        if (!t.is_base()) {
          Fail(ErrorCode::kType,
               "record used as a base value: " + PrintExpr(e));
        }
        return Expr::Project(e.var(), FlatLabel(e.path()));
      }
      case Expr::Kind::kPrim: {
        std::vector<Expr> args;
        for (const auto& a : e.args()) args.push_back(Scalar(a, env));
        return Expr::Prim(e.op(), std::move(args));
      }
      case Expr::Kind::kIsEmpty:
        if (!e.has_li_query()) {
          Fail(ErrorCode::kType, "emptiness test is not let-inserted");
        }
        return Expr::IsEmpty(Query(e.li_query(), env));
      default:
        Fail(ErrorCode::kType,
             "unexpected term in a let-inserted query: " + PrintExpr(e));
    }
  }

  Type TypeOf(const Expr& e, const Env& env) {
    switch (e.kind()) {
      case Expr::Kind::kConst:
        return Type::Base(LiteralType(e.literal()));
      case Expr::Kind::kRowIndex:
        return Type::Int();
      case Expr::Kind::kIsEmpty:
        return Type::Bool();
      case Expr::Kind::kProject:
        return Lookup(env, e.var(), e.path());
      case Expr::Kind::kPrim:
        switch (e.op()) {
          case PrimOp::kAdd:
          case PrimOp::kSub:
          case PrimOp::kMul:
            return Type::Int();
          default:
            return Type::Bool();
        }
      case Expr::Kind::kRecord: {
        std::vector<TypeField> fields;
        for (size_t i = 0; i < e.labels().size(); ++i) {
          fields.push_back({e.labels()[i], TypeOf(e.args()[i], env)});
        }
        return Type::Record(std::move(fields));
      }
      default:
        Fail(ErrorCode::kType,
             "unexpected term in a let-inserted query: " + PrintExpr(e));
    }
  }

  static Type Lookup(const Env& env, const std::string& var, const Path& path) {
    auto it = env.find(var);
    if (it == env.end())
      Fail(ErrorCode::kUnboundVariable, "unbound variable " + var);
    return WalkType(it->second, path);
  }

  const Schema& schema_;
};

Expr Reorder(const Expr& body, const std::vector<FlatColumn>& expected) {
  if (body.labels().size() != expected.size()) {
    Fail(ErrorCode::kColumnMismatch,
         "body has " + std::to_string(body.labels().size()) +
             " columns, expected " + std::to_string(expected.size()));
  }
  std::vector<std::string> labels;
  std::vector<Expr> fields;
  for (const auto& col : expected) {
    const Expr* f = body.field(col.label);
    if (f == nullptr)
      Fail(ErrorCode::kColumnMismatch, "missing column " + col.label);
    labels.push_back(col.label);
    fields.push_back(*f);
  }
  return Expr::Record(std::move(labels), std::move(fields));
}

bool ScalarFlat(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::kConst:
    case Expr::Kind::kRowIndex:
      return true;
    case Expr::Kind::kProject:
      return e.path().size() == 1;
    case Expr::Kind::kPrim:
      for (const auto& a : e.args()) {
        if (!ScalarFlat(a)) return false;
      }
      return true;
    case Expr::Kind::kIsEmpty:
      return e.has_li_query() && IsFlattened(e.li_query());
    default:
      return false;
  }
}

bool SubFlat(const LiSubquery& s) {
  if (!ScalarFlat(s.guard) || s.body.kind() != Expr::Kind::kRecord ||
      s.body.labels().empty()) {
    return false;
  }
  for (const auto& a : s.body.args()) {
    if (!ScalarFlat(a)) return false;
  }
  return true;
}

void ValueColumns(const Value& v, const Type& t, const Path& prefix,
                  std::vector<std::pair<std::string, Value>>& out) {
  if (t.is_base()) {
    if (!v.is_const())
      Fail(ErrorCode::kType, "expected a constant: " + v.ToString());
    out.emplace_back(FlatLabel(prefix), v);
    return;
  }
  if (!t.is_record() || !v.is_record()) {
    Fail(ErrorCode::kType,
         "value " + v.ToString() + " does not match " + t.ToString());
  }
  if (t.fields().empty()) {
    out.emplace_back(FlatLabel(Append(prefix, kUnitLabel)), Value());
    return;
  }
  for (const auto& f : t.fields()) {
    const Value* fv = v.field(f.label);
    if (fv == nullptr) Fail(ErrorCode::kType, "missing field " + f.label);
    ValueColumns(*fv, f.type, Append(prefix, f.label), out);
  }
}

Value Rebuild(const Value& flat, const Type& t, const Path& prefix) {
  if (t.is_base()) {
    std::string label = FlatLabel(prefix);
    const Value* v = flat.field(label);
    if (v == nullptr)
      Fail(ErrorCode::kColumnMismatch, "missing column " + label);
    return *v;
  }
  if (!t.is_record())
    Fail(ErrorCode::kType, "not a flat type: " + t.ToString());
  std::vector<std::pair<std::string, Value>> fields;
  for (const auto& f : t.fields()) {
    fields.emplace_back(f.label,
                        Rebuild(flat, f.type, Append(prefix, f.label)));
  }
  return Value::Record(std::move(fields));
}

}  // namespace

std::string FlatLabel(const std::vector<std::string>& path) {
  if (path.empty()) return kUnitLabel;
  std::string out;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += '#';
    int k = TupleLabelIndex(path[i]);
    out += k > 0 ? std::to_string(k) : path[i];
  }
  return out;
}

std::vector<FlatColumn> FlattenType(const Type& t) {
  std::vector<FlatColumn> out;
  TypeColumns(t, {}, out);
  return out;
}

LiQuery FlattenQuery(const LiQuery& q, const Schema& schema, const Type& row) {
  LiQuery out = Flattener(schema).Query(q, {});
  if (out.comprehensions.empty()) return out;
  std::vector<FlatColumn> expected = FlattenType(row);
  for (auto& c : out.comprehensions)
    c.main.body = Reorder(c.main.body, expected);
  return out;
}

bool IsFlattened(const LiQuery& q) {
  for (const auto& c : q.comprehensions) {
    if (c.let_query && !SubFlat(*c.let_query)) return false;
    if (!SubFlat(c.main)) return false;
  }
  return true;
}

Value FlattenValue(const Value& v, const Type& t) {
  std::vector<std::pair<std::string, Value>> cols;
  ValueColumns(v, t, {}, cols);
  return Value::Record(std::move(cols));
}

Value UnflattenValue(const Value& flat, const Type& t) {
  if (!flat.is_record())
    Fail(ErrorCode::kType, "not a flat row: " + flat.ToString());
  return Rebuild(flat, t, {});
}

Value UnflattenRows(const Value& rows, const Type& row) {
  if (!rows.is_bag()) Fail(ErrorCode::kType, "not a bag: " + rows.ToString());
  std::vector<Value> out;
  out.reserve(rows.elements().size());
  for (const auto& e : rows.elements())
    out.push_back(UnflattenValue(e.value, row));
  return Value::Bag(std::move(out));
}

}  // namespace shredq
