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

class ShreddedEvaluator {
 public:
  ShreddedEvaluator(const Database& db, const IndexFn& ix)
      : ctx_(db), ix_(ix) {}

  ShreddedResult Run(const ShQuery& q) {
    ShreddedResult out;
    for (const auto& c : q.comprehensions) {
      std::vector<int64_t> iota{1};
      Levels(c, 0, iota, out);
    }
    return out;
  }

 private:
  void Levels(const ShComprehension& c, size_t k, std::vector<int64_t>& iota,
              ShreddedResult& out) {
    if (k == c.levels.size()) {
      std::vector<int64_t> up(iota.begin(), iota.end() - 1);
      out.push_back({ix_.Apply(Index::Canonical(c.outer.tag, std::move(up))),
                     Inner(c.inner, iota),
                     ix_.Apply(Index::Canonical(c.tag, iota))});
      return;
    }
    ctx_.Enumerate(c.levels[k].generators, c.levels[k].guard, nullptr,
                   [&](int64_t j) {
                     iota.push_back(j);
                     Levels(c, k + 1, iota, out);
                     iota.pop_back();
                     return true;
                   });
  }

  Value Inner(const Expr& m, const std::vector<int64_t>& iota) {
    switch (m.kind()) {
      case Expr::Kind::kIndex:
        return Value::OfIndex(
            ix_.Apply(Index::Canonical(m.index_ref().tag, iota)));
      case Expr::Kind::kRecord: {
        std::vector<std::pair<std::string, Value>> fields;
        for (size_t i = 0; i < m.labels().size(); ++i) {
          fields.emplace_back(m.labels()[i], Inner(m.args()[i], iota));
        }
        return Value::Record(std::move(fields));
      }
      default:
        return ctx_.Eval(m);
    }
  }

  eval_internal::Context ctx_;
  const IndexFn& ix_;
};

Index DecodeIndex(const Value& pair) {
  const Value* a = pair.is_record() ? pair.field(TupleLabel(1)) : nullptr;
  const Value* d = pair.is_record() ? pair.field(TupleLabel(2)) : nullptr;
  if (a == nullptr || d == nullptr) {
    Fail(ErrorCode::kColumnMismatch,
         "expected an index pair, got " + pair.ToString());
  }
  return Index::Flat(StaticTag{static_cast<int>(a->as_int())}, d->as_int());
}

Value DecodePayload(const Value& v, const Type& t) {
  switch (t.kind()) {
    case Type::Kind::kIndex:
      return Value::OfIndex(DecodeIndex(v));
    case Type::Kind::kRecord: {
      std::vector<std::pair<std::string, Value>> fields;
      for (const auto& f : t.fields()) {
        const Value* fv = v.is_record() ? v.field(f.label) : nullptr;
        if (fv == nullptr) {
          Fail(ErrorCode::kColumnMismatch,
               "missing field '" + f.label + "' in " + v.ToString());
        }
        fields.emplace_back(f.label, DecodePayload(*fv, f.type));
      }
      return Value::Record(std::move(fields));
    }
    default:
      return v;
  }
}

}  // namespace

ShreddedResult EvalShredded(const ShQuery& q, const Database& db,
                            const IndexFn& ix) {
  return ShreddedEvaluator(db, ix).Run(q);
}

Value EvalLetInserted(const LiQuery& q, const Database& db) {
  eval_internal::Context ctx(db);
  std::vector<Value> out;
  for (const auto& c : q.comprehensions) {
    std::vector<Value> let_rows;
    if (c.let_query) let_rows = ctx.EvalSubquery(*c.let_query, nullptr);
    for (auto& v :
         ctx.EvalSubquery(c.main, c.let_query ? &let_rows : nullptr)) {
      out.push_back(std::move(v));
    }
  }
  return Value::Bag(std::move(out));
}

ShreddedResult DecodeLetInserted(const Value& rows, const Type& inner) {
  ShreddedResult out;
  for (const auto& e : rows.elements()) {
    const Value* outer =
        e.value.is_record() ? e.value.field(TupleLabel(1)) : nullptr;
    const Value* payload =
        e.value.is_record() ? e.value.field(TupleLabel(2)) : nullptr;
    if (outer == nullptr || payload == nullptr) {
      Fail(ErrorCode::kColumnMismatch,
           "expected a pair, got " + e.value.ToString());
    }
    out.push_back(
        {DecodeIndex(*outer), DecodePayload(*payload, inner), std::nullopt});
  }
  return out;
}

}  // namespace shredq
