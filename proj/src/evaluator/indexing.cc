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

#include "context.h"
#include "shredq/ast/error.h"
#include "shredq/evaluator/evaluator.h"

namespace shredq {

namespace {

// Evaluates a normal form while tracking the canonical index of every bag
// element and, on request, its natural index.
class NfWalker {
 public:
  NfWalker(const Database& db, const Schema* schema)
      : ctx_(db), schema_(schema) {}

  Value Query(const NfQuery& q, std::vector<int64_t>& iota) {
    std::vector<Value::Element> elements;
    for (const auto& c : q.comprehensions) {
      ctx_.Enumerate(c.generators, c.guard, nullptr, [&](int64_t j) {
        iota.push_back(j);
        size_t key_depth = keys_.size();
        std::optional<Index> canonical;
        if (c.tag) {
          canonical = Index::Canonical(*c.tag, iota);
          if (schema_ != nullptr) {
            for (const auto& g : c.generators) {
              keys_.push_back(KeyOf(g.source, ctx_.Lookup(g.var)));
            }
            natural.push_back(Index::Natural(*c.tag, keys_));
          }
          order.push_back(*canonical);
        } else if (require_tags) {
          Fail(ErrorCode::kUnannotatedInput,
               "indexes need an annotated normal form");
        }
        Value v = Body(c.body, iota);
        keys_.resize(key_depth);
        iota.pop_back();
        elements.push_back({std::move(v), std::move(canonical)});
        return true;
      });
    }
    return Value::AnnotatedBag(std::move(elements));
  }

  Value Run(const NfQuery& q) {
    std::vector<int64_t> iota{1};
    return Query(q, iota);
  }

  bool require_tags = false;
  std::vector<Index> order;
  std::vector<Index> natural;

 private:
  Value Body(const Expr& m, std::vector<int64_t>& iota) {
    switch (m.kind()) {
      case Expr::Kind::kRecord: {
        std::vector<std::pair<std::string, Value>> fields;
        for (size_t i = 0; i < m.labels().size(); ++i) {
          fields.emplace_back(m.labels()[i], Body(m.args()[i], iota));
        }
        return Value::Record(std::move(fields));
      }
      case Expr::Kind::kQuery:
        return Query(m.nf_query(), iota);
      default:
        return ctx_.Eval(m);
    }
  }

  NaturalKey KeyOf(const std::string& table, const Value& row) {
    const TableSchema& ts = schema_->table(table);
    if (checked_.insert(table).second) ctx_.db().CheckKey(*schema_, table);
    NaturalKey k{table, {}};
    for (const auto& col : ts.key)
      k.values.push_back(row.field(col)->literal());
    return k;
  }

  eval_internal::Context ctx_;
  const Schema* schema_;
  std::vector<NaturalKey> keys_;
  std::set<std::string> checked_;
};

Value Reannotate(const Value& v, const IndexFn& ix) {
  switch (v.kind()) {
    case Value::Kind::kRecord: {
      std::vector<std::pair<std::string, Value>> fields;
      for (const auto& [l, f] : v.fields())
        fields.emplace_back(l, Reannotate(f, ix));
      return Value::Record(std::move(fields));
    }
    case Value::Kind::kBag: {
      std::vector<Value::Element> elements;
      for (const auto& e : v.elements()) {
        std::optional<Index> a;
        if (e.annotation) a = ix.Apply(*e.annotation);
        elements.push_back({Reannotate(e.value, ix), std::move(a)});
      }
      return Value::AnnotatedBag(std::move(elements));
    }
    default:
      return v;
  }
}

}  // namespace

Value EvalNormalForm(const NfQuery& q, const Database& db) {
  return EraseAnnotations(NfWalker(db, nullptr).Run(q));
}

std::vector<Index> CanonicalIndexes(const NfQuery& l, const Database& db) {
  NfWalker w(db, nullptr);
  w.require_tags = true;
  w.Run(l);
  return std::move(w.order);
}

std::vector<Index> NaturalIndexes(const NfQuery& l, const Database& db,
                                  const Schema& schema) {
  NfWalker w(db, &schema);
  w.require_tags = true;
  w.Run(l);
  return std::move(w.natural);
}

IndexFn IndexFn::Canonical() {
  IndexFn f;
  f.scheme_ = IndexScheme::kCanonical;
  f.root_ = Index::Canonical(StaticTag::Top(), {1});
  return f;
}

IndexFn IndexFn::Natural(const NfQuery& l, const Database& db,
                         const Schema& schema) {
  NfWalker w(db, &schema);
  w.require_tags = true;
  w.Run(l);
  auto table = std::make_shared<Table>();
  std::set<Index> seen;
  for (size_t i = 0; i < w.order.size(); ++i) {
    if (!seen.insert(w.natural[i]).second) {
      Fail(ErrorCode::kKeyNotUnique,
           "natural index " + w.natural[i].ToString() + " is not unique");
    }
    table->emplace(w.order[i], w.natural[i]);
  }
  IndexFn f;
  f.scheme_ = IndexScheme::kNatural;
  f.root_ = Index::Natural(StaticTag::Top(), {});
  f.table_ = std::move(table);
  return f;
}

IndexFn IndexFn::Flat(const NfQuery& l, const Database& db) {
  auto table = std::make_shared<Table>();
  std::map<int, int64_t> counters;
  for (const auto& c : CanonicalIndexes(l, db)) {
    table->emplace(c, Index::Flat(c.tag, ++counters[c.tag.id]));
  }
  IndexFn f;
  f.scheme_ = IndexScheme::kFlat;
  f.root_ = Index::Flat(StaticTag::Top(), 1);
  f.table_ = std::move(table);
  return f;
}

IndexFn IndexFn::FromFunction(IndexScheme scheme,
                              std::function<Index(const Index&)> fn,
                              Index root) {
  IndexFn f;
  f.scheme_ = scheme;
  f.root_ = std::move(root);
  f.fn_ = std::move(fn);
  return f;
}

Index IndexFn::Apply(const Index& canonical) const {
  if (canonical.tag.is_top()) return root_;
  if (fn_) return fn_(canonical);
  if (!table_) return canonical;
  auto it = table_->find(canonical);
  if (it == table_->end()) {
    Fail(ErrorCode::kIndexUndefined,
         "index " + canonical.ToString() + " is outside the domain");
  }
  return it->second;
}

bool IndexFn::IsValidOn(const std::vector<Index>& canonical) const {
  std::set<Index> images;
  for (const auto& c : canonical) {
    try {
      if (!images.insert(Apply(c)).second) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

Value EvalAnnotated(const NfQuery& l, const Database& db, const IndexFn& ix) {
  NfWalker w(db, nullptr);
  w.require_tags = true;
  return Reannotate(w.Run(l), ix);
}

bool IsWellIndexed(const Value& annotated, const Type& type) {
  for (const auto& p : PathsOf(type)) {
    std::set<Index> seen;
    for (const auto& ix : IndexesAt(p, annotated)) {
      if (!seen.insert(ix).second) return false;
    }
  }
  return true;
}

}  // namespace shredq
