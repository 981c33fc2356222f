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

#include "shredq/backend/let_insert.h"

#include <map>

#include "shredq/ast/error.h"
#include "shredq/ast/printer.h"

namespace shredq {

namespace {

using YMap = std::map<std::string, int>;

class LetInserter {
 public:
  explicit LetInserter(const Schema& schema) : schema_(schema) {}

  LiQuery Top(const ShQuery& m) {
    LiQuery out;
    for (const auto& c : m.comprehensions)
      out.comprehensions.push_back(Comprehension(c));
    return out;
  }

 private:
  LiComprehension Comprehension(const ShComprehension& c) {
    for (const auto& level : c.levels) CheckNames(level.generators);
    const ShLevel& last = c.levels.back();
    LiComprehension out;
    if (c.levels.size() == 1) {
      Expr outer = Expr::Tuple(
          {TagLiteral(c.outer.tag), Expr::Const(Literal(int64_t{1}))});
      out.main = {last.generators, Rewrite(last.guard, {}),
                  Expr::Tuple({outer, Rewrite(c.inner, {})})};
      return out;
    }
    LiSubquery up;
    std::vector<Expr> rows;
    YMap y;
    for (size_t k = 0; k + 1 < c.levels.size(); ++k) {
      const ShLevel& level = c.levels[k];
      up.guard = Conjoin(up.guard, Rewrite(level.guard, {}));
      for (const auto& g : level.generators) {
        up.generators.push_back(g);
        y[g.var] = static_cast<int>(up.generators.size());
        rows.push_back(Expand(g));
      }
    }
    up.body = Expr::Tuple({Expr::Tuple(std::move(rows)), Expr::RowIndex()});
    out.let_query = std::move(up);
    out.main.generators.push_back({kLetVar, kLetQuery, true});
    for (const auto& g : last.generators) out.main.generators.push_back(g);
    out.main.guard = Rewrite(last.guard, y);
    Expr outer = Expr::Tuple(
        {TagLiteral(c.outer.tag), Expr::Project(kLetVar, TupleLabel(2))});
    out.main.body = Expr::Tuple({outer, Rewrite(c.inner, y)});
    return out;
  }

  static Expr TagLiteral(StaticTag tag) {
    return Expr::Const(Literal(static_cast<int64_t>(tag.id)));
  }

  void CheckNames(const std::vector<Generator>& gens) {
    for (const auto& g : gens) {
      if (g.var == kLetVar) {
        Fail(ErrorCode::kNameClashZ,
             std::string("generator variable '") + kLetVar + "' is reserved");
      }
    }
  }

  Expr Expand(const Generator& g) {
    std::vector<std::string> labels;
    std::vector<Expr> fields;
    for (const auto& col : schema_.table(g.source).columns) {
      labels.push_back(col.name);
      fields.push_back(Expr::Project(g.var, col.name));
    }
    return Expr::Record(std::move(labels), std::move(fields));
  }

  Expr Rewrite(const Expr& e, const YMap& y) {
    switch (e.kind()) {
      case Expr::Kind::kProject: {
        auto it = y.find(e.var());
        if (it == y.end()) return e;
        std::vector<std::string> path{TupleLabel(1), TupleLabel(it->second)};
        for (const auto& l : e.path()) path.push_back(l);
        return Expr::Project(kLetVar, std::move(path));
      }
      case Expr::Kind::kPrim: {
        std::vector<Expr> args;
        for (const auto& a : e.args()) args.push_back(Rewrite(a, y));
        return Expr::Prim(e.op(), std::move(args));
      }
      case Expr::Kind::kRecord: {
        std::vector<Expr> args;
        for (const auto& a : e.args()) args.push_back(Rewrite(a, y));
        return Expr::Record(e.labels(), std::move(args));
      }
      case Expr::Kind::kIsEmpty: {
        LiQuery q;
        for (const auto& c : e.sh_query().comprehensions) {
          if (c.levels.size() != 1) {
            Fail(ErrorCode::kType,
                 "emptiness test over a nested shredded query");
          }
          CheckNames(c.levels[0].generators);
          LiComprehension lc;
          lc.main = {c.levels[0].generators, Rewrite(c.levels[0].guard, y),
                     Expr::Record({}, {})};
          q.comprehensions.push_back(std::move(lc));
        }
        return Expr::IsEmpty(std::move(q));
      }
      case Expr::Kind::kIndex:
        if (e.index_ref().dir != IndexRef::Dir::kInner) {
          Fail(ErrorCode::kType,
               "outer index inside a payload: " + PrintExpr(e));
        }
        return Expr::Tuple({TagLiteral(e.index_ref().tag), Expr::RowIndex()});
      case Expr::Kind::kConst:
        return e;
      default:
        Fail(ErrorCode::kType,
             "unexpected term in a shredded query: " + PrintExpr(e));
    }
  }

  const Schema& schema_;
};

}  // namespace

LiQuery LetInsert(const ShQuery& m, const Schema& schema) {
  return LetInserter(schema).Top(m);
}

}  // namespace shredq
