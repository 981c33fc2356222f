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

#include "shredq/backend/sql.h"

#include <cstdint>
#include <string>
#include <vector>

#include "shredq/ast/error.h"
#include "shredq/ast/printer.h"
#include "shredq/backend/flatten.h"

namespace shredq {

namespace {

std::string Join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string QuoteString(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

std::string LiteralSql(const Literal& lit) {
  switch (lit.index()) {
    case 0:
      return std::get<bool>(lit) ? "TRUE" : "FALSE";
    case 1: {
      int64_t i = std::get<int64_t>(lit);
      if (i >= 0) return std::to_string(i);
      if (i == INT64_MIN) return "(-9223372036854775807 - 1)";
      return "(" + std::to_string(i) + ")";
    }
    case 2:
      return QuoteString(std::get<std::string>(lit));
    default:
      return "0";
  }
}

std::string_view OpSql(PrimOp op) {
  switch (op) {
    case PrimOp::kAnd:
      return "AND";
    case PrimOp::kOr:
      return "OR";
    case PrimOp::kNot:
      return "NOT";
    default:
      return PrimOpSymbol(op);
  }
}

class Emitter {
 public:
  Emitter(const Schema& schema, const SqlOptions& options)
      : schema_(schema), options_(options) {}

  std::string Query(const LiQuery& q, const Type& row) {
    if (q.comprehensions.empty()) return Empty(row);
    std::vector<std::string> branches;
    for (const auto& c : q.comprehensions) {
      branches.push_back("(" + Comprehension(c, false) + ")");
    }
    return Join(branches, "\nUNION ALL\n");
  }

 private:
  std::string Empty(const Type& row) {
    std::vector<std::string> cols;
    for (const auto& c : FlattenType(row)) {
      cols.push_back("CAST(NULL AS " + std::string(SqlTypeName(c.type)) +
                     ") AS " + QuoteIdent(SqlColumnName(c.label)));
    }
    return "SELECT " + Join(cols, ", ") + " WHERE 1 = 0";
  }

  std::string Comprehension(const LiComprehension& c, bool select_one) {
    const LiSubquery* let = c.let_query ? &*c.let_query : nullptr;
    if (let == nullptr || options_.inline_with)
      return Select(c.main, let, select_one);
    return "WITH " + QuoteIdent(kLetQuery) + " AS (" +
           Select(*let, nullptr, false) + ") " +
           Select(c.main, let, select_one);
  }

  std::string Select(const LiSubquery& s, const LiSubquery* let,
                     bool select_one) {
    std::string out = "SELECT ";
    if (select_one) {
      out += "1";
    } else {
      std::vector<std::string> cols;
      for (size_t i = 0; i < s.body.labels().size(); ++i) {
        cols.push_back(Scalar(s.body.args()[i], s, let) + " AS " +
                       QuoteIdent(SqlColumnName(s.body.labels()[i])));
      }
      out += Join(cols, ", ");
    }
    if (!s.generators.empty()) {
      std::vector<std::string> from;
      for (const auto& g : s.generators) {
        std::string source;
        if (!g.from_let) {
          source = QuoteIdent(schema_.table(g.source).name);
        } else if (let == nullptr) {
          Fail(ErrorCode::kUnboundQueryName,
               "generator '" + g.var + "' reads an unbound let query");
        } else if (options_.inline_with) {
          source = "(" + Select(*let, nullptr, false) + ")";
        } else {
          source = QuoteIdent(kLetQuery);
        }
        from.push_back(source + " AS " + QuoteIdent(g.var));
      }
      out += " FROM " + Join(from, ", ");
    }
    if (!s.guard.is_true()) out += " WHERE " + Scalar(s.guard, s, let);
    return out;
  }

  std::string Scalar(const Expr& e, const LiSubquery& s,
                     const LiSubquery* let) {
    switch (e.kind()) {
      case Expr::Kind::kConst:
        return LiteralSql(e.literal());
      case Expr::Kind::kProject:
        return ColumnRef(e.var(), e.path().front(), s);
      case Expr::Kind::kRowIndex:
        return "ROW_NUMBER() OVER (" + OrderBy(s, let) + ")";
      case Expr::Kind::kPrim: {
        if (e.op() == PrimOp::kNot)
          return "(NOT " + Scalar(e.args()[0], s, let) + ")";
        return "(" + Scalar(e.args()[0], s, let) + " " +
               std::string(OpSql(e.op())) + " " + Scalar(e.args()[1], s, let) +
               ")";
      }
      case Expr::Kind::kIsEmpty: {
        const LiQuery& q = e.li_query();
        if (q.comprehensions.empty()) return "TRUE";
        std::vector<std::string> branches;
        for (const auto& c : q.comprehensions) {
          branches.push_back(Comprehension(c, true));
        }
        return "(NOT EXISTS (" + Join(branches, " UNION ALL ") + "))";
      }
      default:
        Fail(ErrorCode::kUnflattenedInput, "cannot translate " + PrintExpr(e));
    }
  }

  std::string ColumnRef(const std::string& var, const std::string& label,
                        const LiSubquery& s) {
    for (const auto& g : s.generators) {
      if (g.var != var) continue;
      if (g.from_let)
        return QuoteIdent(var) + "." + QuoteIdent(SqlColumnName(label));
      return QuoteIdent(var) + "." + QuoteIdent(label);
    }
    // Correlated reference to an enclosing subquery.
    if (var == kLetVar)
      return QuoteIdent(var) + "." + QuoteIdent(SqlColumnName(label));
    return QuoteIdent(var) + "." + QuoteIdent(label);
  }

  std::string OrderBy(const LiSubquery& s, const LiSubquery* let) {
    std::vector<std::string> keys;
    bool by_key = options_.key_rownum;
    for (const auto& g : s.generators) {
      if (!g.from_let && schema_.table(g.source).key.empty()) by_key = false;
    }
    for (const auto& g : s.generators) {
      if (g.from_let) {
        if (let == nullptr) {
          Fail(ErrorCode::kUnboundQueryName, "unbound let query");
        }
        if (by_key) {
          std::string index = SqlColumnName(FlatLabel({TupleLabel(2)}));
          keys.push_back(QuoteIdent(g.var) + "." + QuoteIdent(index));
          continue;
        }
        for (const auto& l : let->body.labels()) {
          keys.push_back(QuoteIdent(g.var) + "." +
                         QuoteIdent(SqlColumnName(l)));
        }
        continue;
      }
      const TableSchema& t = schema_.table(g.source);
      if (by_key) {
        for (const auto& k : t.key) {
          keys.push_back(QuoteIdent(g.var) + "." + QuoteIdent(k));
        }
      } else {
        for (const auto& col : t.columns) {
          keys.push_back(QuoteIdent(g.var) + "." + QuoteIdent(col.name));
        }
      }
    }
    if (keys.empty()) return "";
    return "ORDER BY " + Join(keys, ", ");
  }

  const Schema& schema_;
  const SqlOptions& options_;
};

}  // namespace

std::string SqlColumnName(const std::string& label) {
  return std::string(kSqlColumnPrefix) + label;
}

std::string_view SqlTypeName(BaseType t) {
  switch (t) {
    case BaseType::kInt:
      return "BIGINT";
    case BaseType::kBool:
      return "BOOLEAN";
    case BaseType::kString:
      return "TEXT";
    case BaseType::kUnit:
      return "INTEGER";
  }
  return "TEXT";
}

std::string QuoteIdent(std::string_view name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string EmitSql(const LiQuery& q, const Schema& schema, const Type& row,
                    const SqlOptions& options) {
  if (!IsFlattened(q)) {
    Fail(ErrorCode::kUnflattenedInput,
         "query is not flattened:\n" + PrintLi(q));
  }
  return Emitter(schema, options).Query(q, row);
}

}  // namespace shredq
