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

#include "shredq/cli/pipeline.h"

#include <chrono>
#include <nlohmann/json.hpp>
#include <set>
#include <utility>

#include "shredq/ast/error.h"
#include "shredq/ast/path.h"
#include "shredq/backend/let_insert.h"
#include "shredq/frontend/typecheck.h"
#include "shredq/shredder/shredder.h"
#include "shredq/shredder/typing.h"

namespace shredq {

namespace {

using Clock = std::chrono::steady_clock;

// Runs f, records its duration and prefixes its errors with the stage name.
template <typename F>
auto Stage(const char* name, std::vector<StageTiming>* timings, F&& f) {
  auto start = Clock::now();
  auto record = [&] {
    if (timings == nullptr) return;
    std::chrono::duration<double, std::milli> ms = Clock::now() - start;
    timings->push_back({name, ms.count()});
  };
  try {
    auto out = f();
    record();
    return out;
  } catch (const Error& e) {
    throw Error(e.code(), std::string(name) + ": " + e.what());
  }
}

void CollectTags(const NfQuery& q, std::set<int>& out);

void CollectTags(const Expr& e, std::set<int>& out) {
  switch (e.kind()) {
    case Expr::Kind::kQuery:
    case Expr::Kind::kIsEmpty:
      if (e.has_nf_query()) CollectTags(e.nf_query(), out);
      return;
    case Expr::Kind::kPrim:
    case Expr::Kind::kRecord:
      for (const auto& a : e.args()) CollectTags(a, out);
      return;
    default:
      return;
  }
}

void CollectTags(const NfQuery& q, std::set<int>& out) {
  for (const auto& c : q.comprehensions) {
    if (c.tag) out.insert(c.tag->id);
    CollectTags(c.guard, out);
    CollectTags(c.body, out);
  }
}

template <typename A>
std::vector<std::pair<Path, const A*>> Entries(const Package<A>& p) {
  std::vector<std::pair<Path, const A*>> out;
  Path prefix;
  package_internal::Collect(p, prefix, out);
  return out;
}

// Rebuilds the shape of q.shredded with the results listed in pre-order.
Package<ShreddedResult> FromList(const CompiledQuery& q,
                                 std::vector<ShreddedResult> results) {
  size_t next = 0;
  return PackageMap<ShreddedResult, ShQuery>(q.shredded, [&](const ShQuery&) {
    return std::move(results.at(next++));
  });
}

Type PayloadType(const Type& outer) {
  const Type* f = outer.element().field(TupleLabel(2));
  if (f == nullptr)
    Fail(ErrorCode::kType, "malformed shredded type " + outer.ToString());
  return *f;
}

}  // namespace

CompiledQuery CompileQuery(const std::string& text, const Schema& schema,
                           RewriteTrace* trace) {
  CheckedQuery checked = CompileSource(text, schema);
  NfQuery normal =
      Annotate(Normalize(checked.term, checked.type, schema, trace));
  ValidateNormalForm(normal, schema, true);
  return {checked.term, checked.type, normal,
          ShredPackage(normal, checked.type), ShredTypePackage(checked.type)};
}

std::vector<SqlPlanEntry> PlanSql(const CompiledQuery& q, const Schema& schema,
                                  const SqlOptions& options) {
  std::vector<SqlPlanEntry> out;
  auto types = Entries(q.shredded_types);
  auto queries = Entries(q.shredded);
  for (size_t i = 0; i < queries.size(); ++i) {
    SqlPlanEntry e;
    e.path = queries[i].first;
    e.payload = PayloadType(*types[i].second);
    e.row = LetInsertedType(types[i].second->element());
    e.let_inserted = LetInsert(*queries[i].second, schema);
    e.flat = FlattenQuery(e.let_inserted, schema, e.row);
    e.columns = FlattenType(e.row);
    e.sql = EmitSql(e.flat, schema, e.row, options);
    out.push_back(std::move(e));
  }
  return out;
}

std::string PackageJson(const CompiledQuery& q,
                        const std::vector<SqlPlanEntry>& plan,
                        const std::string& name) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["name"] = name;
  j["result_type"] = q.type.ToString();
  std::set<int> tags = {StaticTag::kTopId};
  CollectTags(q.normal, tags);
  ordered_json tag_list = ordered_json::array();
  for (int id : tags) {
    tag_list.push_back({{"id", id}, {"alias", StaticTag{id}.Alias()}});
  }
  j["tags"] = tag_list;
  j["root"] = {{"tag", StaticTag::kTopId}, {"position", 1}};
  ordered_json queries = ordered_json::array();
  for (size_t i = 0; i < plan.size(); ++i) {
    ordered_json cols = ordered_json::array();
    for (const auto& c : plan[i].columns) {
      cols.push_back({{"label", c.label},
                      {"sql_name", SqlColumnName(c.label)},
                      {"type", BaseTypeName(c.type)}});
    }
    queries.push_back({{"path", PathToString(plan[i].path)},
                       {"file", name + "." + std::to_string(i + 1) + ".sql"},
                       {"payload_type", plan[i].payload.ToString()},
                       {"row_type", plan[i].row.ToString()},
                       {"columns", cols}});
  }
  j["queries"] = queries;
  return j.dump(2) + "\n";
}

IndexFn MakeIndexFn(IndexScheme scheme, const NfQuery& normal,
                    const Database& db, const Schema& schema) {
  switch (scheme) {
    case IndexScheme::kCanonical:
      return IndexFn::Canonical();
    case IndexScheme::kNatural:
      return IndexFn::Natural(normal, db, schema);
    case IndexScheme::kFlat:
      return IndexFn::Flat(normal, db);
  }
  Fail(ErrorCode::kConfig, "unknown index scheme");
}

Package<ShreddedResult> EvalPackage(const CompiledQuery& q, const Database& db,
                                    const IndexFn& ix) {
  return PackageMap<ShreddedResult, ShQuery>(
      q.shredded, [&](const ShQuery& m) { return EvalShredded(m, db, ix); });
}

Package<ShreddedResult> EvalPackageLetInserted(
    const CompiledQuery& q, const std::vector<SqlPlanEntry>& plan,
    const Database& db) {
  std::vector<ShreddedResult> results;
  for (const auto& e : plan) {
    Value rows = UnflattenRows(EvalLetInserted(e.flat, db), e.row);
    results.push_back(DecodeLetInserted(rows, e.payload));
  }
  return FromList(q, std::move(results));
}

Package<ShreddedResult> EvalPackageSql(const CompiledQuery& q,
                                       const std::vector<SqlPlanEntry>& plan,
                                       DbDriver& driver) {
  std::vector<ShreddedResult> results;
  for (const auto& e : plan) {
    Value flat = ReadFlatRows(driver.Execute(e.sql), e.columns);
    results.push_back(DecodeLetInserted(UnflattenRows(flat, e.row), e.payload));
  }
  return FromList(q, std::move(results));
}

PipelineReport RunPipeline(const PipelineConfig& config) {
  PipelineReport report;
  std::vector<StageTiming>* t = &report.timings;
  if (config.engine == Engine::kPostgres) {
    if (config.dsn.empty())
      Fail(ErrorCode::kConfig, "the postgres engine needs a DSN");
    if (config.scheme != IndexScheme::kFlat) {
      Fail(ErrorCode::kConfig,
           "the postgres engine only supports the flat scheme");
    }
  } else if (!config.db) {
    Fail(ErrorCode::kConfig, "the memory engine needs a database");
  }
  CompiledQuery q = Stage("compile", t, [&] {
    return CompileQuery(config.query_text, config.schema);
  });
  Stage("typecheck-shredded", t, [&] {
    for (const auto& [path, m] : Entries(q.shredded)) {
      TypecheckShredded(*m, config.schema);
    }
    return 0;
  });
  report.shredded_queries = static_cast<int>(Entries(q.shredded).size());
  Index root = Index::Flat(StaticTag::Top(), 1);
  auto evaluate = [&]() -> Package<ShreddedResult> {
    if (config.engine == Engine::kMemory) {
      IndexFn ix = Stage("index", t, [&] {
        return MakeIndexFn(config.scheme, q.normal, *config.db, config.schema);
      });
      root = ix.Root();
      return Stage("evaluate", t,
                   [&] { return EvalPackage(q, *config.db, ix); });
    }
    std::vector<SqlPlanEntry> plan = Stage(
        "emit-sql", t, [&] { return PlanSql(q, config.schema, config.sql); });
    for (const auto& e : plan) report.sql.push_back(e.sql);
    std::unique_ptr<DbDriver> driver =
        Stage("connect", t, [&] { return ConnectPostgres(config.dsn); });
    if (config.db) {
      Stage("load", t, [&] {
        LoadDatabase(*driver, config.schema, *config.db);
        return 0;
      });
    }
    return Stage("execute", t,
                 [&] { return EvalPackageSql(q, plan, *driver); });
  };
  Package<ShreddedResult> results = evaluate();
  report.result = Stage("stitch", t, [&] {
    return EraseAnnotations(Stitch(results, root, &report.stitch));
  });
  return report;
}

}  // namespace shredq
