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

#ifndef SHREDQ_CLI_PIPELINE_H_
#define SHREDQ_CLI_PIPELINE_H_

#include <optional>
#include <string>
#include <vector>

#include "shredq/ast/package.h"
#include "shredq/ast/query.h"
#include "shredq/ast/result.h"
#include "shredq/ast/schema.h"
#include "shredq/ast/term.h"
#include "shredq/ast/types.h"
#include "shredq/ast/value.h"
#include "shredq/backend/flatten.h"
#include "shredq/backend/sql.h"
#include "shredq/cli/db_driver.h"
#include "shredq/evaluator/evaluator.h"
#include "shredq/normalizer/normalizer.h"
#include "shredq/stitcher/stitcher.h"

namespace shredq {

enum class Engine { kMemory, kPostgres };

// Parsing through shredding.
struct CompiledQuery {
  Term term;                     // elaborated source term
  Type type;                     // result type, a bag
  NfQuery normal;                // normal form with static tags
  Package<ShQuery> shredded;     // one shredded query per bag
  Package<Type> shredded_types;  // their types
};

// Throws the error of the failing stage.
CompiledQuery CompileQuery(const std::string& text, const Schema& schema,
                           RewriteTrace* trace = nullptr);

// The SQL translation of one shredded query.
struct SqlPlanEntry {
  Path path;
  Type payload;  // shredded payload type F of Bag((Index, F))
  Type row;      // let-inserted row type ((Int, Int), F')
  LiQuery let_inserted;
  LiQuery flat;
  std::vector<FlatColumn> columns;
  std::string sql;
};

// One entry per path of the result type, in pre-order.
std::vector<SqlPlanEntry> PlanSql(const CompiledQuery& q, const Schema& schema,
                                  const SqlOptions& options = {});

// Describes the package shape, the tag numbering and the columns of every
// emitted query, naming the query files <name>.1.sql, <name>.2.sql, ...
std::string PackageJson(const CompiledQuery& q,
                        const std::vector<SqlPlanEntry>& plan,
                        const std::string& name);

IndexFn MakeIndexFn(IndexScheme scheme, const NfQuery& normal,
                    const Database& db, const Schema& schema);

// Shredded semantics of every query of the package.
Package<ShreddedResult> EvalPackage(const CompiledQuery& q, const Database& db,
                                    const IndexFn& ix);

// Evaluates the flattened let-inserted queries in memory and decodes the
// rows as the database path does.
Package<ShreddedResult> EvalPackageLetInserted(
    const CompiledQuery& q, const std::vector<SqlPlanEntry>& plan,
    const Database& db);

// Runs the emitted SQL and decodes the rows.
Package<ShreddedResult> EvalPackageSql(const CompiledQuery& q,
                                       const std::vector<SqlPlanEntry>& plan,
                                       DbDriver& driver);

struct PipelineConfig {
  std::string query_text;
  Schema schema;
  // Memory engine input. With the postgres engine the tables are replaced
  // by these rows first when set.
  std::optional<Database> db;
  std::string dsn;
  IndexScheme scheme = IndexScheme::kFlat;
  Engine engine = Engine::kMemory;
  SqlOptions sql;
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0;
};

struct PipelineReport {
  Value result;
  int shredded_queries = 0;
  std::vector<StageTiming> timings;
  StitchStats stitch;
  std::vector<std::string> sql;  // postgres engine only
};

// Throws kConfig for inconsistent configurations and the error of the
// failing stage otherwise.
PipelineReport RunPipeline(const PipelineConfig& config);

}  // namespace shredq

#endif  // SHREDQ_CLI_PIPELINE_H_
