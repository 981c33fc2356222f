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

// Runs the acceptance criteria and prints one line per criterion. Exits
// non-zero when any criterion fails.

#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "shredq/ast/error.h"
#include "shredq/ast/package.h"
#include "shredq/ast/path.h"
#include "shredq/ast/printer.h"
#include "shredq/cli/datagen.h"
#include "shredq/cli/equivalence.h"
#include "shredq/cli/pipeline.h"
#include "shredq/evaluator/evaluator.h"
#include "shredq/frontend/json_io.h"
#include "shredq/normalizer/normalizer.h"
#include "shredq/shredder/shredder.h"
#include "shredq/shredder/typing.h"
#include "support/corpus.h"
#include "support/properties.h"

namespace shredq {
namespace {

enum class Status { kPass, kFail, kSkip };

struct Outcome {
  Status status = Status::kPass;
  std::string detail;
};

// Collects failed checks of one criterion.
class Checks {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok) failed_.push_back(what);
  }

  Outcome Finish(const std::string& summary) const {
    if (failed_.empty()) return {Status::kPass, summary};
    std::string detail = failed_.front();
    if (failed_.size() > 1) {
      detail += " (+" + std::to_string(failed_.size() - 1) + " more)";
    }
    return {Status::kFail, detail};
  }

 private:
  std::vector<std::string> failed_;
};

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << s << " s";
  return out.str();
}

const char* const kRunningPaths[] = {"ε", "↓.people.ε", "↓.people.↓.tasks.ε"};

Outcome RunningExample() {
  Checks c;
  Clock::time_point start = Clock::now();
  CompiledQuery q = testing::CompileCorpus("running");
  CompiledQuery comp = testing::CompileCorpus("running_comp");
  c.Expect(AlphaEquivalent(q.normal, comp.normal, true),
           "normal form differs from the composed query");
  Database db = testing::SampleDatabase();
  Value expected = testing::RunningResultValue();
  c.Expect(MultisetEqual(EvalNormalForm(comp.normal, db), expected),
           "normal-form value differs from the expected result");
  c.Expect(MultisetEqual(EvalTerm(q.term, db), expected),
           "source value differs from the expected result");
  double elapsed = SecondsSince(start);
  c.Expect(elapsed < 1.0, "took " + Seconds(elapsed));
  return c.Finish(Seconds(elapsed));
}

Outcome ShreddingGoldens() {
  Checks c;
  Type result = testing::RunningResultType();
  std::string types;
  for (const char* p : kRunningPaths) {
    types += ShredTypeOuter(result, ParsePath(p)).ToString() + "\n";
  }
  testing::GoldenCheck g =
      testing::CheckGolden("shred/running.types.txt", types);
  c.Expect(g.ok, g.message);

  CompiledQuery comp = testing::CompileCorpus("running_comp");
  Database db = testing::SampleDatabase();
  IndexFn ix = IndexFn::Flat(comp.normal, db);
  ShreddedResult expected[] = {testing::RunningR1(), testing::RunningR2(),
                               testing::RunningR3()};
  for (int i = 0; i < 3; ++i) {
    ShQuery q = ShredQuery(comp.normal, ParsePath(kRunningPaths[i]));
    std::string n = std::to_string(i + 1);
    g = testing::CheckGolden("shred/running." + n + ".txt",
                             PrintSh(testing::CanonicalVariables(q)) + "\n");
    c.Expect(g.ok, g.message);
    c.Expect(ShreddedResultsMultisetEqual(EvalShredded(q, db, ix), expected[i]),
             "flat results of query " + n + " differ");
  }
  return c.Finish("3 types, 3 queries, 3 results");
}

Outcome TheoremSuite() {
  Clock::time_point start = Clock::now();
  std::vector<EquivalenceCase> cases;
  for (const auto& name : testing::TheoremCorpus()) {
    cases.push_back({name, testing::CorpusQuery(name)});
  }
  EquivalenceOptions options;
  options.trials = 50;
  options.first_seed = 1;
  EquivalenceReport r = CheckEquivalence(cases, options);
  double elapsed = SecondsSince(start);
  Checks c;
  if (!r.ok()) {
    const EquivalenceFailureInfo& f =
        r.minimized ? *r.minimized : r.failures[0];
    c.Expect(false, std::to_string(r.failures.size()) + " failures, first " +
                        f.query + "/" + f.check + " seed " +
                        std::to_string(f.seed) + ": " + f.message);
  }
  c.Expect(elapsed < 300.0, "took " + Seconds(elapsed));
  return c.Finish(std::to_string(cases.size()) + " queries, " +
                  std::to_string(r.trials) + " databases, " +
                  std::to_string(r.checks) + " checks, " + Seconds(elapsed));
}

Outcome StructuralLaws() {
  Checks c;
  constexpr int kCases = 1000;
  const std::pair<const char*,
                  std::function<testing::PropertyResult(int, uint64_t)>>
      laws[] = {{"erase-shred", testing::CheckEraseShredTypes},
                {"flatten-round-trip", testing::CheckFlattenRoundTrip},
                {"normal-form-grammar", testing::CheckNormalFormValidity},
                {"well-indexed", testing::CheckWellIndexed},
                {"query-count", testing::CheckQueryCount}};
  for (const auto& [name, law] : laws) {
    testing::PropertyResult r = law(kCases, 1);
    c.Expect(r.ok() && r.cases >= kCases,
             std::string(name) + ": " + r.Summary());
  }
  CompiledQuery comp = testing::CompileCorpus("running_comp");
  c.Expect(NestingDegree(testing::RunningResultType()) == 3,
           "nesting degree of the running result is not 3");
  c.Expect(PackageEntries(comp.shredded).size() == 3,
           "running example does not shred to 3 queries");
  return c.Finish("5 laws x " + std::to_string(kCases) + " cases");
}

Outcome SqlGoldens() {
  Checks c;
  Schema schema = testing::CorpusSchema();
  CompiledQuery comp = testing::CompileCorpus("running_comp");
  std::vector<SqlPlanEntry> a = PlanSql(comp, schema);
  std::vector<SqlPlanEntry> b =
      PlanSql(testing::CompileCorpus("running_comp"), schema);
  c.Expect(a.size() == 3, "expected 3 statements");
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    std::string n = std::to_string(i + 1);
    testing::GoldenCheck g =
        testing::CheckGolden("sql/running." + n + ".sql", a[i].sql + "\n");
    c.Expect(g.ok, g.message);
    c.Expect(a[i].sql == b[i].sql, "statement " + n + " is not byte-stable");
    c.Expect(a[i].sql.find("ROW_NUMBER() OVER (ORDER BY ") != std::string::npos,
             "statement " + n + " lacks ROW_NUMBER");
    if (i > 0) {
      c.Expect(a[i].sql.find("WITH \"q\" AS") != std::string::npos,
               "statement " + n + " lacks WITH");
      c.Expect(a[i].sql.find("\nUNION ALL\n") != std::string::npos,
               "statement " + n + " lacks UNION ALL");
    }
  }
  return c.Finish("3 statements");
}

Outcome Postgres() {
  const char* dsn = std::getenv("SHREDQ_PG_DSN");
  if (dsn == nullptr || *dsn == '\0')
    return {Status::kSkip, "SHREDQ_PG_DSN not set"};
  Checks c;
  Schema schema = OrgSchema();
  int runs = 0;
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    Database db = GenerateOrgData(
        {DepartmentsForTrial(static_cast<int>(seed - 1)), 10, 5, seed});
    for (int k = 1; k <= 6; ++k) {
      std::string name = "q" + std::to_string(k);
      std::string where = name + " seed " + std::to_string(seed);
      PipelineConfig config;
      config.schema = schema;
      config.query_text = testing::CorpusQuery(name);
      config.db = db;
      try {
        Value memory = RunPipeline(config).result;
        config.engine = Engine::kPostgres;
        config.dsn = dsn;
        Value database = RunPipeline(config).result;
        c.Expect(MultisetEqual(memory, database), where + ": results differ");
        ++runs;
      } catch (const Error& e) {
        c.Expect(false, where + ": " + e.what());
      }
    }
  }
  return c.Finish(std::to_string(runs) + " query runs");
}

int Main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"running example end to end", RunningExample},
      {"shredding goldens", ShreddingGoldens},
      {"theorem suite", TheoremSuite},
      {"structural laws", StructuralLaws},
      {"sql emission goldens", SqlGoldens},
      {"postgres integration", Postgres}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {Status::kFail, std::string("exception: ") + e.what()};
    }
    const char* label = o.status == Status::kPass   ? "[PASS]"
                        : o.status == Status::kSkip ? "[SKIP]"
                                                    : "[FAIL]";
    if (o.status == Status::kFail) ++failed;
    std::cout << label << " " << name << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace shredq

int main() { return shredq::Main(); }
