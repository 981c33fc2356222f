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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "shredq/cli/commands.h"
#include "shredq/cli/datagen.h"
#include "shredq/cli/equivalence.h"
#include "shredq/cli/pipeline.h"
#include "shredq/frontend/json_io.h"
#include "support/corpus.h"

namespace shredq {
namespace {

using testing::SourcePath;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "shredq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Query(const std::string& name) {
  return SourcePath("corpus/queries/" + name + ".nrc");
}

const std::string kSchema = SourcePath("corpus/org_schema.json");
const std::string kSample = SourcePath("corpus/sample_data.json");

std::filesystem::path TempDir(const std::string& name) {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / ("shredq_cli_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(CliTest, RunPrintsNestedResult) {
  CliResult r = Cli({"run", "--query", Query("running"), "--schema", kSchema,
                     "--data", kSample, "--trace"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, ValueToJson(testing::RunningResultValue()) + "\n");
  EXPECT_NE(r.err.find("shredded queries: 3"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("stitch: 15 rows grouped"), std::string::npos);
}

TEST(CliTest, RunEverySchemeAgrees) {
  for (const char* scheme : {"canonical", "natural", "flat"}) {
    CliResult r = Cli({"run", "--query", Query("running"), "--schema", kSchema,
                       "--data", kSample, "--scheme", scheme});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out, ValueToJson(testing::RunningResultValue()) + "\n");
  }
}

TEST(CliTest, FlatQueryNeedsOneShreddedQuery) {
  CliResult r = Cli({"run", "--query", Query("q2"), "--schema", kSchema,
                     "--data", kSample, "--trace"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("shredded queries: 1"), std::string::npos);
  EXPECT_EQ(r.out,
            "[\n  {\n    \"dept\": \"Quality\"\n  },\n"
            "  {\n    \"dept\": \"Research\"\n  }\n]\n");
}

TEST(CliTest, PostgresEngineWithoutDsn) {
  CliResult r = Cli({"run", "--query", Query("q1"), "--schema", kSchema,
                     "--engine", "postgres"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("[ConfigError]"), std::string::npos) << r.err;
}

TEST(CliTest, MemoryEngineWithoutData) {
  CliResult r = Cli({"run", "--query", Query("q1"), "--schema", kSchema});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(CliTest, UnknownSchemeAndMissingSubcommand) {
  EXPECT_EQ(Cli({"run", "--query", Query("q1"), "--schema", kSchema, "--data",
                 kSample, "--scheme", "bogus"})
                .code,
            kExitUsage);
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
}

TEST(CliTest, SyntaxErrorReportsPosition) {
  std::filesystem::path dir = TempDir("syntax");
  std::ofstream(dir / "bad.nrc") << "for (x <- departments)\n  return {a = }";
  CliResult r = Cli({"normalize", "--query", (dir / "bad.nrc").string(),
                     "--schema", kSchema});
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_NE(r.err.find("[SyntaxError] 2:"), std::string::npos) << r.err;
}

TEST(CliTest, TypeErrorIsInvalidInput) {
  std::filesystem::path dir = TempDir("type");
  std::ofstream(dir / "bad.nrc") << "for (x <- departments) return x.nope";
  CliResult r = Cli(
      {"shred", "--query", (dir / "bad.nrc").string(), "--schema", kSchema});
  EXPECT_EQ(r.code, kExitInvalidInput);
}

TEST(CliTest, NormalizeAndShredPrint) {
  CliResult n = Cli({"normalize", "--query", Query("running"), "--schema",
                     kSchema, "--trace"});
  ASSERT_EQ(n.code, kExitOk) << n.err;
  EXPECT_EQ(n.out.find("for (d <- departments) return^a"), 0u) << n.out;
  EXPECT_FALSE(n.err.empty());
  CliResult s =
      Cli({"shred", "--query", Query("running"), "--schema", kSchema});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  EXPECT_NE(s.out.find("-- path ε"), std::string::npos) << s.out;
  EXPECT_NE(s.out.find("-- path ↓.people.↓.tasks.ε : Bag (Index, String)"),
            std::string::npos)
      << s.out;
}

TEST(CliTest, CompileWritesFiles) {
  std::filesystem::path dir = TempDir("compile");
  CliResult r = Cli({"compile", "--query", Query("running"), "--schema",
                     kSchema, "--out", dir.string(), "--name", "r"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const char* f : {"r.1.sql", "r.2.sql", "r.3.sql", "r.package.json"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  }
  EXPECT_FALSE(std::filesystem::exists(dir / "r.4.sql"));
  std::ifstream sql(dir / "r.1.sql");
  std::stringstream text;
  text << sql.rdbuf();
  Schema schema = OrgSchema();
  std::vector<SqlPlanEntry> plan =
      PlanSql(CompileQuery(ReadFile(Query("running")), schema), schema);
  EXPECT_EQ(text.str(), plan[0].sql + "\n");
}

TEST(CliTest, CheckWithoutTrials) {
  CliResult r = Cli({"check", "--query", Query("q1"), "--trials", "0"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
}

TEST(CliTest, CheckCorpusQuery) {
  CliResult r = Cli({"check", "--query", Query("q4"), "--query", Query("q1"),
                     "--trials", "3", "--mean-employees", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
}

TEST(CliTest, CheckRejectsForeignSchema) {
  std::filesystem::path dir = TempDir("schema");
  std::ofstream(dir / "s.json")
      << R"({"tables": {"t": {"columns": [["a", "Int"]]}}})";
  CliResult r = Cli({"check", "--query", Query("q1"), "--schema",
                     (dir / "s.json").string(), "--trials", "1"});
  EXPECT_EQ(r.code, kExitUsage) << r.err;
}

TEST(CliTest, GenDataIsDeterministic) {
  CliResult a = Cli({"gen-data", "--departments", "3", "--seed", "9"});
  CliResult b = Cli({"gen-data", "--departments", "3", "--seed", "9"});
  CliResult c = Cli({"gen-data", "--departments", "3", "--seed", "10"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  Database db = ParseDatabaseJson(a.out, OrgSchema());
  EXPECT_EQ(db.rows("departments").size(), 3u);
}

TEST(CliTest, BinaryRuns) {
  std::string cmd = std::string(SHREDQ_CLI_PATH) + " run --query " +
                    Query("q1") + " --schema " + kSchema + " --data " + kSample +
                    " > /dev/null";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
}

TEST(DatagenTest, SameSeedSameData) {
  Database a = GenerateOrgData({4, 10, 5, 3});
  Database b = GenerateOrgData({4, 10, 5, 3});
  Schema schema = OrgSchema();
  EXPECT_EQ(DatabaseToJson(schema, a), DatabaseToJson(schema, b));
  EXPECT_EQ(a.rows("departments").size(), 4u);
}

TEST(DatagenTest, MeanEmployeesPerDepartment) {
  Database db = GenerateOrgData({400, 10, 5, 11});
  double mean = static_cast<double>(db.rows("employees").size()) / 400.0;
  EXPECT_GT(mean, 8.0);
  EXPECT_LT(mean, 12.0);
}

TEST(DatagenTest, KeysAreUnique) {
  Database db = GenerateOrgData({50, 10, 5, 5});
  Schema schema = OrgSchema();
  for (const auto& t : schema.tables()) {
    if (!t.key.empty()) {
      EXPECT_NO_THROW(db.CheckKey(schema, t.name));
    }
  }
}

TEST(EquivalenceTest, CorpusPasses) {
  EquivalenceOptions options;
  options.trials = 2;
  options.mean_employees = 4;
  std::vector<EquivalenceCase> cases;
  for (const auto& name : testing::TheoremCorpus()) {
    cases.push_back({name, ReadFile(Query(name))});
  }
  EquivalenceReport r = CheckEquivalence(cases, options);
  EXPECT_TRUE(r.ok()) << EquivalenceReportToString(r);
  EXPECT_GT(r.checks, 0);
  EXPECT_EQ(r.checks, r.passed);
}

TEST(EquivalenceTest, NonInjectiveIndexesAreCaught) {
  EquivalenceOptions options;
  options.trials = 3;
  options.mean_employees = 4;
  options.schemes = {IndexScheme::kFlat};
  options.check_backend = false;
  options.index_fn = [](IndexScheme, const NfQuery&, const Database&,
                        const Schema&) {
    return IndexFn::FromFunction(
        IndexScheme::kFlat,
        [](const Index& a) { return Index::Flat(a.tag, 1); },
        Index::Flat(StaticTag::Top(), 1));
  };
  EquivalenceReport r =
      CheckEquivalence({{"running", ReadFile(Query("running"))}}, options);
  EXPECT_FALSE(r.ok());
  ASSERT_TRUE(r.minimized.has_value());
  EXPECT_LE(r.minimized->departments, r.failures.front().departments);
}

TEST(EquivalenceTest, CompileErrorReportedOnce) {
  EquivalenceOptions options;
  options.trials = 3;
  EquivalenceReport r =
      CheckEquivalence({{"bad", "for (x <- nowhere) return x"}}, options);
  EXPECT_EQ(r.failures.size(), 1u);
}

TEST(PipelineTest, Deterministic) {
  Schema schema = OrgSchema();
  for (const auto& name : testing::TheoremCorpus()) {
    std::string text = ReadFile(Query(name));
    CompiledQuery a = CompileQuery(text, schema);
    CompiledQuery b = CompileQuery(text, schema);
    std::vector<SqlPlanEntry> pa = PlanSql(a, schema);
    std::vector<SqlPlanEntry> pb = PlanSql(b, schema);
    ASSERT_EQ(pa.size(), pb.size());
    for (size_t i = 0; i < pa.size(); ++i) EXPECT_EQ(pa[i].sql, pb[i].sql);
    EXPECT_EQ(PackageJson(a, pa, name), PackageJson(b, pb, name));
  }
}

TEST(PipelineTest, ConfigErrors) {
  PipelineConfig config;
  config.schema = OrgSchema();
  config.query_text = ReadFile(Query("q1"));
  config.engine = Engine::kPostgres;
  try {
    RunPipeline(config);
    FAIL() << "expected kConfig";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfig);
  }
}

}  // namespace
}  // namespace shredq
