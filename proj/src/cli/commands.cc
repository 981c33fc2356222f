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

#include "shredq/cli/commands.h"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "shredq/ast/printer.h"
#include "shredq/cli/datagen.h"
#include "shredq/cli/equivalence.h"
#include "shredq/cli/pipeline.h"
#include "shredq/frontend/json_io.h"

namespace shredq {

namespace {

struct Flags {
  std::vector<std::string> queries;
  std::string schema;
  std::string data;
  std::string dsn;
  std::string scheme = "flat";
  std::string engine = "memory";
  std::string out_dir = ".";
  std::string name;
  std::string out_file;
  uint64_t seed = 1;
  int trials = 50;
  int departments = 4;
  int mean_employees = 10;
  bool inline_with = false;
  bool key_rownum = false;
  bool trace = false;
};

IndexScheme SchemeFlag(const std::string& s) {
  auto scheme = ParseIndexScheme(s);
  if (!scheme) Fail(ErrorCode::kConfig, "unknown index scheme '" + s + "'");
  return *scheme;
}

Schema LoadSchema(const Flags& f) {
  if (f.schema.empty()) Fail(ErrorCode::kConfig, "--schema is required");
  return ParseSchemaJson(ReadFile(f.schema));
}

const std::string& SingleQuery(const Flags& f) {
  if (f.queries.size() != 1)
    Fail(ErrorCode::kConfig, "exactly one --query is required");
  return f.queries.front();
}

SqlOptions SqlFlags(const Flags& f) { return {f.inline_with, f.key_rownum}; }

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) Fail(ErrorCode::kConfig, "cannot write " + path.string());
}

void Normalize(const Flags& f, std::ostream& out, std::ostream& err) {
  Schema schema = LoadSchema(f);
  RewriteTrace trace;
  CompiledQuery q = CompileQuery(ReadFile(SingleQuery(f)), schema,
                                 f.trace ? &trace : nullptr);
  for (const auto& step : trace) {
    err << step.rule << " @ "
        << (step.location.empty() ? "root" : step.location) << "\n";
  }
  out << PrintNf(q.normal) << "\n";
}

void Shred(const Flags& f, std::ostream& out) {
  Schema schema = LoadSchema(f);
  CompiledQuery q = CompileQuery(ReadFile(SingleQuery(f)), schema);
  std::vector<std::pair<Path, const ShQuery*>> queries;
  Path prefix;
  package_internal::Collect(q.shredded, prefix, queries);
  for (const auto& [path, m] : queries) {
    out << "-- path " << PathToString(path) << " : "
        << q.shredded_types.At(path).ToString() << "\n"
        << PrintSh(*m) << "\n";
  }
}

void Compile(const Flags& f, std::ostream& out) {
  Schema schema = LoadSchema(f);
  const std::string& file = SingleQuery(f);
  CompiledQuery q = CompileQuery(ReadFile(file), schema);
  std::vector<SqlPlanEntry> plan = PlanSql(q, schema, SqlFlags(f));
  std::string name =
      f.name.empty() ? std::filesystem::path(file).stem().string() : f.name;
  std::filesystem::path dir(f.out_dir);
  std::filesystem::create_directories(dir);
  for (size_t i = 0; i < plan.size(); ++i) {
    std::filesystem::path path =
        dir / (name + "." + std::to_string(i + 1) + ".sql");
    WriteFile(path, plan[i].sql + "\n");
    out << path.string() << "\n";
  }
  std::filesystem::path pkg = dir / (name + ".package.json");
  WriteFile(pkg, PackageJson(q, plan, name));
  out << pkg.string() << "\n";
}

void Run(const Flags& f, std::ostream& out, std::ostream& err) {
  PipelineConfig config;
  config.schema = LoadSchema(f);
  config.query_text = ReadFile(SingleQuery(f));
  config.scheme = SchemeFlag(f.scheme);
  config.sql = SqlFlags(f);
  config.dsn = f.dsn;
  if (f.engine == "memory") {
    config.engine = Engine::kMemory;
    if (f.data.empty())
      Fail(ErrorCode::kConfig, "the memory engine needs --data");
  } else if (f.engine == "postgres") {
    config.engine = Engine::kPostgres;
  } else {
    Fail(ErrorCode::kConfig, "unknown engine '" + f.engine + "'");
  }
  if (!f.data.empty())
    config.db = ParseDatabaseJson(ReadFile(f.data), config.schema);
  PipelineReport report = RunPipeline(config);
  out << ValueToJson(report.result) << "\n";
  if (f.trace) {
    err << "shredded queries: " << report.shredded_queries << "\n";
    for (const auto& t : report.timings) {
      err << "stage " << t.stage << ": " << t.milliseconds << " ms\n";
    }
    err << "stitch: " << report.stitch.rows_grouped << " rows grouped, "
        << report.stitch.rows_emitted << " emitted, " << report.stitch.lookups
        << " lookups\n";
  }
}

int Check(const Flags& f, std::ostream& out) {
  if (f.queries.empty())
    Fail(ErrorCode::kConfig, "at least one --query is required");
  if (!f.schema.empty()) {
    Schema given = LoadSchema(f);
    if (SchemaToJson(given) != SchemaToJson(OrgSchema())) {
      Fail(ErrorCode::kConfig,
           "check generates data for the organisation schema only");
    }
  }
  std::vector<EquivalenceCase> cases;
  for (const auto& file : f.queries) {
    cases.push_back(
        {std::filesystem::path(file).stem().string(), ReadFile(file)});
  }
  EquivalenceOptions options;
  options.trials = f.trials;
  options.first_seed = f.seed;
  options.mean_employees = f.mean_employees;
  options.sql = SqlFlags(f);
  EquivalenceReport report = CheckEquivalence(cases, options);
  out << EquivalenceReportToString(report);
  return report.ok() ? kExitOk : kExitEquivalenceFailure;
}

void GenData(const Flags& f, std::ostream& out) {
  Database db = GenerateOrgData({f.departments, f.mean_employees, 5, f.seed});
  std::string json = DatabaseToJson(OrgSchema(), db);
  if (f.out_file.empty()) {
    out << json;
  } else {
    WriteFile(f.out_file, json);
  }
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfig:
      return kExitUsage;
    case ErrorCode::kEquivalenceFailure:
      return kExitEquivalenceFailure;
    case ErrorCode::kDatabase:
      return kExitDatabase;
    default:
      return kExitInvalidInput;
  }
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Compiles nested queries to flat SQL via shredding"};
  app.require_subcommand(1);
  Flags f;

  auto add_query = [&](CLI::App* cmd, bool many) {
    if (many) {
      cmd->add_option("--query", f.queries, "query file (.nrc); repeatable")
          ->required();
    } else {
      cmd->add_option("--query", f.queries, "query file (.nrc)")
          ->required()
          ->expected(1);
    }
  };
  auto add_sql = [&](CLI::App* cmd) {
    cmd->add_flag("--inline-with", f.inline_with,
                  "emit let-bound subqueries as derived tables");
    cmd->add_flag("--key-rownum", f.key_rownum,
                  "number rows by key columns when every table has a key");
  };

  CLI::App* normalize =
      app.add_subcommand("normalize", "print the normal form");
  add_query(normalize, false);
  normalize->add_option("--schema", f.schema, "schema file (.json)")
      ->required();
  normalize->add_flag("--trace", f.trace, "print rewrite steps to stderr");

  CLI::App* shred = app.add_subcommand("shred", "print the shredded queries");
  add_query(shred, false);
  shred->add_option("--schema", f.schema, "schema file (.json)")->required();

  CLI::App* compile =
      app.add_subcommand("compile", "write SQL and package.json");
  add_query(compile, false);
  compile->add_option("--schema", f.schema, "schema file (.json)")->required();
  compile->add_option("--out", f.out_dir, "output directory");
  compile->add_option("--name", f.name, "base name of the output files");
  add_sql(compile);

  CLI::App* run = app.add_subcommand("run", "run the pipeline and print JSON");
  add_query(run, false);
  run->add_option("--schema", f.schema, "schema file (.json)")->required();
  run->add_option("--data", f.data, "database file (.json)");
  run->add_option("--dsn", f.dsn, "PostgreSQL connection string");
  run->add_option("--scheme", f.scheme, "canonical | natural | flat");
  run->add_option("--engine", f.engine, "memory | postgres");
  run->add_flag("--trace", f.trace, "print timings to stderr");
  add_sql(run);

  CLI::App* check =
      app.add_subcommand("check", "check equivalence on random data");
  add_query(check, true);
  check->add_option("--schema", f.schema, "schema file (.json)");
  check->add_option("--trials", f.trials, "number of generated databases")
      ->check(CLI::NonNegativeNumber);
  check->add_option("--seed", f.seed, "seed of the first trial");
  check
      ->add_option("--mean-employees", f.mean_employees,
                   "employees per department")
      ->check(CLI::PositiveNumber);
  add_sql(check);

  CLI::App* gen =
      app.add_subcommand("gen-data", "print a random organisation database");
  gen->add_option("--departments", f.departments, "number of departments")
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", f.seed, "random seed");
  gen->add_option("--mean-employees", f.mean_employees,
                  "employees per department")
      ->check(CLI::PositiveNumber);
  gen->add_option("--out", f.out_file, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*normalize) Normalize(f, out, err);
    if (*shred) Shred(f, out);
    if (*compile) Compile(f, out);
    if (*run) Run(f, out, err);
    if (*check) return Check(f, out);
    if (*gen) GenData(f, out);
  } catch (const SyntaxError& e) {
    err << "error [" << ErrorCodeName(e.code()) << "] " << e.line() << ":"
        << e.column() << ": " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const Error& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace shredq
