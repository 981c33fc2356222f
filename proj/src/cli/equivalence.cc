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

#include "shredq/cli/equivalence.h"

#include <sstream>

#include "shredq/ast/error.h"
#include "shredq/cli/datagen.h"
#include "shredq/cli/pipeline.h"
#include "shredq/shredder/typing.h"

namespace shredq {

namespace {

struct Prepared {
  std::string name;
  CompiledQuery query;
  std::vector<SqlPlanEntry> plan;
};

class Checker {
 public:
  Checker(const EquivalenceOptions& options, EquivalenceReport& report)
      : options_(options), report_(report), schema_(OrgSchema()) {}

  std::vector<Prepared> Prepare(const std::vector<EquivalenceCase>& cases) {
    std::vector<Prepared> out;
    for (const auto& c : cases) {
      try {
        CompiledQuery q = CompileQuery(c.query_text, schema_);
        std::vector<SqlPlanEntry> plan;
        if (options_.check_backend) {
          plan = PlanSql(q, schema_, options_.sql);
          CheckTyping(c.name, q, plan);
        }
        out.push_back({c.name, std::move(q), std::move(plan)});
      } catch (const Error& e) {
        Record(false, {0, 0, c.name, "compile", e.what()});
      }
    }
    return out;
  }

  // Runs every check for one database; returns the failures found.
  std::vector<EquivalenceFailureInfo> Trial(const Prepared& p, uint64_t seed,
                                            int departments) {
    std::vector<EquivalenceFailureInfo> failures;
    auto check = [&](const std::string& what, const std::function<void()>& f) {
      std::string message;
      try {
        f();
      } catch (const Error& e) {
        message = e.what();
      }
      bool ok = message.empty();
      if (!ok) failures.push_back({seed, departments, p.name, what, message});
      Count(ok);
    };
    OrgDataOptions data{departments, options_.mean_employees, 5, seed};
    Database db = GenerateOrgData(data);
    Value reference = EvalNormalForm(p.query.normal, db);
    check("source", [&] {
      if (!MultisetEqual(EvalTerm(p.query.term, db), reference)) {
        Fail(ErrorCode::kEquivalenceFailure, "source and normal form differ");
      }
    });
    for (IndexScheme scheme : options_.schemes) {
      check(std::string(IndexSchemeName(scheme)), [&] {
        IndexFn ix =
            options_.index_fn
                ? options_.index_fn(scheme, p.query.normal, db, schema_)
                : MakeIndexFn(scheme, p.query.normal, db, schema_);
        Value stitched = Stitch(EvalPackage(p.query, db, ix), ix.Root());
        if (!MultisetEqual(EraseAnnotations(stitched), reference)) {
          Fail(ErrorCode::kEquivalenceFailure,
               "stitched result differs from the normal-form semantics");
        }
      });
    }
    if (options_.check_backend) {
      check("let-inserted", [&] {
        IndexFn flat = IndexFn::Flat(p.query.normal, db);
        Package<ShreddedResult> expected = EvalPackage(p.query, db, flat);
        Package<ShreddedResult> actual =
            EvalPackageLetInserted(p.query, p.plan, db);
        for (const auto& e : p.plan) {
          if (!ShreddedResultsEqual(expected.At(e.path), actual.At(e.path))) {
            Fail(ErrorCode::kEquivalenceFailure,
                 "let-inserted rows differ at " + PathToString(e.path));
          }
        }
      });
    }
    return failures;
  }

  void Record(bool ok, EquivalenceFailureInfo info) {
    Count(ok);
    if (!ok) report_.failures.push_back(std::move(info));
  }

  void Count(bool ok) {
    ++report_.checks;
    if (ok) ++report_.passed;
  }

 private:
  void CheckTyping(const std::string& name, const CompiledQuery& q,
                   const std::vector<SqlPlanEntry>& plan) {
    for (const auto& e : plan) {
      std::string message;
      try {
        Type expected = q.shredded_types.At(e.path);
        if (!Conforms(TypecheckShredded(q.shredded.At(e.path), schema_),
                      expected)) {
          message =
              "shredded query at " + PathToString(e.path) + " is ill-typed";
        } else if (!Conforms(TypecheckLetInserted(e.let_inserted, schema_),
                             Type::Bag(e.row))) {
          message =
              "let-inserted query at " + PathToString(e.path) + " is ill-typed";
        }
      } catch (const Error& err) {
        message = err.what();
      }
      Record(message.empty(), {0, 0, name, "typing", message});
    }
  }

  const EquivalenceOptions& options_;
  EquivalenceReport& report_;
  Schema schema_;
};

}  // namespace

EquivalenceReport CheckEquivalence(const std::vector<EquivalenceCase>& cases,
                                   const EquivalenceOptions& options) {
  EquivalenceReport report;
  report.trials = options.trials;
  Checker checker(options, report);
  std::vector<Prepared> prepared = checker.Prepare(cases);
  for (int t = 0; t < options.trials; ++t) {
    uint64_t seed = options.first_seed + static_cast<uint64_t>(t);
    int departments = DepartmentsForTrial(t);
    for (const auto& p : prepared) {
      for (auto& f : checker.Trial(p, seed, departments)) {
        report.failures.push_back(std::move(f));
      }
    }
  }
  for (const auto& f : report.failures) {
    if (f.departments == 0) continue;
    EquivalenceReport scratch;
    Checker probe(options, scratch);
    for (const auto& p : prepared) {
      if (p.name != f.query) continue;
      for (int d = 1; d <= f.departments && !report.minimized; ++d) {
        for (auto& g : probe.Trial(p, f.seed, d)) {
          if (g.check == f.check) {
            report.minimized = g;
            break;
          }
        }
      }
    }
    break;
  }
  return report;
}

std::string EquivalenceReportToString(const EquivalenceReport& r) {
  std::ostringstream out;
  out << "trials: " << r.trials << "\nchecks: " << r.checks
      << "\npassed: " << r.passed << "\nfailed: " << r.failures.size() << "\n";
  for (const auto& f : r.failures) {
    out << "FAIL query=" << f.query << " check=" << f.check;
    if (f.departments > 0)
      out << " seed=" << f.seed << " departments=" << f.departments;
    out << ": " << f.message << "\n";
  }
  if (r.minimized) {
    out << "minimized: query=" << r.minimized->query
        << " check=" << r.minimized->check << " seed=" << r.minimized->seed
        << " departments=" << r.minimized->departments << "\n";
  }
  return out.str();
}

}  // namespace shredq
