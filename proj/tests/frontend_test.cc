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

#include <string>

#include "shredq/ast/error.h"
#include "shredq/ast/printer.h"
#include "shredq/cli/datagen.h"
#include "shredq/frontend/json_io.h"
#include "shredq/frontend/parser.h"
#include "shredq/frontend/typecheck.h"
#include "support/corpus.h"
#include "support/random_queries.h"

namespace shredq {
namespace {

using testing::CorpusQuery;
using testing::CorpusSchema;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kConfig;
}

std::string Helpers() {
  std::string text = CorpusQuery("running");
  return text.substr(0, text.find("Q(qorg)"));
}

TEST(ParserTest, SimpleComprehension) {
  Term t = ParseTerm("for (x <- departments) return {name = x.name}");
  ASSERT_EQ(t.kind(), TermKind::kFor);
  EXPECT_EQ(t.name(), "x");
  EXPECT_EQ(t.source().kind(), TermKind::kVar);
  EXPECT_EQ(t.source().name(), "departments");
  ASSERT_EQ(t.body().kind(), TermKind::kSingleton);
  const Term& rec = t.body().child(0);
  ASSERT_EQ(rec.kind(), TermKind::kRecord);
  EXPECT_EQ(rec.labels(), std::vector<std::string>{"name"});
  EXPECT_EQ(rec.child(0).kind(), TermKind::kProject);
  EXPECT_EQ(rec.child(0).label(), "name");
}

TEST(ParserTest, WhereIsSugarForIf) {
  Term t = ParseTerm("for (x <- t) where (x.a = 1) return x");
  ASSERT_EQ(t.body().kind(), TermKind::kIf);
  EXPECT_EQ(t.body().else_branch().kind(), TermKind::kEmpty);
}

TEST(ParserTest, MultipleGeneratorsNest) {
  Term t = ParseTerm("for (x <- s, y <- t) return (x, y)");
  ASSERT_EQ(t.kind(), TermKind::kFor);
  EXPECT_EQ(t.body().kind(), TermKind::kFor);
  EXPECT_EQ(t.body().name(), "y");
}

TEST(ParserTest, MalformedGeneratorIsASyntaxError) {
  try {
    ParseTerm("for (x <- )");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntax);
    EXPECT_EQ(e.line(), 1);
    EXPECT_GT(e.column(), 0);
  }
}

TEST(ParserTest, ParsesEveryCorpusQuery) {
  for (const char* name : {"running", "running_comp", "q1", "q2", "q3", "q4",
                           "q5", "q6", "qf1", "qf2", "qf3", "qf4"}) {
    EXPECT_NO_THROW(ParseQuery(CorpusQuery(name))) << name;
  }
}

TEST(ParserTest, PrintParseRoundTripOnRandomTerms) {
  testing::QueryGenerator gen(21, OrgSchema());
  for (int i = 0; i < 500; ++i) {
    Term t = gen.Next(nullptr);
    std::string text = PrintTerm(t);
    EXPECT_EQ(ParseTerm(text), t) << text;
  }
}

TEST(ParserTest, PrintParseRoundTripOnCorpus) {
  for (const char* name : {"running_comp", "q4"}) {
    CheckedQuery q = CompileSource(CorpusQuery(name), CorpusSchema());
    EXPECT_EQ(ParseTerm(PrintTerm(q.term)), q.term) << name;
  }
}

TEST(SchemaTest, OrganisationSchema) {
  Schema s = CorpusSchema();
  ASSERT_EQ(s.tables().size(), 4u);
  for (const char* t : {"departments", "employees", "tasks", "contacts"}) {
    ASSERT_TRUE(s.HasTable(t)) << t;
    EXPECT_EQ(s.table(t).key, std::vector<std::string>{"id"});
  }
  EXPECT_EQ(s.table("employees").RowType().ToString(),
            "{id: Int, dept: String, name: String, salary: Int}");
}

TEST(SchemaTest, EmptyTableMap) {
  EXPECT_TRUE(ParseSchemaJson(R"({"tables": {}})").tables().empty());
}

TEST(SchemaTest, KeyOnMissingColumn) {
  EXPECT_EQ(
      CodeOf([] {
        ParseSchemaJson(
            R"({"tables": {"t": {"columns": [["a", "Int"]], "key": ["b"]}}})");
      }),
      ErrorCode::kSchema);
}

TEST(SchemaTest, RoundTripsThroughJson) {
  Schema s = CorpusSchema();
  EXPECT_EQ(SchemaToJson(ParseSchemaJson(SchemaToJson(s))), SchemaToJson(s));
}

TEST(DataTest, SampleData) {
  Database db = testing::SampleDatabase();
  EXPECT_EQ(db.rows("departments").size(), 4u);
  EXPECT_EQ(db.rows("employees").size(), 7u);
  EXPECT_EQ(db.rows("contacts").size(), 7u);
  Schema s = CorpusSchema();
  Database again = ParseDatabaseJson(DatabaseToJson(s, db), s);
  EXPECT_EQ(DatabaseToJson(s, again), DatabaseToJson(s, db));
}

TEST(DataTest, MissingTableAndBadRows) {
  Schema s = CorpusSchema();
  EXPECT_EQ(CodeOf([&] { ParseDatabaseJson(R"({"tasks": []})", s); }),
            ErrorCode::kData);
  EXPECT_EQ(CodeOf([&] {
              ParseDatabaseJson(
                  R"({"departments": [{"id": "x", "name": "n"}],
                      "employees": [], "tasks": [], "contacts": []})",
                  s);
            }),
            ErrorCode::kData);
}

TEST(DataTest, DuplicateKeyIsRejected) {
  Schema s = CorpusSchema();
  EXPECT_EQ(
      CodeOf([&] {
        ParseDatabaseJson(
            R"({"departments": [{"id": 1, "name": "a"}, {"id": 1, "name": "b"}],
          "employees": [], "tasks": [], "contacts": []})",
            s);
      }),
      ErrorCode::kData);
}

TEST(JsonTest, BagsPrintSorted) {
  Value v = Value::Bag({Value::Int(3), Value::Int(1), Value::Int(2)});
  EXPECT_EQ(ValueToJson(v, true, -1), "[1,2,3]");
  EXPECT_EQ(ValueToJson(v, false, -1), "[3,1,2]");
}

TEST(TypecheckTest, EmployeesOfDepartment) {
  CheckedQuery q = CompileSource(
      Helpers() + "for (d <- departments) employeesOfDept(d)", CorpusSchema());
  EXPECT_EQ(q.type.ToString(),
            "Bag {name: String, salary: Int, tasks: Bag String}");
}

TEST(TypecheckTest, RunningExampleHasResultType) {
  CheckedQuery q = CompileSource(CorpusQuery("running"), CorpusSchema());
  EXPECT_EQ(q.type, testing::RunningResultType());
}

TEST(TypecheckTest, ConditionMustBeBoolean) {
  EXPECT_EQ(
      CodeOf([] { CompileSource("if 3 then [] else []", CorpusSchema()); }),
      ErrorCode::kType);
}

TEST(TypecheckTest, Errors) {
  Schema s = CorpusSchema();
  EXPECT_EQ(CodeOf([&] { CompileSource("for (x <- nowhere) return x", s); }),
            ErrorCode::kUnboundVariable);
  EXPECT_EQ(CodeOf([&] {
              CompileSource("for (x <- departments) return x.salary", s);
            }),
            ErrorCode::kType);
  EXPECT_EQ(CodeOf([&] { CompileSource("return (\\x -> x)", s); }),
            ErrorCode::kNotFlatNested);
  EXPECT_EQ(CodeOf([&] { CompileSource("1 + 2", s); }),
            ErrorCode::kNotFlatNested);
}

TEST(TypecheckTest, BindersAreRenamedApart) {
  CheckedQuery q =
      CompileSource("for (x <- departments) for (x <- employees) return x.name",
                    CorpusSchema());
  EXPECT_NE(q.term.name(), q.term.body().name());
}

}  // namespace
}  // namespace shredq
