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

#include "shredq/normalizer/normalizer.h"

#include <gtest/gtest.h>

#include <set>
#include <string>

#include "shredq/ast/error.h"
#include "shredq/ast/printer.h"
#include "shredq/evaluator/evaluator.h"
#include "shredq/frontend/parser.h"
#include "shredq/frontend/typecheck.h"
#include "support/corpus.h"

namespace shredq {
namespace {

using testing::CorpusQuery;
using testing::CorpusSchema;

NfQuery NormalizeSource(const std::string& text) {
  Schema schema = CorpusSchema();
  CheckedQuery q = CompileSource(text, schema);
  return Normalize(q.term, q.type, schema);
}

std::vector<int> Tags(const NfQuery& q) {
  std::vector<int> out;
  std::function<void(const NfQuery&)> walk = [&](const NfQuery& n) {
    for (const auto& c : n.comprehensions) {
      out.push_back(c.tag ? c.tag->id : -1);
      std::function<void(const Expr&)> expr = [&](const Expr& e) {
        if (e.kind() == Expr::Kind::kQuery ||
            (e.kind() == Expr::Kind::kIsEmpty && e.has_nf_query())) {
          walk(e.nf_query());
        }
        for (const auto& a : e.args()) expr(a);
      };
      expr(c.guard);
      expr(c.body);
    }
  };
  walk(q);
  return out;
}

TEST(SymbolicEvalTest, BetaAndProjection) {
  Term t = ParseTerm(R"((\x -> x.name)({name = "Sue", salary = 1}))");
  EXPECT_EQ(SymbolicEval(t), ParseTerm(R"("Sue")"));
}

TEST(SymbolicEvalTest, ForOverSingleton) {
  Term t = ParseTerm("for (x <- return {a = 1, b = y}) return x.b");
  EXPECT_EQ(SymbolicEval(t), ParseTerm("return y"));
}

TEST(SymbolicEvalTest, ApplicationOfConditional) {
  Term t = ParseTerm(R"((if c then (\x -> x + 1) else (\y -> y))(2))");
  EXPECT_EQ(SymbolicEval(t), ParseTerm("if c then 2 + 1 else 2"));
}

TEST(SymbolicEvalTest, TraceNamesRules) {
  RewriteTrace trace;
  SymbolicEval(ParseTerm(R"((\x -> x.name)({name = "Sue"}))"), &trace);
  ASSERT_FALSE(trace.empty());
  std::set<std::string> rules;
  for (const auto& s : trace) rules.insert(s.rule);
  EXPECT_TRUE(rules.count("beta.fun")) << trace.front().rule;
}

TEST(SymbolicEvalTest, FuelExhaustion) {
  Term t = ParseTerm(R"((\x -> (\y -> (\z -> z)(y))(x))(1))");
  try {
    SymbolicEval(t, nullptr, 1);
    FAIL() << "expected fuel exhaustion";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInternalNonTermination);
  }
  EXPECT_EQ(SymbolicEval(t), ParseTerm("1"));
}

TEST(HoistIfsTest, RecordField) {
  EXPECT_EQ(HoistIfs(ParseTerm("{l = if X then 1 else 2}")),
            ParseTerm("if X then {l = 1} else {l = 2}"));
}

TEST(HoistIfsTest, SingletonBody) {
  EXPECT_EQ(HoistIfs(ParseTerm("return (if X then M else N)")),
            ParseTerm("if X then return M else return N"));
}

TEST(HoistIfsTest, PrimitiveArgument) {
  EXPECT_EQ(HoistIfs(ParseTerm("(if X then a else b) + d")),
            ParseTerm("if X then a + d else b + d"));
}

TEST(SplitTest, TableIsEtaExpanded) {
  NfQuery q = NormalizeSource("departments");
  ASSERT_EQ(q.comprehensions.size(), 1u);
  const auto& c = q.comprehensions[0];
  ASSERT_EQ(c.generators.size(), 1u);
  EXPECT_EQ(c.generators[0].source, "departments");
  EXPECT_TRUE(c.guard.is_true());
  ASSERT_EQ(c.body.kind(), Expr::Kind::kRecord);
  EXPECT_EQ(c.body.labels(), (std::vector<std::string>{"id", "name"}));
  EXPECT_EQ(*c.body.field("name"), Expr::Project(c.generators[0].var, "name"));
}

TEST(SplitTest, ConditionalBecomesGuard) {
  NfQuery q = NormalizeSource(
      "for (y <- employees) if y.salary < 1000 then return y.name else []");
  ASSERT_EQ(q.comprehensions.size(), 1u);
  EXPECT_EQ(PrintNf(q),
            "for (y <- employees) where (y.salary < 1000) return y.name");
}

TEST(SplitTest, BothBranchesBecomeGuardedComprehensions) {
  NfQuery q = NormalizeSource(
      "for (y <- employees) if y.salary < 1000 then return y.name else return "
      "y.dept");
  EXPECT_EQ(
      PrintNf(q),
      "for (y <- employees) where (y.salary < 1000) return y.name\n"
      "++ for (y1 <- employees) where (not y1.salary < 1000) return y1.dept");
}

TEST(NormalizeTest, RunningExampleIsQComp) {
  NfQuery q = Annotate(NormalizeSource(CorpusQuery("running")));
  NfQuery comp = Annotate(NormalizeSource(CorpusQuery("running_comp")));
  EXPECT_TRUE(AlphaEquivalent(q, comp, true)) << PrintNf(q) << "\n"
                                              << PrintNf(comp);
  ValidateNormalForm(q, CorpusSchema(), true);
}

TEST(NormalizeTest, NormalFormsAreFixpoints) {
  Schema schema = CorpusSchema();
  for (const char* name : {"running_comp", "q1", "q2", "q4", "qf3"}) {
    CheckedQuery src = CompileSource(CorpusQuery(name), schema);
    NfQuery once = Normalize(src.term, src.type, schema);
    NfQuery twice = Normalize(NormalFormToTerm(once), src.type, schema);
    EXPECT_TRUE(AlphaEquivalent(once, twice, false)) << name;
  }
}

TEST(NormalizeTest, ReadNormalFormAgreesWithNormalize) {
  CheckedQuery src = CompileSource(CorpusQuery("running_comp"), CorpusSchema());
  NfQuery read = ReadNormalForm(src.term);
  NfQuery normal = Normalize(src.term, src.type, CorpusSchema());
  EXPECT_TRUE(AlphaEquivalent(read, normal, false));
}

TEST(NormalizeTest, HigherOrderQueryBecomesFlatWithEmptinessGuards) {
  Schema schema = CorpusSchema();
  CheckedQuery src = CompileSource(CorpusQuery("q2"), schema);
  NfQuery q = Normalize(src.term, src.type, schema);
  ValidateNormalForm(q, schema, false);
  ASSERT_EQ(q.comprehensions.size(), 1u);
  EXPECT_NE(PrintNf(q).find("empty("), std::string::npos);
  Database db = testing::SampleDatabase();
  EXPECT_TRUE(MultisetEqual(EvalTerm(src.term, db), EvalNormalForm(q, db)));
}

TEST(NormalizeTest, CorpusNormalFormsAgreeWithSourceSemantics) {
  Schema schema = CorpusSchema();
  Database db = testing::SampleDatabase();
  for (const auto& name : testing::TheoremCorpus()) {
    CheckedQuery src = CompileSource(CorpusQuery(name), schema);
    NfQuery q = Normalize(src.term, src.type, schema);
    EXPECT_TRUE(MultisetEqual(EvalTerm(src.term, db), EvalNormalForm(q, db)))
        << name;
  }
}

TEST(AnnotateTest, RunningExampleTags) {
  NfQuery q = Annotate(NormalizeSource(CorpusQuery("running_comp")));
  EXPECT_EQ(Tags(q), (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_EQ(PrintNf(q).find("return^a"), PrintNf(q).find("return"));
}

TEST(AnnotateTest, IsIdempotent) {
  NfQuery q = Annotate(NormalizeSource(CorpusQuery("q4")));
  EXPECT_EQ(Annotate(q), q);
}

TEST(AnnotateTest, SingleComprehension) {
  NfQuery q = Annotate(NormalizeSource("for (d <- departments) return d.name"));
  EXPECT_EQ(Tags(q), std::vector<int>{1});
}

TEST(ValidatorTest, RejectsMissingTags) {
  NfQuery q = NormalizeSource("for (d <- departments) return d.name");
  try {
    ValidateNormalForm(q, CorpusSchema(), true);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnannotatedInput);
  }
}

TEST(ValidatorTest, RejectsUnknownTablesAndUnboundVariables) {
  NfQuery q;
  q.comprehensions.push_back(
      {{{"x", "nowhere", false}}, Expr::True(), Expr::Project("x", "a"), {}});
  EXPECT_THROW(ValidateNormalForm(q, CorpusSchema(), false), Error);
  NfQuery unbound;
  unbound.comprehensions.push_back({{{"x", "departments", false}},
                                    Expr::True(),
                                    Expr::Project("y", "name"),
                                    {}});
  try {
    ValidateNormalForm(unbound, CorpusSchema(), false);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotNormalInput);
  }
}

TEST(ValidatorTest, RejectsShreddedFormsInsideNormalForms) {
  NfQuery q;
  q.comprehensions.push_back(
      {{{"x", "departments", false}}, Expr::True(), Expr::RowIndex(), {}});
  EXPECT_THROW(ValidateNormalForm(q, CorpusSchema(), false), Error);
}

}  // namespace
}  // namespace shredq
