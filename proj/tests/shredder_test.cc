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

#include "shredq/shredder/shredder.h"

#include <gtest/gtest.h>

#include <chrono>
#include <string>

#include "shredq/ast/error.h"
#include "shredq/ast/path.h"
#include "shredq/ast/printer.h"
#include "shredq/frontend/typecheck.h"
#include "shredq/normalizer/normalizer.h"
#include "shredq/shredder/typing.h"
#include "support/corpus.h"

namespace shredq {
namespace {

using testing::CorpusSchema;

const char* const kRunningPaths[] = {"ε", "↓.people.ε", "↓.people.↓.tasks.ε"};

NfQuery Annotated(const std::string& text, Type* type = nullptr) {
  Schema schema = CorpusSchema();
  CheckedQuery q = CompileSource(text, schema);
  if (type != nullptr) *type = q.type;
  return Annotate(Normalize(q.term, q.type, schema));
}

TEST(ShredTypeTest, Inner) {
  Type person = Type::Record(
      {{"name", Type::String()}, {"tasks", Type::Bag(Type::String())}});
  EXPECT_EQ(ShredTypeInner(person).ToString(), "{name: String, tasks: Index}");
  EXPECT_EQ(ShredTypeInner(Type::Int()), Type::Int());
  EXPECT_EQ(ShredTypeInner(Type::Bag(Type::Int())), Type::Index());
  EXPECT_THROW(ShredTypeInner(Type::Fun(Type::Int(), Type::Int())), Error);
}

TEST(ShredTypeTest, OuterReproducesRunningExample) {
  Type result = testing::RunningResultType();
  std::string actual;
  for (const char* p : kRunningPaths) {
    actual += ShredTypeOuter(result, ParsePath(p)).ToString() + "\n";
  }
  testing::GoldenCheck g =
      testing::CheckGolden("shred/running.types.txt", actual);
  EXPECT_TRUE(g.ok) << g.message;
}

TEST(ShredTypeTest, InvalidPath) {
  try {
    ShredTypeOuter(testing::RunningResultType(), ParsePath("↓.tasks.ε"));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidPath);
  }
}

TEST(ShredTypeTest, PackageErasesToType) {
  Type result = testing::RunningResultType();
  EXPECT_EQ(EraseAnnotations(ShredTypePackage(result)), result);
  EXPECT_EQ(EraseAnnotations(ShredTypePackage(Type::Int())), Type::Int());
}

TEST(ShredQueryTest, RunningExampleGoldens) {
  NfQuery comp = Annotated(testing::CorpusQuery("running_comp"));
  for (int i = 0; i < 3; ++i) {
    ShQuery q = ShredQuery(comp, ParsePath(kRunningPaths[i]));
    testing::GoldenCheck g =
        testing::CheckGolden("shred/running." + std::to_string(i + 1) + ".txt",
                             PrintSh(testing::CanonicalVariables(q)) + "\n");
    EXPECT_TRUE(g.ok) << g.message;
  }
}

TEST(ShredQueryTest, PackageHasOneQueryPerBag) {
  Type type;
  NfQuery comp = Annotated(testing::CorpusQuery("running_comp"), &type);
  Package<ShQuery> p = ShredPackage(comp, type);
  auto entries = PackageEntries(p);
  ASSERT_EQ(entries.size(), 3u);
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(PathToString(entries[i].first), kRunningPaths[i]);
    EXPECT_EQ(*entries[i].second, ShredQuery(comp, entries[i].first));
  }
  EXPECT_EQ(EraseAnnotations(p), type);
}

TEST(ShredQueryTest, FlatQueryGivesOneQuery) {
  Type type;
  NfQuery q = Annotated("for (d <- departments) return {name = d.name}", &type);
  EXPECT_EQ(PackageEntries(ShredPackage(q, type)).size(), 1u);
}

TEST(ShredQueryTest, RequiresTags) {
  Schema schema = CorpusSchema();
  CheckedQuery src =
      CompileSource("for (d <- departments) return d.name", schema);
  NfQuery q = Normalize(src.term, src.type, schema);
  try {
    ShredQuery(q, {});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnannotatedInput);
  }
}

TEST(ShredQueryTest, EmptinessTestKeepsOnlyTheTopLevelQuery) {
  NfQuery q = Annotated(
      "for (d <- departments) where (empty(for (e <- employees) "
      "where (e.dept = d.name) return {n = e.name, "
      "ts = for (t <- tasks) where (t.employee = e.name) return t.task})) "
      "return d.name");
  ShQuery s = ShredQuery(q, {});
  ASSERT_EQ(s.comprehensions.size(), 1u);
  const Expr& guard = s.comprehensions[0].levels[0].guard;
  ASSERT_EQ(guard.kind(), Expr::Kind::kIsEmpty);
  ASSERT_TRUE(guard.has_sh_query());
  std::string text = PrintSh(guard.sh_query());
  EXPECT_EQ(text.find("tasks"), std::string::npos) << text;
  EXPECT_NE(text.find("employees"), std::string::npos) << text;
}

TEST(ShreddedTypingTest, AcceptsCorpusOutputs) {
  Schema schema = CorpusSchema();
  for (auto name : testing::TheoremCorpus()) {
    Type type;
    NfQuery q = Annotated(testing::CorpusQuery(name), &type);
    Package<ShQuery> package = ShredPackage(q, type);
    for (const auto& [path, m] : PackageEntries(package)) {
      Type actual = TypecheckShredded(*m, schema);
      EXPECT_TRUE(Conforms(actual, ShredTypeOuter(type, path)))
          << name << " at " << PathToString(path) << ": " << actual.ToString();
    }
  }
}

TEST(ShreddedTypingTest, RejectsForeignInnerTag) {
  NfQuery comp = Annotated(testing::CorpusQuery("running_comp"));
  ShQuery q = ShredQuery(comp, {});
  ShComprehension& c = q.comprehensions[0];
  c.inner =
      Expr::Record({"department", "people"},
                   {*c.inner.field("department"),
                    Expr::OfIndex({StaticTag{2}, IndexRef::Dir::kInner})});
  try {
    TypecheckShredded(q, CorpusSchema());
    FAIL() << "expected a type error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kType);
  }
}

TEST(ShreddedTypingTest, EmptyQueryHasAnyType) {
  EXPECT_EQ(TypecheckShredded(ShQuery{}, CorpusSchema()),
            Type::Bag(Type::Any()));
}

TEST(ShredQueryTest, SizeIsLinearInTheInput) {
  std::string text = "for (d <- departments) return {n = d.name, xs = []";
  for (int i = 0; i < 400; ++i) {
    text += " ++ (for (e <- employees) where (e.salary > " + std::to_string(i) +
            ") return {m = e.name, ts = for (t <- tasks) where "
            "(t.employee = e.name) return t.task})";
  }
  text += "}";
  Type type;
  NfQuery q = Annotated(text, &type);
  size_t input = PrintNf(q).size();
  auto start = std::chrono::steady_clock::now();
  Package<ShQuery> p = ShredPackage(q, type);
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  size_t output = 0;
  for (const auto& [path, m] : PackageEntries(p)) output += PrintSh(*m).size();
  EXPECT_EQ(PackageEntries(p).size(), 3u);
  EXPECT_LE(output, 3 * 2 * input);
  EXPECT_LT(seconds, 1.0);
}

}  // namespace
}  // namespace shredq
