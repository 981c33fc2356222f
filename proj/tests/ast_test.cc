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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "shredq/ast/error.h"
#include "shredq/ast/package.h"
#include "shredq/ast/path.h"
#include "shredq/ast/schema.h"
#include "shredq/ast/types.h"
#include "shredq/ast/value.h"
#include "support/corpus.h"
#include "support/random_queries.h"

namespace shredq {
namespace {

std::vector<std::string> PathStrings(const Type& t) {
  std::vector<std::string> out;
  for (const auto& p : PathsOf(t)) out.push_back(PathToString(p));
  return out;
}

Type TwoBags() {
  return Type::Bag(Type::Record(
      {{"A", Type::Bag(Type::Int())}, {"B", Type::Bag(Type::String())}}));
}

Value Ints(std::vector<int64_t> xs) {
  std::vector<Value> out;
  for (int64_t x : xs) out.push_back(Value::Int(x));
  return Value::Bag(std::move(out));
}

// Reverses every bag of a value, recursively.
Value ReverseBags(const Value& v) {
  if (v.is_record()) {
    std::vector<std::pair<std::string, Value>> fields;
    for (const auto& [l, f] : v.fields())
      fields.emplace_back(l, ReverseBags(f));
    return Value::Record(std::move(fields));
  }
  if (!v.is_bag()) return v;
  std::vector<Value> elements;
  for (const auto& e : v.elements()) elements.push_back(ReverseBags(e.value));
  std::reverse(elements.begin(), elements.end());
  return Value::Bag(std::move(elements));
}

TEST(PathsTest, ResultTypeHasThreePaths) {
  EXPECT_EQ(
      PathStrings(testing::RunningResultType()),
      (std::vector<std::string>{"ε", "↓.people.ε", "↓.people.↓.tasks.ε"}));
}

TEST(PathsTest, BaseTypeHasNoPaths) {
  EXPECT_TRUE(PathsOf(Type::Int()).empty());
  EXPECT_EQ(NestingDegree(Type::Int()), 0);
}

TEST(PathsTest, RecordOfTwoBags) {
  EXPECT_EQ(PathStrings(TwoBags()),
            (std::vector<std::string>{"ε", "↓.A.ε", "↓.B.ε"}));
}

TEST(PathsTest, NestingDegree) {
  EXPECT_EQ(NestingDegree(testing::RunningResultType()), 3);
  EXPECT_EQ(NestingDegree(Type::Bag(Type::Int())), 1);
  EXPECT_EQ(NestingDegree(TwoBags()), 3);
}

TEST(PathsTest, FunctionTypeIsRejected) {
  try {
    PathsOf(Type::Bag(Type::Fun(Type::Int(), Type::Int())));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTypeHasFunctions);
  }
}

TEST(PathsTest, PrintParseRoundTrip) {
  for (const auto& p : PathsOf(testing::RunningResultType())) {
    EXPECT_EQ(ParsePath(PathToString(p)), p);
  }
  EXPECT_THROW(ParsePath("↓.people"), Error);
}

TEST(PathsTest, TypeAtPath) {
  Type result = testing::RunningResultType();
  EXPECT_EQ(TypeAtPath(result, ParsePath("↓.people.↓.tasks.ε")),
            Type::String());
  EXPECT_THROW(TypeAtPath(result, ParsePath("↓.nobody.ε")), Error);
}

TEST(PathsTest, DegreeEqualsPathCountOnRandomTypes) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Type t = testing::RandomNestedType(rng, 3);
    EXPECT_EQ(NestingDegree(t), static_cast<int>(PathsOf(t).size()));
  }
}

TEST(StaticTagTest, Aliases) {
  EXPECT_EQ(StaticTag::Top().Alias(), "top");
  EXPECT_EQ(StaticTag{1}.Alias(), "a");
  EXPECT_EQ(StaticTag{5}.Alias(), "e");
  EXPECT_EQ(StaticTag{26}.Alias(), "z");
  EXPECT_EQ(StaticTag{27}.Alias(), "a1");
}

TEST(TypeTest, RecordsCompareByLabelSet) {
  Type a = Type::Record({{"x", Type::Int()}, {"y", Type::Bool()}});
  Type b = Type::Record({{"y", Type::Bool()}, {"x", Type::Int()}});
  EXPECT_EQ(a, b);
  EXPECT_NE(a, Type::Record({{"x", Type::Int()}}));
}

TEST(TypeTest, TuplesAreRecordsWithNumericLabels) {
  Type t = Type::Tuple({Type::Int(), Type::String()});
  ASSERT_TRUE(t.is_record());
  EXPECT_EQ(t.fields()[0].label, TupleLabel(1));
  EXPECT_EQ(TupleLabelIndex("#2"), 2);
  EXPECT_EQ(TupleLabelIndex("name"), 0);
  EXPECT_EQ(t.ToString(), "(Int, String)");
}

TEST(MultisetTest, PermutationIsEqual) {
  EXPECT_TRUE(MultisetEqual(Ints({1, 2, 2}), Ints({2, 1, 2})));
}

TEST(MultisetTest, MultiplicityMatters) {
  EXPECT_FALSE(MultisetEqual(Ints({1, 2}), Ints({1, 2, 2})));
}

TEST(MultisetTest, RunningResultWithPermutedInnerBags) {
  Value v = testing::RunningResultValue();
  Value permuted = ReverseBags(v);
  EXPECT_FALSE(ExactlyEqual(v, permuted));
  EXPECT_TRUE(MultisetEqual(v, permuted));
}

TEST(MultisetTest, TypeMismatchIsAnError) {
  try {
    MultisetEqual(Ints({1}), Value::Bag({Value::String("1")}));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kType);
  }
  EXPECT_THROW(MultisetEqual(Value::Int(1), Ints({})), Error);
  EXPECT_TRUE(MultisetEqual(Ints({}), Value::Bag({})));
}

TEST(MultisetTest, IsAnEquivalenceOnRandomValues) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Type t = testing::RandomNestedType(rng, 2);
    Value a = testing::RandomValue(rng, t);
    Value b = ReverseBags(a);
    Value c = ReverseBags(b);
    EXPECT_TRUE(MultisetEqual(a, a));
    EXPECT_EQ(MultisetEqual(a, b), MultisetEqual(b, a));
    EXPECT_TRUE(MultisetEqual(a, b) && MultisetEqual(b, c));
    EXPECT_TRUE(MultisetEqual(a, c));
  }
}

TEST(ValueOrderTest, KindsAreOrdered) {
  std::vector<Value> ascending = {
      Value::Bool(true),
      Value::Int(-5),
      Value::String(""),
      Value(),
      Value::Record({}),
      Value::Bag({}),
      Value::OfIndex(Index::Flat(StaticTag{1}, 1)),
  };
  for (size_t i = 0; i + 1 < ascending.size(); ++i) {
    EXPECT_TRUE(CompareValues(ascending[i], ascending[i + 1]) < 0) << i;
    EXPECT_TRUE(CompareValues(ascending[i + 1], ascending[i]) > 0) << i;
  }
}

TEST(ValueOrderTest, EraseAnnotationsDropsIndexes) {
  Value annotated =
      Value::AnnotatedBag({{Value::Int(1), Index::Flat(StaticTag{1}, 1)},
                           {Value::Int(2), std::nullopt}});
  Value erased = EraseAnnotations(annotated);
  for (const auto& e : erased.elements())
    EXPECT_FALSE(e.annotation.has_value());
  EXPECT_TRUE(MultisetEqual(erased, Ints({2, 1})));
}

TEST(PackageTest, MapPreservesShape) {
  Type result = testing::RunningResultType();
  auto paths = MakePackage<std::string>(
      result, [](const Path& p) { return PathToString(p); });
  auto lengths = PackageMap<size_t, std::string>(
      paths, [](const std::string& s) { return s.size(); });
  EXPECT_EQ(EraseAnnotations(paths), result);
  EXPECT_EQ(EraseAnnotations(lengths), result);
  EXPECT_EQ(paths.At(ParsePath("↓.people.ε")), "↓.people.ε");
  EXPECT_EQ(PackageEntries(lengths).size(), 3u);
}

TEST(PackageTest, BasePackage) {
  auto p = MakePackage<int>(Type::Int(), [](const Path&) { return 0; });
  EXPECT_EQ(EraseAnnotations(p), Type::Int());
  EXPECT_TRUE(PackageEntries(p).empty());
}

TEST(PackageTest, AtRejectsBadPaths) {
  auto p = MakePackage<int>(testing::RunningResultType(),
                            [](const Path&) { return 1; });
  EXPECT_THROW(p.At(ParsePath("↓.nobody.ε")), Error);
}

TEST(DatabaseTest, CanonicalRowOrderIsTotalOnKeyedTables) {
  Schema schema = testing::CorpusSchema();
  Database db = testing::SampleDatabase();
  for (const auto& table : schema.tables()) {
    const auto& rows = db.rows(table.name);
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
      EXPECT_TRUE(CompareValues(rows[i], rows[i + 1]) != 0);
    }
  }
}

}  // namespace
}  // namespace shredq
