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

#include "shredq/stitcher/stitcher.h"

#include <gtest/gtest.h>

#include "shredq/ast/error.h"
#include "shredq/ast/path.h"
#include "shredq/cli/pipeline.h"
#include "support/corpus.h"

namespace shredq {
namespace {

Package<ShreddedResult> RunningResults(bool empty) {
  return MakePackage<ShreddedResult>(testing::RunningResultType(),
                                     [&](const Path& p) -> ShreddedResult {
                                       if (empty) return {};
                                       switch (p.size()) {
                                         case 0:
                                           return testing::RunningR1();
                                         case 2:
                                           return testing::RunningR2();
                                         default:
                                           return testing::RunningR3();
                                       }
                                     });
}

const Index kRoot = Index::Flat(StaticTag::Top(), 1);

TEST(StitchTest, RebuildsTheRunningExample) {
  StitchStats stats;
  Value v = Stitch(RunningResults(false), kRoot, &stats);
  EXPECT_TRUE(MultisetEqual(EraseAnnotations(v), testing::RunningResultValue()))
      << v.ToString();
}

TEST(StitchTest, VisitsEveryRowOnce) {
  StitchStats stats;
  Stitch(RunningResults(false), kRoot, &stats);
  // 4 departments, 5 people and 6 tasks.
  EXPECT_EQ(stats.rows_grouped, 15);
  EXPECT_EQ(stats.rows_emitted, 15);
  // The outer bag, one people bag per department, one tasks bag per person.
  EXPECT_EQ(stats.lookups, 1 + 4 + 5);
}

TEST(StitchTest, AllEmptyResults) {
  Value v = Stitch(RunningResults(true), kRoot);
  ASSERT_TRUE(v.is_bag());
  EXPECT_TRUE(v.elements().empty());
}

TEST(StitchTest, UnknownRootGivesEmptyBag) {
  Value v = Stitch(RunningResults(false), Index::Flat(StaticTag::Top(), 2));
  EXPECT_TRUE(v.elements().empty());
}

TEST(StitchTest, PayloadOfTheWrongShape) {
  auto bad = MakePackage<ShreddedResult>(
      testing::RunningResultType(), [](const Path& p) -> ShreddedResult {
        if (!p.empty()) return {};
        return {{kRoot,
                 Value::Record({{"department", Value::String("x")},
                                {"people", Value::String("not an index")}}),
                 std::nullopt}};
      });
  try {
    Stitch(bad, kRoot);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDanglingIndex);
  }
}

TEST(StitchTest, CorpusOnSampleDataUnderEveryScheme) {
  Schema schema = testing::CorpusSchema();
  Database db = testing::SampleDatabase();
  for (const auto& name : testing::TheoremCorpus()) {
    CompiledQuery q = testing::CompileCorpus(name);
    Value expected = EvalNormalForm(q.normal, db);
    for (IndexScheme s :
         {IndexScheme::kCanonical, IndexScheme::kNatural, IndexScheme::kFlat}) {
      IndexFn ix = MakeIndexFn(s, q.normal, db, schema);
      StitchStats stats;
      Value v = Stitch(EvalPackage(q, db, ix), ix.Root(), &stats);
      EXPECT_TRUE(MultisetEqual(EraseAnnotations(v), expected))
          << name << " " << IndexSchemeName(s);
      EXPECT_EQ(stats.rows_grouped, stats.rows_emitted) << name;
    }
  }
}

}  // namespace
}  // namespace shredq
