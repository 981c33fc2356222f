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

#include "support/properties.h"

#include <gtest/gtest.h>

namespace shredq::testing {
namespace {

constexpr int kCases = 1000;

TEST(PropertyTest, EraseAfterShredIsIdentityOnTypes) {
  PropertyResult r = CheckEraseShredTypes(kCases, 11);
  EXPECT_TRUE(r.ok()) << r.Summary();
}

TEST(PropertyTest, FlattenRoundTrip) {
  PropertyResult r = CheckFlattenRoundTrip(kCases, 12);
  EXPECT_TRUE(r.ok()) << r.Summary();
}

TEST(PropertyTest, NormalFormsPassValidatorAndKeepSemantics) {
  PropertyResult r = CheckNormalFormValidity(kCases, 13);
  EXPECT_TRUE(r.ok()) << r.Summary();
}

TEST(PropertyTest, AnnotatedResultsAreWellIndexed) {
  PropertyResult r = CheckWellIndexed(kCases, 14);
  EXPECT_TRUE(r.ok()) << r.Summary();
}

TEST(PropertyTest, QueryCountIsNestingDegree) {
  PropertyResult r = CheckQueryCount(kCases, 15);
  EXPECT_TRUE(r.ok()) << r.Summary();
}

TEST(PropertyTest, RandomQueriesSurviveTheWholePipeline) {
  PropertyResult r = CheckRandomPipeline(kCases, 16);
  EXPECT_TRUE(r.ok()) << r.Summary();
}

}  // namespace
}  // namespace shredq::testing
