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

#ifndef SHREDQ_TESTS_SUPPORT_PROPERTIES_H_
#define SHREDQ_TESTS_SUPPORT_PROPERTIES_H_

#include <cstdint>
#include <string>

namespace shredq::testing {

struct PropertyResult {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  std::string Summary() const;
};

// Erasing the annotations of the shredded type package of a random nested
// type gives back the type.
PropertyResult CheckEraseShredTypes(int cases, uint64_t seed);

// Unflattening the flattening of a random value of a random flat type gives
// back the value, and the flattening is a record of base values whose
// labels are the flattened type's columns.
PropertyResult CheckFlattenRoundTrip(int cases, uint64_t seed);

// The normal form of a random query passes the grammar validator, keeps the
// source type and agrees with the source semantics on random data.
PropertyResult CheckNormalFormValidity(int cases, uint64_t seed);

// The annotated semantics of a random query is well indexed under the
// canonical, natural and flat schemes.
PropertyResult CheckWellIndexed(int cases, uint64_t seed);

// The number of shredded queries equals the nesting degree of the result
// type, for random types and random queries.
PropertyResult CheckQueryCount(int cases, uint64_t seed);

// The full harness on random queries: stitching agrees with the source
// semantics under every scheme, let-inserted results agree with flat
// shredded results and all shredded outputs typecheck.
PropertyResult CheckRandomPipeline(int cases, uint64_t seed);

}  // namespace shredq::testing

#endif  // SHREDQ_TESTS_SUPPORT_PROPERTIES_H_
