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

#ifndef SHREDQ_TESTS_SUPPORT_RANDOM_QUERIES_H_
#define SHREDQ_TESTS_SUPPORT_RANDOM_QUERIES_H_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "shredq/ast/schema.h"
#include "shredq/ast/term.h"
#include "shredq/ast/types.h"
#include "shredq/ast/value.h"

namespace shredq::testing {

// Nested types: a bag of records, base types or empty records, with at most
// max_bags bag constructors on any path.
Type RandomNestedType(std::mt19937_64& rng, int max_bags);

// Flat types: base types and records of flat types, empty records included.
Type RandomFlatType(std::mt19937_64& rng, int depth);

// A value of a nested or flat type with small bags.
Value RandomValue(std::mt19937_64& rng, const Type& t);

// Generates closed, well-typed source queries over a schema. The queries
// exercise beta redexes, conditionals in every position, unions, nested
// comprehensions, comprehensions over non-table sources and emptiness
// tests. Empty bags only appear next to a bag that fixes their element type.
class QueryGenerator {
 public:
  QueryGenerator(uint64_t seed, Schema schema);

  // A query of type Bag(element) where element is a random nested type.
  Term Next(Type* type);

 private:
  struct Source {
    Term term;
    Type row;
  };

  int Pick(int n);
  bool Chance(int percent);
  std::string Fresh();
  Type ElementType(int max_bags);

  Term Base(BaseType b, int depth);
  Term Condition(int depth);
  Term Constant(BaseType b);
  Term ValueOf(const Type& t, int depth);
  Term BagOf(const Type& element, int depth);
  Term Comprehension(const Type& element, int depth, bool filtered);
  Source RowSource(int depth);

  std::mt19937_64 rng_;
  Schema schema_;
  std::vector<std::pair<std::string, Type>> env_;
  int next_var_ = 0;
};

}  // namespace shredq::testing

#endif  // SHREDQ_TESTS_SUPPORT_RANDOM_QUERIES_H_
