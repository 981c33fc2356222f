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

#ifndef SHREDQ_TESTS_SUPPORT_CORPUS_H_
#define SHREDQ_TESTS_SUPPORT_CORPUS_H_

#include <string>
#include <vector>

#include "shredq/ast/query.h"
#include "shredq/ast/result.h"
#include "shredq/ast/schema.h"
#include "shredq/ast/types.h"
#include "shredq/ast/value.h"
#include "shredq/cli/pipeline.h"

namespace shredq::testing {

// Absolute path of a file below the source tree.
std::string SourcePath(const std::string& relative);

// Contents of corpus/queries/<name>.nrc.
std::string CorpusQuery(const std::string& name);

// Q1 to Q6 and QF1 to QF4.
std::vector<std::string> TheoremCorpus();

Schema CorpusSchema();
Database SampleDatabase();

CompiledQuery CompileCorpus(const std::string& name);

// Result type of the running example, built by hand.
Type RunningResultType();

// The nested value of the running example on the sample data, built by hand.
Value RunningResultValue();

// Flat-scheme shredded results of the running example, built by hand. Tags
// are numbered a = 1 to e = 5.
ShreddedResult RunningR1();
ShreddedResult RunningR2();
ShreddedResult RunningR3();

// Renames generator variables to v1, v2, ... in binding order, restarting
// for every top-level comprehension.
ShQuery CanonicalVariables(const ShQuery& q);

struct GoldenCheck {
  bool ok = false;
  std::string message;
};

// Compares actual with tests/golden/<relative>. With SHREDQ_UPDATE_GOLDEN=1
// the file is rewritten instead.
GoldenCheck CheckGolden(const std::string& relative, const std::string& actual);

}  // namespace shredq::testing

#endif  // SHREDQ_TESTS_SUPPORT_CORPUS_H_
