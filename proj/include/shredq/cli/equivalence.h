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

#ifndef SHREDQ_CLI_EQUIVALENCE_H_
#define SHREDQ_CLI_EQUIVALENCE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shredq/ast/query.h"
#include "shredq/ast/schema.h"
#include "shredq/ast/value.h"
#include "shredq/backend/sql.h"
#include "shredq/evaluator/evaluator.h"

namespace shredq {

struct EquivalenceCase {
  std::string name;
  std::string query_text;
};

using IndexFnFactory = std::function<IndexFn(IndexScheme, const NfQuery&,
                                             const Database&, const Schema&)>;

struct EquivalenceOptions {
  int trials = 50;
  uint64_t first_seed = 1;
  int mean_employees = 10;
  std::vector<IndexScheme> schemes = {
      IndexScheme::kCanonical, IndexScheme::kNatural, IndexScheme::kFlat};
  // Also checks the typing of shredded and let-inserted queries and that
  // the flattened let-inserted queries agree with the flat scheme row for
  // row.
  bool check_backend = true;
  SqlOptions sql;
  // Replaces MakeIndexFn; used to show that invalid schemes are caught.
  IndexFnFactory index_fn;
};

struct EquivalenceFailureInfo {
  uint64_t seed = 0;
  int departments = 0;
  std::string query;
  std::string check;  // scheme name, "source", "let-inserted" or "typing"
  std::string message;
};

struct EquivalenceReport {
  int trials = 0;
  int64_t checks = 0;
  int64_t passed = 0;
  std::vector<EquivalenceFailureInfo> failures;
  // The first failure rerun with the fewest departments that still fail.
  std::optional<EquivalenceFailureInfo> minimized;

  bool ok() const { return failures.empty(); }
};

// For every trial generates an organisation database (seed first_seed + i,
// DepartmentsForTrial(i) departments) and checks that the stitched shredded
// results equal the normal-form semantics under every scheme, and that the
// normal form agrees with the source term. Queries are compiled against
// OrgSchema(). A query that fails to compile is reported once.
EquivalenceReport CheckEquivalence(const std::vector<EquivalenceCase>& cases,
                                   const EquivalenceOptions& options);

std::string EquivalenceReportToString(const EquivalenceReport& r);

}  // namespace shredq

#endif  // SHREDQ_CLI_EQUIVALENCE_H_
