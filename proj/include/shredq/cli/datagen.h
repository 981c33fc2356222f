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

#ifndef SHREDQ_CLI_DATAGEN_H_
#define SHREDQ_CLI_DATAGEN_H_

#include <cstdint>

#include "shredq/ast/schema.h"

namespace shredq {

struct OrgDataOptions {
  int departments = 4;
  // Employees per department are drawn uniformly from [1, 2 * mean - 1].
  int mean_employees = 10;
  // Contacts per department are drawn uniformly from [0, 2 * mean].
  int mean_contacts = 5;
  uint64_t seed = 1;
};

// The organisation schema: departments(id, name), employees(id, dept, name,
// salary), tasks(id, employee, task), contacts(id, dept, name, client), all
// keyed by id.
Schema OrgSchema();

// Deterministic random instance of OrgSchema(). Employee and contact names
// are globally unique; each employee has 0 to 2 distinct tasks. Salaries
// fall in three bands so that the outlier predicates select some rows.
Database GenerateOrgData(const OrgDataOptions& options);

// Department count used for the i-th generated database of a test run:
// cycles through 4, 8, 16 and 32.
int DepartmentsForTrial(int trial);

}  // namespace shredq

#endif  // SHREDQ_CLI_DATAGEN_H_
