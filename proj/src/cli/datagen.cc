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

#include "shredq/cli/datagen.h"

#include <array>
#include <random>
#include <string>
#include <vector>

#include "shredq/ast/error.h"

namespace shredq {

namespace {

constexpr std::array<const char*, 5> kTasks = {"abstract", "build", "call",
                                               "dissemble", "enthuse"};

class Draw {
 public:
  explicit Draw(uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi]. Modulo reduction keeps the sequence identical
  // across standard library implementations.
  int64_t Between(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(engine_() % span);
  }

  bool Chance(int percent) { return Between(1, 100) <= percent; }

 private:
  std::mt19937_64 engine_;
};

std::string Numbered(const char* prefix, int64_t n) {
  std::string digits = std::to_string(n);
  return prefix + std::string(digits.size() < 4 ? 4 - digits.size() : 0, '0') +
         digits;
}

int64_t Salary(Draw& draw) {
  int64_t band = draw.Between(1, 10);
  if (band == 1) return draw.Between(1, 9) * 100;
  if (band == 2) return draw.Between(1001, 3000) * 1000;
  return draw.Between(1, 200) * 1000;
}

}  // namespace

Schema OrgSchema() {
  Schema s;
  s.AddTable({"departments",
              {{"id", BaseType::kInt}, {"name", BaseType::kString}},
              {"id"}});
  s.AddTable({"employees",
              {{"id", BaseType::kInt},
               {"dept", BaseType::kString},
               {"name", BaseType::kString},
               {"salary", BaseType::kInt}},
              {"id"}});
  s.AddTable({"tasks",
              {{"id", BaseType::kInt},
               {"employee", BaseType::kString},
               {"task", BaseType::kString}},
              {"id"}});
  s.AddTable({"contacts",
              {{"id", BaseType::kInt},
               {"dept", BaseType::kString},
               {"name", BaseType::kString},
               {"client", BaseType::kBool}},
              {"id"}});
  return s;
}

Database GenerateOrgData(const OrgDataOptions& options) {
  if (options.departments < 1 || options.mean_employees < 1 ||
      options.mean_contacts < 0) {
    Fail(ErrorCode::kConfig, "invalid data generator parameters");
  }
  Schema schema = OrgSchema();
  Draw draw(options.seed);
  std::vector<Value> departments, employees, tasks, contacts;
  int64_t task_id = 0;
  for (int d = 1; d <= options.departments; ++d) {
    std::string dept = Numbered("Dept", d);
    departments.push_back(
        Value::Record({{"id", Value::Int(d)}, {"name", Value::String(dept)}}));
    int64_t n = draw.Between(1, 2 * options.mean_employees - 1);
    for (int64_t i = 0; i < n; ++i) {
      int64_t id = static_cast<int64_t>(employees.size()) + 1;
      std::string name = Numbered("Emp", id);
      employees.push_back(
          Value::Record({{"id", Value::Int(id)},
                         {"dept", Value::String(dept)},
                         {"name", Value::String(name)},
                         {"salary", Value::Int(Salary(draw))}}));
      int64_t k = draw.Between(0, 2);
      int64_t first = draw.Between(0, kTasks.size() - 1);
      for (int64_t j = 0; j < k; ++j) {
        const char* task = kTasks[(first + j) % kTasks.size()];
        tasks.push_back(Value::Record({{"id", Value::Int(++task_id)},
                                       {"employee", Value::String(name)},
                                       {"task", Value::String(task)}}));
      }
    }
    int64_t c = draw.Between(0, 2 * options.mean_contacts);
    for (int64_t i = 0; i < c; ++i) {
      int64_t id = static_cast<int64_t>(contacts.size()) + 1;
      contacts.push_back(
          Value::Record({{"id", Value::Int(id)},
                         {"dept", Value::String(dept)},
                         {"name", Value::String(Numbered("Con", id))},
                         {"client", Value::Bool(draw.Chance(30))}}));
    }
  }
  Database db;
  db.SetTable(schema, "departments", std::move(departments));
  db.SetTable(schema, "employees", std::move(employees));
  db.SetTable(schema, "tasks", std::move(tasks));
  db.SetTable(schema, "contacts", std::move(contacts));
  return db;
}

int DepartmentsForTrial(int trial) {
  static constexpr std::array<int, 4> kCounts = {4, 8, 16, 32};
  return kCounts[static_cast<size_t>(trial) % kCounts.size()];
}

}  // namespace shredq
