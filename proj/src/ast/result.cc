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

#include "shredq/ast/result.h"

namespace shredq {

namespace {

Value RowValue(const ShreddedRow& r) {
  return Value::Tuple({Value::OfIndex(r.outer), r.payload});
}

}  // namespace

std::string ShreddedResultToString(const ShreddedResult& r) {
  std::string out;
  for (const auto& row : r) {
    out += row.outer.ToString() + " | " + row.payload.ToString() + "\n";
  }
  return out;
}

bool ShreddedResultsMultisetEqual(const ShreddedResult& a,
                                  const ShreddedResult& b) {
  if (a.size() != b.size()) return false;
  std::vector<Value> va, vb;
  for (const auto& r : a) va.push_back(RowValue(r));
  for (const auto& r : b) vb.push_back(RowValue(r));
  return MultisetEqual(Value::Bag(std::move(va)), Value::Bag(std::move(vb)));
}

bool ShreddedResultsEqual(const ShreddedResult& a, const ShreddedResult& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].outer != b[i].outer ||
        CompareValues(a[i].payload, b[i].payload) != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace shredq
