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

#ifndef SHREDQ_STITCHER_STITCHER_H_
#define SHREDQ_STITCHER_STITCHER_H_

#include <cstdint>

#include "shredq/ast/package.h"
#include "shredq/ast/result.h"
#include "shredq/ast/value.h"

namespace shredq {

struct StitchStats {
  int64_t rows_grouped = 0;  // rows inserted into the per-bag groups
  int64_t rows_emitted = 0;  // rows turned into bag elements
  int64_t lookups = 0;       // group lookups, one per stitched bag
};

// Rebuilds the nested value from one shredded result per bag, starting from
// the rows whose outer index is root. Rows are grouped by outer index once,
// so every row is visited a constant number of times. Elements keep the
// row annotations. Throws kDanglingIndex when a payload does not match the
// package shape.
Value Stitch(const Package<ShreddedResult>& results, const Index& root,
             StitchStats* stats = nullptr);

}  // namespace shredq

#endif  // SHREDQ_STITCHER_STITCHER_H_
