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

#include <memory>
#include <unordered_map>
#include <vector>

#include "shredq/ast/error.h"

namespace shredq {

namespace {

using Groups =
    std::unordered_map<Index, std::vector<const ShreddedRow*>, IndexHash>;

class Stitcher {
 public:
  Stitcher(const Package<ShreddedResult>& results, StitchStats& stats)
      : stats_(stats) {
    groups_ = PackageMap<std::shared_ptr<const Groups>, ShreddedResult>(
        results, [this](const ShreddedResult& r) {
          auto g = std::make_shared<Groups>();
          for (const auto& row : r) {
            (*g)[row.outer].push_back(&row);
            ++stats_.rows_grouped;
          }
          return std::shared_ptr<const Groups>(std::move(g));
        });
  }

  Value Run(const Index& root) { return Build(Value::OfIndex(root), groups_); }

 private:
  using Shape = Package<std::shared_ptr<const Groups>>;

  Value Build(const Value& w, const Shape& shape) {
    switch (shape.kind()) {
      case Shape::Kind::kBase:
        if (!w.is_const()) Dangling(w, "a base value");
        return w;
      case Shape::Kind::kRecord: {
        if (!w.is_record()) Dangling(w, "a record");
        std::vector<std::pair<std::string, Value>> fields;
        for (const auto& [label, child] : shape.fields()) {
          const Value* f = w.field(label);
          if (f == nullptr) Dangling(w, "a field '" + label + "'");
          fields.emplace_back(label, Build(*f, child));
        }
        return Value::Record(std::move(fields));
      }
      case Shape::Kind::kBag: {
        if (!w.is_index()) Dangling(w, "an index");
        ++stats_.lookups;
        std::vector<Value::Element> elements;
        const Groups& groups = *shape.annotation();
        auto it = groups.find(w.index());
        if (it != groups.end()) {
          for (const ShreddedRow* row : it->second) {
            ++stats_.rows_emitted;
            elements.push_back(
                {Build(row->payload, shape.element()), row->annotation});
          }
        }
        return Value::AnnotatedBag(std::move(elements));
      }
    }
    Fail(ErrorCode::kDanglingIndex, "corrupt package");
  }

  [[noreturn]] static void Dangling(const Value& w, const std::string& want) {
    Fail(ErrorCode::kDanglingIndex,
         "expected " + want + " while stitching, got " + w.ToString());
  }

  StitchStats& stats_;
  Shape groups_ = Shape::Base(BaseType::kUnit);
};

}  // namespace

Value Stitch(const Package<ShreddedResult>& results, const Index& root,
             StitchStats* stats) {
  StitchStats local;
  Stitcher s(results, stats != nullptr ? *stats : local);
  return s.Run(root);
}

}  // namespace shredq
