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

#include "shredq/ast/path.h"

#include "shredq/ast/error.h"

namespace shredq {

namespace {

constexpr std::string_view kDownArrow = "\xE2\x86\x93";  // ↓
constexpr std::string_view kEpsilon = "\xCE\xB5";        // ε

void CollectPaths(const Type& t, Path& prefix, std::vector<Path>& out) {
  switch (t.kind()) {
    case Type::Kind::kBase:
    case Type::Kind::kIndex:
    case Type::Kind::kAny:
      return;
    case Type::Kind::kFun:
      Fail(ErrorCode::kTypeHasFunctions,
           "paths are undefined for function type " + t.ToString());
    case Type::Kind::kRecord:
      for (const auto& f : t.fields()) {
        prefix.push_back(PathStep::Field(f.label));
        CollectPaths(f.type, prefix, out);
        prefix.pop_back();
      }
      return;
    case Type::Kind::kBag:
      out.push_back(prefix);
      prefix.push_back(PathStep::Down());
      CollectPaths(t.element(), prefix, out);
      prefix.pop_back();
      return;
  }
}

}  // namespace

std::string PathToString(const Path& p) {
  std::string out;
  for (const auto& step : p) {
    if (step.kind == PathStep::Kind::kDown) {
      out += kDownArrow;
    } else {
      out += step.label;
    }
    out += ".";
  }
  out += kEpsilon;
  return out;
}

Path ParsePath(const std::string& text) {
  Path p;
  size_t pos = 0;
  while (true) {
    size_t dot = text.find('.', pos);
    std::string seg = text.substr(
        pos, dot == std::string::npos ? std::string::npos : dot - pos);
    if (dot == std::string::npos) {
      if (seg != kEpsilon && seg != "e") {
        Fail(ErrorCode::kInvalidPath, "path must end in ε: " + text);
      }
      return p;
    }
    if (seg == kDownArrow || seg == "v") {
      p.push_back(PathStep::Down());
    } else if (!seg.empty()) {
      p.push_back(PathStep::Field(seg));
    } else {
      Fail(ErrorCode::kInvalidPath, "empty path segment in " + text);
    }
    pos = dot + 1;
  }
}

std::vector<Path> PathsOf(const Type& t) {
  std::vector<Path> out;
  Path prefix;
  CollectPaths(t, prefix, out);
  return out;
}

int NestingDegree(const Type& t) { return static_cast<int>(PathsOf(t).size()); }

Type TypeAtPath(const Type& t, const Path& p) {
  if (!t.is_bag()) {
    Fail(ErrorCode::kInvalidPath, "path " + PathToString(p) +
                                      " does not address a bag in " +
                                      t.ToString());
  }
  Type cur = t;
  for (const auto& step : p) {
    if (step.kind == PathStep::Kind::kDown) {
      if (!cur.is_bag()) break;
      cur = cur.element();
    } else {
      const Type* f = cur.is_record() ? cur.field(step.label) : nullptr;
      if (f == nullptr) {
        Fail(ErrorCode::kInvalidPath,
             "no field '" + step.label + "' in " + cur.ToString());
      }
      cur = *f;
    }
  }
  if (!cur.is_bag()) {
    Fail(ErrorCode::kInvalidPath,
         "path " + PathToString(p) + " does not address a bag");
  }
  return cur.element();
}

std::string StaticTag::Alias() const {
  if (id == kTopId) return "top";
  if (id < 0) return "tag" + std::to_string(id);
  int n = id - 1;
  std::string out(1, static_cast<char>('a' + n % 26));
  if (n >= 26) out += std::to_string(n / 26);
  return out;
}

}  // namespace shredq
