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

#ifndef SHREDQ_AST_PATH_H_
#define SHREDQ_AST_PATH_H_

#include <compare>
#include <string>
#include <vector>

#include "shredq/ast/types.h"

namespace shredq {

// One step of a path into a nested type: either into the element type of a
// bag, or into a record field.
struct PathStep {
  enum class Kind { kDown, kField };
  Kind kind = Kind::kDown;
  std::string label;

  static PathStep Down() { return {Kind::kDown, ""}; }
  static PathStep Field(std::string l) { return {Kind::kField, std::move(l)}; }

  auto operator<=>(const PathStep&) const = default;
};

// A path addresses one bag constructor of a nested type. The empty path is
// the outermost bag.
using Path = std::vector<PathStep>;

// Renders a path, e.g. "↓.people.↓.tasks.ε"; the empty path prints as "ε".
std::string PathToString(const Path& p);
// Inverse of PathToString. Throws kInvalidPath on malformed input.
Path ParsePath(const std::string& text);

// All paths of a nested type in pre-order (outer bags first). Throws
// kTypeHasFunctions when the type contains a function.
std::vector<Path> PathsOf(const Type& t);

// Number of bag constructors, which equals the number of paths.
int NestingDegree(const Type& t);

// The element type of the bag addressed by p. Throws kInvalidPath.
Type TypeAtPath(const Type& t, const Path& p);

// Static tag of a comprehension. Zero is reserved for the top tag; user
// comprehensions get 1, 2, 3, ... rendered as a, b, c, ...
struct StaticTag {
  int id = 0;

  static constexpr int kTopId = 0;
  static StaticTag Top() { return {kTopId}; }
  bool is_top() const { return id == kTopId; }

  auto operator<=>(const StaticTag&) const = default;

  // "top", "a".."z", then "a1".."z1", ...
  std::string Alias() const;
};

}  // namespace shredq

#endif  // SHREDQ_AST_PATH_H_
