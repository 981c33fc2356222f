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

#ifndef SHREDQ_AST_TYPES_H_
#define SHREDQ_AST_TYPES_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shredq {

enum class BaseType { kInt, kBool, kString, kUnit };

std::string_view BaseTypeName(BaseType t);
std::optional<BaseType> ParseBaseType(std::string_view name);

// Label of the i-th (1-based) component of a tuple.
std::string TupleLabel(int i);
// Returns the 1-based position for labels of the form "#k", or 0.
int TupleLabelIndex(std::string_view label);

struct TypeField;

// Immutable, cheaply copyable type. Covers the nested types of the source
// language (base, record, bag, function) and the extra forms used by later
// stages: Index for shredded types, Any for the element type of an empty bag
// whose type has not been fixed during checking.
class Type {
 public:
  enum class Kind { kBase, kRecord, kBag, kFun, kIndex, kAny };

  Type();  // Unit.

  static Type Base(BaseType b);
  static Type Int() { return Base(BaseType::kInt); }
  static Type Bool() { return Base(BaseType::kBool); }
  static Type String() { return Base(BaseType::kString); }
  static Type Unit() { return Base(BaseType::kUnit); }
  static Type Record(std::vector<TypeField> fields);
  static Type Tuple(std::vector<Type> components);
  static Type Bag(Type element);
  static Type Fun(Type param, Type result);
  static Type Index();
  static Type Any();

  Kind kind() const;
  bool is_base() const { return kind() == Kind::kBase; }
  bool is_record() const { return kind() == Kind::kRecord; }
  bool is_bag() const { return kind() == Kind::kBag; }

  BaseType base() const;
  const std::vector<TypeField>& fields() const;
  // Field lookup by label; nullptr when absent.
  const Type* field(std::string_view label) const;
  const Type& element() const;
  const Type& param() const;
  const Type& result() const;

  // Records compare by label set, not by declaration order.
  bool operator==(const Type& other) const;
  bool operator!=(const Type& other) const { return !(*this == other); }

  std::string ToString() const;

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TypeField {
  std::string label;
  Type type;
};

// A type is nested when it is built from base, record and bag only.
bool IsNestedType(const Type& t);
// A flat type is a base type or a record of flat types (Index allowed).
bool IsFlatType(const Type& t);
// Bag of a record of base types.
bool IsTableType(const Type& t);
bool ContainsFunction(const Type& t);
bool ContainsAny(const Type& t);

}  // namespace shredq

#endif  // SHREDQ_AST_TYPES_H_
