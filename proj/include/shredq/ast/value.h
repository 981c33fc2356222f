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

#ifndef SHREDQ_AST_VALUE_H_
#define SHREDQ_AST_VALUE_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "shredq/ast/path.h"
#include "shredq/ast/types.h"

namespace shredq {

struct UnitValue {
  auto operator<=>(const UnitValue&) const = default;
};

// Base constant. The alternative order gives the total order used for
// sorting: Bool < Int < String < Unit.
using Literal = std::variant<bool, int64_t, std::string, UnitValue>;

BaseType LiteralType(const Literal& lit);
std::string LiteralToString(const Literal& lit);
size_t HashLiteral(const Literal& lit);

enum class IndexScheme { kCanonical, kNatural, kFlat };

std::string_view IndexSchemeName(IndexScheme s);
std::optional<IndexScheme> ParseIndexScheme(std::string_view name);

// Key of one generator row in a natural index.
struct NaturalKey {
  std::string table;
  std::vector<Literal> values;

  auto operator<=>(const NaturalKey&) const = default;
};

// An index: a static tag paired with a dynamic part whose shape depends on
// the indexing scheme.
//   canonical: the list of 1-based positions of the enclosing generators
//   natural:   the keys of the rows bound by the enclosing generators
//   flat:      a single position, unique per static tag
struct Index {
  StaticTag tag;
  IndexScheme scheme = IndexScheme::kCanonical;
  std::vector<int64_t> positions;  // canonical
  std::vector<NaturalKey> keys;    // natural
  int64_t position = 0;            // flat

  static Index Canonical(StaticTag tag, std::vector<int64_t> positions);
  static Index Natural(StaticTag tag, std::vector<NaturalKey> keys);
  static Index Flat(StaticTag tag, int64_t position);

  auto operator<=>(const Index&) const = default;

  std::string ToString() const;
};

struct IndexHash {
  size_t operator()(const Index& ix) const;
};

struct Closure;  // Defined by the term evaluator.

// Immutable, cheaply copyable runtime value. Bag elements may carry an index
// annotation. Closures only arise when evaluating source terms.
class Value {
 public:
  enum class Kind { kConst, kRecord, kBag, kIndex, kClosure };

  struct Element;

  Value();  // Unit constant.

  static Value Const(Literal lit);
  static Value Int(int64_t i) { return Const(Literal(i)); }
  static Value Bool(bool b) { return Const(Literal(b)); }
  static Value String(std::string s) { return Const(Literal(std::move(s))); }
  static Value Record(std::vector<std::pair<std::string, Value>> fields);
  static Value Tuple(std::vector<Value> components);
  static Value Bag(std::vector<Value> elements);
  static Value AnnotatedBag(std::vector<Element> elements);
  static Value OfIndex(Index ix);
  static Value OfClosure(std::shared_ptr<const Closure> c);

  Kind kind() const;
  bool is_const() const { return kind() == Kind::kConst; }
  bool is_record() const { return kind() == Kind::kRecord; }
  bool is_bag() const { return kind() == Kind::kBag; }
  bool is_index() const { return kind() == Kind::kIndex; }
  bool is_closure() const { return kind() == Kind::kClosure; }

  const Literal& literal() const;
  bool as_bool() const;
  int64_t as_int() const;
  const std::string& as_string() const;

  const std::vector<std::pair<std::string, Value>>& fields() const;
  // Field lookup; nullptr when absent.
  const Value* field(std::string_view label) const;
  const std::vector<Element>& elements() const;
  const Index& index() const;
  const std::shared_ptr<const Closure>& closure() const;

  std::string ToString() const;

 private:
  struct Node;
  explicit Value(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Value::Element {
  Value value;
  std::optional<Index> annotation;
};

// Total order: constants (by literal order) < records < bags < indexes.
// Records compare by sorted label; bags compare as lists. Annotations are
// ignored. Closures are not comparable.
std::strong_ordering CompareValues(const Value& a, const Value& b);

// Exact structural equality including element order and annotations.
bool ExactlyEqual(const Value& a, const Value& b);

// Drops all bag annotations, recursively.
Value EraseAnnotations(const Value& v);

// Erases annotations and sorts every bag, recursively, so that two values
// are equal as nested multisets iff their canonical forms are ExactlyEqual.
Value Canonicalize(const Value& v);

// Equality of annotation-erased values with bags compared as multisets.
// Throws kType when the values do not have the same type.
bool MultisetEqual(const Value& a, const Value& b);

size_t HashValue(const Value& v);

// The list of index annotations found on the bags at path p of v (the
// annotated semantics' indexes(p, v)).
std::vector<Index> IndexesAt(const Path& p, const Value& v);

}  // namespace shredq

#endif  // SHREDQ_AST_VALUE_H_
