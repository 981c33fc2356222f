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

#include "shredq/ast/types.h"

#include <algorithm>
#include <charconv>

#include "shredq/ast/error.h"

namespace shredq {

struct Type::Node {
  Kind kind = Kind::kBase;
  BaseType base = BaseType::kUnit;
  std::vector<TypeField> fields;
  std::vector<Type> children;  // bag: element; fun: param, result.
};

std::string_view BaseTypeName(BaseType t) {
  switch (t) {
    case BaseType::kInt:
      return "Int";
    case BaseType::kBool:
      return "Bool";
    case BaseType::kString:
      return "String";
    case BaseType::kUnit:
      return "Unit";
  }
  return "?";
}

std::optional<BaseType> ParseBaseType(std::string_view name) {
  if (name == "Int") return BaseType::kInt;
  if (name == "Bool") return BaseType::kBool;
  if (name == "String") return BaseType::kString;
  if (name == "Unit") return BaseType::kUnit;
  return std::nullopt;
}

std::string TupleLabel(int i) { return "#" + std::to_string(i); }

int TupleLabelIndex(std::string_view label) {
  if (label.size() < 2 || label[0] != '#') return 0;
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(label.data() + 1, label.data() + label.size(), value);
  if (ec != std::errc() || ptr != label.data() + label.size()) return 0;
  return value;
}

Type::Type() : Type(Base(BaseType::kUnit)) {}

Type Type::Base(BaseType b) {
  static const std::shared_ptr<const Node> kBases[] = {
      std::make_shared<Node>(Node{Kind::kBase, BaseType::kInt, {}, {}}),
      std::make_shared<Node>(Node{Kind::kBase, BaseType::kBool, {}, {}}),
      std::make_shared<Node>(Node{Kind::kBase, BaseType::kString, {}, {}}),
      std::make_shared<Node>(Node{Kind::kBase, BaseType::kUnit, {}, {}}),
  };
  return Type(kBases[static_cast<int>(b)]);
}

Type Type::Record(std::vector<TypeField> fields) {
  for (size_t i = 0; i < fields.size(); ++i) {
    for (size_t j = i + 1; j < fields.size(); ++j) {
      if (fields[i].label == fields[j].label) {
        Fail(ErrorCode::kType,
             "duplicate record label '" + fields[i].label + "'");
      }
    }
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::kRecord;
  node->fields = std::move(fields);
  return Type(std::move(node));
}

Type Type::Tuple(std::vector<Type> components) {
  std::vector<TypeField> fields;
  for (size_t i = 0; i < components.size(); ++i) {
    fields.push_back({TupleLabel(static_cast<int>(i + 1)), components[i]});
  }
  return Record(std::move(fields));
}

Type Type::Bag(Type element) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kBag;
  node->children.push_back(std::move(element));
  return Type(std::move(node));
}

Type Type::Fun(Type param, Type result) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kFun;
  node->children.push_back(std::move(param));
  node->children.push_back(std::move(result));
  return Type(std::move(node));
}

Type Type::Index() {
  static const auto kNode =
      std::make_shared<Node>(Node{Kind::kIndex, BaseType::kUnit, {}, {}});
  return Type(kNode);
}

Type Type::Any() {
  static const auto kNode =
      std::make_shared<Node>(Node{Kind::kAny, BaseType::kUnit, {}, {}});
  return Type(kNode);
}

Type::Kind Type::kind() const { return node_->kind; }
BaseType Type::base() const { return node_->base; }
const std::vector<TypeField>& Type::fields() const { return node_->fields; }

const Type* Type::field(std::string_view label) const {
  for (const auto& f : node_->fields) {
    if (f.label == label) return &f.type;
  }
  return nullptr;
}

const Type& Type::element() const { return node_->children.at(0); }
const Type& Type::param() const { return node_->children.at(0); }
const Type& Type::result() const { return node_->children.at(1); }

bool Type::operator==(const Type& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::kBase:
      return base() == other.base();
    case Kind::kIndex:
    case Kind::kAny:
      return true;
    case Kind::kBag:
      return element() == other.element();
    case Kind::kFun:
      return param() == other.param() && result() == other.result();
    case Kind::kRecord: {
      if (fields().size() != other.fields().size()) return false;
      for (const auto& f : fields()) {
        const Type* o = other.field(f.label);
        if (o == nullptr || !(*o == f.type)) return false;
      }
      return true;
    }
  }
  return false;
}

namespace {

bool IsTupleShape(const std::vector<TypeField>& fields) {
  if (fields.empty()) return false;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (TupleLabelIndex(fields[i].label) != static_cast<int>(i + 1)) {
      return false;
    }
  }
  return true;
}

void Print(const Type& t, bool atomic, std::string& out) {
  switch (t.kind()) {
    case Type::Kind::kBase:
      out += BaseTypeName(t.base());
      return;
    case Type::Kind::kIndex:
      out += "Index";
      return;
    case Type::Kind::kAny:
      out += "?";
      return;
    case Type::Kind::kBag:
      if (atomic) out += "(";
      out += "Bag ";
      Print(t.element(), true, out);
      if (atomic) out += ")";
      return;
    case Type::Kind::kFun:
      if (atomic) out += "(";
      Print(t.param(), true, out);
      out += " -> ";
      Print(t.result(), false, out);
      if (atomic) out += ")";
      return;
    case Type::Kind::kRecord: {
      const auto& fs = t.fields();
      if (IsTupleShape(fs)) {
        out += "(";
        for (size_t i = 0; i < fs.size(); ++i) {
          if (i > 0) out += ", ";
          Print(fs[i].type, false, out);
        }
        if (fs.size() == 1) out += ",";
        out += ")";
        return;
      }
      out += "{";
      for (size_t i = 0; i < fs.size(); ++i) {
        if (i > 0) out += ", ";
        out += fs[i].label;
        out += ": ";
        Print(fs[i].type, false, out);
      }
      out += "}";
      return;
    }
  }
}

}  // namespace

std::string Type::ToString() const {
  std::string out;
  Print(*this, false, out);
  return out;
}

bool IsNestedType(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::kBase:
      return true;
    case Type::Kind::kBag:
      return IsNestedType(t.element());
    case Type::Kind::kRecord:
      return std::all_of(
          t.fields().begin(), t.fields().end(),
          [](const TypeField& f) { return IsNestedType(f.type); });
    default:
      return false;
  }
}

bool IsFlatType(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::kBase:
    case Type::Kind::kIndex:
      return true;
    case Type::Kind::kRecord:
      return std::all_of(t.fields().begin(), t.fields().end(),
                         [](const TypeField& f) { return IsFlatType(f.type); });
    default:
      return false;
  }
}

bool IsTableType(const Type& t) {
  if (!t.is_bag() || !t.element().is_record()) return false;
  return std::all_of(t.element().fields().begin(), t.element().fields().end(),
                     [](const TypeField& f) { return f.type.is_base(); });
}

bool ContainsFunction(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::kFun:
      return true;
    case Type::Kind::kBag:
      return ContainsFunction(t.element());
    case Type::Kind::kRecord:
      return std::any_of(
          t.fields().begin(), t.fields().end(),
          [](const TypeField& f) { return ContainsFunction(f.type); });
    default:
      return false;
  }
}

bool ContainsAny(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::kAny:
      return true;
    case Type::Kind::kBag:
      return ContainsAny(t.element());
    case Type::Kind::kFun:
      return ContainsAny(t.param()) || ContainsAny(t.result());
    case Type::Kind::kRecord:
      return std::any_of(
          t.fields().begin(), t.fields().end(),
          [](const TypeField& f) { return ContainsAny(f.type); });
    default:
      return false;
  }
}

}  // namespace shredq
