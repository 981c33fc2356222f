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

#include "shredq/ast/value.h"

#include <algorithm>
#include <functional>

#include "shredq/ast/error.h"

namespace shredq {

namespace {

inline size_t Mix(size_t seed, size_t h) {
  return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

void AppendQuoted(const std::string& s, std::string& out) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out += c;
    }
  }
  out += '"';
}

}  // namespace

BaseType LiteralType(const Literal& lit) {
  switch (lit.index()) {
    case 0:
      return BaseType::kBool;
    case 1:
      return BaseType::kInt;
    case 2:
      return BaseType::kString;
    default:
      return BaseType::kUnit;
  }
}

std::string LiteralToString(const Literal& lit) {
  std::string out;
  switch (lit.index()) {
    case 0:
      return std::get<bool>(lit) ? "true" : "false";
    case 1:
      return std::to_string(std::get<int64_t>(lit));
    case 2:
      AppendQuoted(std::get<std::string>(lit), out);
      return out;
    default:
      return "()";
  }
}

size_t HashLiteral(const Literal& lit) {
  size_t h = lit.index();
  switch (lit.index()) {
    case 0:
      return Mix(h, std::hash<bool>()(std::get<bool>(lit)));
    case 1:
      return Mix(h, std::hash<int64_t>()(std::get<int64_t>(lit)));
    case 2:
      return Mix(h, std::hash<std::string>()(std::get<std::string>(lit)));
    default:
      return h;
  }
}

std::string_view IndexSchemeName(IndexScheme s) {
  switch (s) {
    case IndexScheme::kCanonical:
      return "canonical";
    case IndexScheme::kNatural:
      return "natural";
    case IndexScheme::kFlat:
      return "flat";
  }
  return "?";
}

std::optional<IndexScheme> ParseIndexScheme(std::string_view name) {
  if (name == "canonical") return IndexScheme::kCanonical;
  if (name == "natural") return IndexScheme::kNatural;
  if (name == "flat") return IndexScheme::kFlat;
  return std::nullopt;
}

Index Index::Canonical(StaticTag tag, std::vector<int64_t> positions) {
  Index ix;
  ix.tag = tag;
  ix.scheme = IndexScheme::kCanonical;
  ix.positions = std::move(positions);
  return ix;
}

Index Index::Natural(StaticTag tag, std::vector<NaturalKey> keys) {
  Index ix;
  ix.tag = tag;
  ix.scheme = IndexScheme::kNatural;
  ix.keys = std::move(keys);
  return ix;
}

Index Index::Flat(StaticTag tag, int64_t position) {
  Index ix;
  ix.tag = tag;
  ix.scheme = IndexScheme::kFlat;
  ix.position = position;
  return ix;
}

std::string Index::ToString() const {
  std::string out;
  switch (scheme) {
    case IndexScheme::kCanonical:
      out = tag.Alias() + "<";
      for (size_t i = 0; i < positions.size(); ++i) {
        if (i > 0) out += ".";
        out += std::to_string(positions[i]);
      }
      out += ">";
      return out;
    case IndexScheme::kNatural:
      out = "<" + tag.Alias();
      for (const auto& k : keys) {
        for (const auto& v : k.values) out += "," + LiteralToString(v);
      }
      out += ">";
      return out;
    case IndexScheme::kFlat:
      return "<" + tag.Alias() + "," + std::to_string(position) + ">";
  }
  return out;
}

size_t IndexHash::operator()(const Index& ix) const {
  size_t h =
      Mix(static_cast<size_t>(ix.tag.id), static_cast<size_t>(ix.scheme));
  for (int64_t p : ix.positions) h = Mix(h, std::hash<int64_t>()(p));
  for (const auto& k : ix.keys) {
    h = Mix(h, std::hash<std::string>()(k.table));
    for (const auto& v : k.values) h = Mix(h, HashLiteral(v));
  }
  return Mix(h, std::hash<int64_t>()(ix.position));
}

struct Value::Node {
  Kind kind = Kind::kConst;
  Literal literal = UnitValue{};
  std::vector<std::pair<std::string, Value>> fields;
  std::vector<Element> elements;
  std::optional<Index> index;
  std::shared_ptr<const Closure> closure;
};

Value::Value() : Value(Const(UnitValue{})) {}

Value Value::Const(Literal lit) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kConst;
  n->literal = std::move(lit);
  return Value(std::move(n));
}

Value Value::Record(std::vector<std::pair<std::string, Value>> fields) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kRecord;
  n->fields = std::move(fields);
  return Value(std::move(n));
}

Value Value::Tuple(std::vector<Value> components) {
  std::vector<std::pair<std::string, Value>> fields;
  fields.reserve(components.size());
  for (size_t i = 0; i < components.size(); ++i) {
    fields.emplace_back(TupleLabel(static_cast<int>(i + 1)),
                        std::move(components[i]));
  }
  return Record(std::move(fields));
}

Value Value::Bag(std::vector<Value> elements) {
  std::vector<Element> elems;
  elems.reserve(elements.size());
  for (auto& v : elements) elems.push_back({std::move(v), std::nullopt});
  return AnnotatedBag(std::move(elems));
}

Value Value::AnnotatedBag(std::vector<Element> elements) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kBag;
  n->elements = std::move(elements);
  return Value(std::move(n));
}

Value Value::OfIndex(Index ix) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kIndex;
  n->index = std::move(ix);
  return Value(std::move(n));
}

Value Value::OfClosure(std::shared_ptr<const Closure> c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kClosure;
  n->closure = std::move(c);
  return Value(std::move(n));
}

Value::Kind Value::kind() const { return node_->kind; }
const Literal& Value::literal() const { return node_->literal; }

bool Value::as_bool() const {
  if (!is_const() || node_->literal.index() != 0) {
    Fail(ErrorCode::kType, "expected a Bool value, got " + ToString());
  }
  return std::get<bool>(node_->literal);
}

int64_t Value::as_int() const {
  if (!is_const() || node_->literal.index() != 1) {
    Fail(ErrorCode::kType, "expected an Int value, got " + ToString());
  }
  return std::get<int64_t>(node_->literal);
}

const std::string& Value::as_string() const {
  if (!is_const() || node_->literal.index() != 2) {
    Fail(ErrorCode::kType, "expected a String value, got " + ToString());
  }
  return std::get<std::string>(node_->literal);
}

const std::vector<std::pair<std::string, Value>>& Value::fields() const {
  return node_->fields;
}

const Value* Value::field(std::string_view label) const {
  for (const auto& f : node_->fields) {
    if (f.first == label) return &f.second;
  }
  return nullptr;
}

const std::vector<Value::Element>& Value::elements() const {
  return node_->elements;
}

const Index& Value::index() const { return *node_->index; }

const std::shared_ptr<const Closure>& Value::closure() const {
  return node_->closure;
}

namespace {

bool IsTupleFields(const std::vector<std::pair<std::string, Value>>& fs) {
  if (fs.empty()) return false;
  for (size_t i = 0; i < fs.size(); ++i) {
    if (TupleLabelIndex(fs[i].first) != static_cast<int>(i + 1)) return false;
  }
  return true;
}

void PrintValue(const Value& v, std::string& out) {
  switch (v.kind()) {
    case Value::Kind::kConst:
      out += LiteralToString(v.literal());
      return;
    case Value::Kind::kIndex:
      out += v.index().ToString();
      return;
    case Value::Kind::kClosure:
      out += "<closure>";
      return;
    case Value::Kind::kRecord: {
      const auto& fs = v.fields();
      bool tuple = IsTupleFields(fs);
      out += tuple ? "(" : "{";
      for (size_t i = 0; i < fs.size(); ++i) {
        if (i > 0) out += ", ";
        if (!tuple) out += fs[i].first + " = ";
        PrintValue(fs[i].second, out);
      }
      if (tuple && fs.size() == 1) out += ",";
      out += tuple ? ")" : "}";
      return;
    }
    case Value::Kind::kBag: {
      out += "[";
      const auto& es = v.elements();
      for (size_t i = 0; i < es.size(); ++i) {
        if (i > 0) out += ", ";
        PrintValue(es[i].value, out);
        if (es[i].annotation) out += "@" + es[i].annotation->ToString();
      }
      out += "]";
      return;
    }
  }
}

int KindRank(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::kConst:
      return 0;
    case Value::Kind::kRecord:
      return 1;
    case Value::Kind::kBag:
      return 2;
    case Value::Kind::kIndex:
      return 3;
    case Value::Kind::kClosure:
      return 4;
  }
  return 5;
}

std::vector<const std::pair<std::string, Value>*> SortedFields(const Value& v) {
  std::vector<const std::pair<std::string, Value>*> out;
  for (const auto& f : v.fields()) out.push_back(&f);
  std::sort(out.begin(), out.end(),
            [](auto* a, auto* b) { return a->first < b->first; });
  return out;
}

}  // namespace

std::string Value::ToString() const {
  std::string out;
  PrintValue(*this, out);
  return out;
}

std::strong_ordering CompareValues(const Value& a, const Value& b) {
  int ra = KindRank(a), rb = KindRank(b);
  if (ra != rb) return ra <=> rb;
  switch (a.kind()) {
    case Value::Kind::kConst:
      return a.literal() <=> b.literal();
    case Value::Kind::kIndex:
      return a.index() <=> b.index();
    case Value::Kind::kClosure:
      Fail(ErrorCode::kType, "closures are not comparable");
    case Value::Kind::kRecord: {
      auto fa = SortedFields(a), fb = SortedFields(b);
      size_t n = std::min(fa.size(), fb.size());
      for (size_t i = 0; i < n; ++i) {
        if (auto c = fa[i]->first <=> fb[i]->first; c != 0) return c;
        if (auto c = CompareValues(fa[i]->second, fb[i]->second); c != 0) {
          return c;
        }
      }
      return fa.size() <=> fb.size();
    }
    case Value::Kind::kBag: {
      const auto& ea = a.elements();
      const auto& eb = b.elements();
      size_t n = std::min(ea.size(), eb.size());
      for (size_t i = 0; i < n; ++i) {
        if (auto c = CompareValues(ea[i].value, eb[i].value); c != 0) return c;
      }
      return ea.size() <=> eb.size();
    }
  }
  return std::strong_ordering::equal;
}

bool ExactlyEqual(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Value::Kind::kConst:
      return a.literal() == b.literal();
    case Value::Kind::kIndex:
      return a.index() == b.index();
    case Value::Kind::kClosure:
      return a.closure() == b.closure();
    case Value::Kind::kRecord: {
      if (a.fields().size() != b.fields().size()) return false;
      for (const auto& [label, v] : a.fields()) {
        const Value* o = b.field(label);
        if (o == nullptr || !ExactlyEqual(v, *o)) return false;
      }
      return true;
    }
    case Value::Kind::kBag: {
      const auto& ea = a.elements();
      const auto& eb = b.elements();
      if (ea.size() != eb.size()) return false;
      for (size_t i = 0; i < ea.size(); ++i) {
        if (ea[i].annotation != eb[i].annotation) return false;
        if (!ExactlyEqual(ea[i].value, eb[i].value)) return false;
      }
      return true;
    }
  }
  return false;
}

Value EraseAnnotations(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::kRecord: {
      std::vector<std::pair<std::string, Value>> fs;
      fs.reserve(v.fields().size());
      for (const auto& [l, f] : v.fields())
        fs.emplace_back(l, EraseAnnotations(f));
      return Value::Record(std::move(fs));
    }
    case Value::Kind::kBag: {
      std::vector<Value> es;
      es.reserve(v.elements().size());
      for (const auto& e : v.elements())
        es.push_back(EraseAnnotations(e.value));
      return Value::Bag(std::move(es));
    }
    default:
      return v;
  }
}

Value Canonicalize(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::kRecord: {
      std::vector<std::pair<std::string, Value>> fs;
      fs.reserve(v.fields().size());
      for (const auto& [l, f] : v.fields()) fs.emplace_back(l, Canonicalize(f));
      return Value::Record(std::move(fs));
    }
    case Value::Kind::kBag: {
      std::vector<Value> es;
      es.reserve(v.elements().size());
      for (const auto& e : v.elements()) es.push_back(Canonicalize(e.value));
      std::sort(es.begin(), es.end(), [](const Value& x, const Value& y) {
        return CompareValues(x, y) < 0;
      });
      return Value::Bag(std::move(es));
    }
    default:
      return v;
  }
}

namespace {

bool SameType(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Value::Kind::kConst:
      return LiteralType(a.literal()) == LiteralType(b.literal());
    case Value::Kind::kRecord: {
      if (a.fields().size() != b.fields().size()) return false;
      for (const auto& [label, field] : a.fields()) {
        const Value* other = b.field(label);
        if (other == nullptr || !SameType(field, *other)) return false;
      }
      return true;
    }
    case Value::Kind::kBag: {
      const Value* first = nullptr;
      for (const auto* bag : {&a, &b}) {
        for (const auto& e : bag->elements()) {
          if (first == nullptr) {
            first = &e.value;
          } else if (!SameType(*first, e.value)) {
            return false;
          }
        }
      }
      return true;
    }
    default:
      return true;
  }
}

}  // namespace

bool MultisetEqual(const Value& a, const Value& b) {
  if (!SameType(a, b)) {
    Fail(ErrorCode::kType, "cannot compare " + a.ToString() + " with " +
                               b.ToString() + ": different types");
  }
  return ExactlyEqual(Canonicalize(a), Canonicalize(b));
}

size_t HashValue(const Value& v) {
  size_t h = static_cast<size_t>(v.kind());
  switch (v.kind()) {
    case Value::Kind::kConst:
      return Mix(h, HashLiteral(v.literal()));
    case Value::Kind::kIndex:
      return Mix(h, IndexHash()(v.index()));
    case Value::Kind::kClosure:
      return Mix(h, std::hash<const void*>()(v.closure().get()));
    case Value::Kind::kRecord: {
      // Order-insensitive so that it agrees with ExactlyEqual.
      size_t acc = 0;
      for (const auto& [l, f] : v.fields()) {
        acc += Mix(std::hash<std::string>()(l), HashValue(f));
      }
      return Mix(h, acc);
    }
    case Value::Kind::kBag:
      for (const auto& e : v.elements()) h = Mix(h, HashValue(e.value));
      return h;
  }
  return h;
}

namespace {

void CollectIndexes(const Path& p, size_t i, const Value& v,
                    std::vector<Index>& out) {
  if (i == p.size()) {
    if (!v.is_bag()) {
      Fail(ErrorCode::kInvalidPath, "path does not address a bag value");
    }
    for (const auto& e : v.elements()) {
      if (!e.annotation) {
        Fail(ErrorCode::kUnannotatedInput, "bag element without an index");
      }
      out.push_back(*e.annotation);
    }
    return;
  }
  const PathStep& step = p[i];
  if (step.kind == PathStep::Kind::kDown) {
    if (!v.is_bag()) Fail(ErrorCode::kInvalidPath, "expected a bag value");
    for (const auto& e : v.elements()) CollectIndexes(p, i + 1, e.value, out);
  } else {
    const Value* f = v.is_record() ? v.field(step.label) : nullptr;
    if (f == nullptr) {
      Fail(ErrorCode::kInvalidPath, "no field '" + step.label + "' in value");
    }
    CollectIndexes(p, i + 1, *f, out);
  }
}

}  // namespace

std::vector<Index> IndexesAt(const Path& p, const Value& v) {
  std::vector<Index> out;
  CollectIndexes(p, 0, v, out);
  return out;
}

}  // namespace shredq
