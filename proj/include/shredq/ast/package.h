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

#ifndef SHREDQ_AST_PACKAGE_H_
#define SHREDQ_AST_PACKAGE_H_

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "shredq/ast/error.h"
#include "shredq/ast/path.h"
#include "shredq/ast/types.h"

namespace shredq {

// A nested type whose bag constructors each carry an annotation of type A.
// Used to keep one shredded query, type or result per bag of a nested type.
template <typename A>
class Package {
 public:
  enum class Kind { kBase, kRecord, kBag };

  static Package Base(BaseType b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::kBase;
    n->base = b;
    return Package(std::move(n));
  }

  static Package Record(std::vector<std::pair<std::string, Package>> fields) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::kRecord;
    n->fields = std::move(fields);
    return Package(std::move(n));
  }

  static Package Bag(Package element, A annotation) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::kBag;
    n->children.push_back(std::move(element));
    n->annotation = std::make_shared<const A>(std::move(annotation));
    return Package(std::move(n));
  }

  Kind kind() const { return node_->kind; }
  BaseType base() const { return node_->base; }
  const std::vector<std::pair<std::string, Package>>& fields() const {
    return node_->fields;
  }
  const Package& element() const { return node_->children.at(0); }
  const A& annotation() const { return *node_->annotation; }

  // The annotation on the bag at path p. Throws kInvalidPath.
  const A& At(const Path& p) const {
    const Package* cur = this;
    for (const auto& step : p) {
      if (step.kind == PathStep::Kind::kDown) {
        if (cur->kind() != Kind::kBag) break;
        cur = &cur->element();
      } else {
        const Package* next = nullptr;
        if (cur->kind() == Kind::kRecord) {
          for (const auto& f : cur->fields()) {
            if (f.first == step.label) next = &f.second;
          }
        }
        if (next == nullptr) {
          Fail(
              ErrorCode::kInvalidPath,
              "no field '" + step.label + "' in package at " + PathToString(p));
        }
        cur = next;
      }
    }
    if (cur->kind() != Kind::kBag) {
      Fail(ErrorCode::kInvalidPath,
           "path " + PathToString(p) + " does not address a bag");
    }
    return cur->annotation();
  }

 private:
  struct Node {
    Kind kind = Kind::kBase;
    BaseType base = BaseType::kUnit;
    std::vector<std::pair<std::string, Package>> fields;
    std::vector<Package> children;
    std::shared_ptr<const A> annotation;
  };
  explicit Package(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

namespace package_internal {

template <typename A>
Package<A> Build(const Type& t, Path& prefix,
                 const std::function<A(const Path&)>& f) {
  switch (t.kind()) {
    case Type::Kind::kBase:
      return Package<A>::Base(t.base());
    case Type::Kind::kRecord: {
      std::vector<std::pair<std::string, Package<A>>> fields;
      for (const auto& fld : t.fields()) {
        prefix.push_back(PathStep::Field(fld.label));
        fields.emplace_back(fld.label, Build<A>(fld.type, prefix, f));
        prefix.pop_back();
      }
      return Package<A>::Record(std::move(fields));
    }
    case Type::Kind::kBag: {
      A annotation = f(prefix);
      prefix.push_back(PathStep::Down());
      Package<A> element = Build<A>(t.element(), prefix, f);
      prefix.pop_back();
      return Package<A>::Bag(std::move(element), std::move(annotation));
    }
    default:
      Fail(ErrorCode::kTypeHasFunctions,
           "cannot package non-nested type " + t.ToString());
  }
}

template <typename A>
void Collect(const Package<A>& p, Path& prefix,
             std::vector<std::pair<Path, const A*>>& out) {
  switch (p.kind()) {
    case Package<A>::Kind::kBase:
      return;
    case Package<A>::Kind::kRecord:
      for (const auto& [label, child] : p.fields()) {
        prefix.push_back(PathStep::Field(label));
        Collect(child, prefix, out);
        prefix.pop_back();
      }
      return;
    case Package<A>::Kind::kBag:
      out.emplace_back(prefix, &p.annotation());
      prefix.push_back(PathStep::Down());
      Collect(p.element(), prefix, out);
      prefix.pop_back();
      return;
  }
}

}  // namespace package_internal

// Annotates every bag of t with f(path of that bag).
template <typename A>
Package<A> MakePackage(const Type& t, const std::function<A(const Path&)>& f) {
  Path prefix;
  return package_internal::Build<A>(t, prefix, f);
}

// Applies f to every annotation, preserving the shape.
template <typename B, typename A>
Package<B> PackageMap(const Package<A>& p,
                      const std::function<B(const A&)>& f) {
  switch (p.kind()) {
    case Package<A>::Kind::kBase:
      return Package<B>::Base(p.base());
    case Package<A>::Kind::kRecord: {
      std::vector<std::pair<std::string, Package<B>>> fields;
      for (const auto& [label, child] : p.fields()) {
        fields.emplace_back(label, PackageMap<B, A>(child, f));
      }
      return Package<B>::Record(std::move(fields));
    }
    case Package<A>::Kind::kBag:
      return Package<B>::Bag(PackageMap<B, A>(p.element(), f),
                             f(p.annotation()));
  }
  Fail(ErrorCode::kType, "corrupt package");
}

// The underlying nested type.
template <typename A>
Type EraseAnnotations(const Package<A>& p) {
  switch (p.kind()) {
    case Package<A>::Kind::kBase:
      return Type::Base(p.base());
    case Package<A>::Kind::kRecord: {
      std::vector<TypeField> fields;
      for (const auto& [label, child] : p.fields()) {
        fields.push_back({label, EraseAnnotations(child)});
      }
      return Type::Record(std::move(fields));
    }
    case Package<A>::Kind::kBag:
      return Type::Bag(EraseAnnotations(p.element()));
  }
  Fail(ErrorCode::kType, "corrupt package");
}

// (path, annotation) pairs in pre-order, matching PathsOf.
template <typename A>
std::vector<std::pair<Path, const A*>> PackageEntries(const Package<A>& p) {
  std::vector<std::pair<Path, const A*>> out;
  Path prefix;
  package_internal::Collect(p, prefix, out);
  return out;
}

}  // namespace shredq

#endif  // SHREDQ_AST_PACKAGE_H_
