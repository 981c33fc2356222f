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

#include "shredq/shredder/shredder.h"

#include "shredq/ast/error.h"

namespace shredq {

namespace {

[[noreturn]] void BadPath(const Path& p, const std::string& what) {
  Fail(ErrorCode::kInvalidPath, "path " + PathToString(p) + ": " + what);
}

class Shredder {
 public:
  explicit Shredder(const Path& p) : path_(p) {}

  ShQuery Run(const NfQuery& l) {
    ShQuery out;
    std::vector<ShLevel> prefix;
    Query(l, StaticTag::Top(), 0, prefix, out.comprehensions);
    return out;
  }

 private:
  void Query(const NfQuery& q, StaticTag outer, size_t pos,
             std::vector<ShLevel>& prefix, std::vector<ShComprehension>& out) {
    for (const auto& c : q.comprehensions) {
      if (!c.tag) {
        Fail(ErrorCode::kUnannotatedInput,
             "cannot shred a comprehension without a static tag");
      }
      prefix.push_back({c.generators, Inner(c.guard, *c.tag)});
      if (pos == path_.size()) {
        out.push_back({prefix, *c.tag, IndexRef{outer, IndexRef::Dir::kOuter},
                       Inner(c.body, *c.tag)});
      } else if (path_[pos].kind == PathStep::Kind::kDown) {
        Body(c.body, *c.tag, pos + 1, prefix, out);
      } else {
        BadPath(path_, "field step '" + path_[pos].label + "' on a bag");
      }
      prefix.pop_back();
    }
  }

  void Body(const Expr& m, StaticTag tag, size_t pos,
            std::vector<ShLevel>& prefix, std::vector<ShComprehension>& out) {
    if (pos < path_.size() && path_[pos].kind == PathStep::Kind::kField) {
      if (m.kind() != Expr::Kind::kRecord) {
        BadPath(path_, "field step '" + path_[pos].label + "' on a non-record");
      }
      const Expr* f = m.field(path_[pos].label);
      if (f == nullptr) BadPath(path_, "no field '" + path_[pos].label + "'");
      Body(*f, tag, pos + 1, prefix, out);
      return;
    }
    if (m.kind() != Expr::Kind::kQuery) BadPath(path_, "does not end at a bag");
    Query(m.nf_query(), tag, pos, prefix, out);
  }

  static Expr Inner(const Expr& m, StaticTag tag) {
    switch (m.kind()) {
      case Expr::Kind::kPrim: {
        std::vector<Expr> args;
        for (const auto& a : m.args()) args.push_back(Inner(a, tag));
        return Expr::Prim(m.op(), std::move(args));
      }
      case Expr::Kind::kRecord: {
        std::vector<Expr> args;
        for (const auto& a : m.args()) args.push_back(Inner(a, tag));
        return Expr::Record(m.labels(), std::move(args));
      }
      case Expr::Kind::kIsEmpty:
        return Expr::IsEmpty(Shredder(Path{}).Run(m.nf_query()));
      case Expr::Kind::kQuery:
        return Expr::OfIndex({tag, IndexRef::Dir::kInner});
      default:
        return m;
    }
  }

  const Path& path_;
};

}  // namespace

Type ShredTypeInner(const Type& a) {
  switch (a.kind()) {
    case Type::Kind::kBase:
    case Type::Kind::kIndex:
      return a;
    case Type::Kind::kRecord: {
      std::vector<TypeField> fields;
      for (const auto& f : a.fields()) {
        fields.push_back({f.label, ShredTypeInner(f.type)});
      }
      return Type::Record(std::move(fields));
    }
    case Type::Kind::kBag:
      return Type::Index();
    default:
      Fail(ErrorCode::kTypeHasFunctions,
           "cannot shred non-nested type " + a.ToString());
  }
}

Type ShredTypeOuter(const Type& a, const Path& p) {
  const Type* cur = &a;
  for (const auto& step : p) {
    if (step.kind == PathStep::Kind::kDown) {
      if (!cur->is_bag()) BadPath(p, "bag step on " + cur->ToString());
      cur = &cur->element();
    } else {
      const Type* f = cur->is_record() ? cur->field(step.label) : nullptr;
      if (f == nullptr) BadPath(p, "no field '" + step.label + "'");
      cur = f;
    }
  }
  if (!cur->is_bag()) BadPath(p, "does not end at a bag");
  return Type::Bag(
      Type::Tuple({Type::Index(), ShredTypeInner(cur->element())}));
}

ShQuery ShredQuery(const NfQuery& l, const Path& p) {
  return Shredder(p).Run(l);
}

Package<Type> ShredTypePackage(const Type& a) {
  return MakePackage<Type>(
      a, [&a](const Path& p) { return ShredTypeOuter(a, p); });
}

Package<ShQuery> ShredPackage(const NfQuery& l, const Type& a) {
  return MakePackage<ShQuery>(a,
                              [&l](const Path& p) { return ShredQuery(l, p); });
}

}  // namespace shredq
