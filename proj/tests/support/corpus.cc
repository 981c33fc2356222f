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

#include "support/corpus.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <utility>

#include "shredq/frontend/json_io.h"

namespace shredq::testing {

namespace {

Value Str(const char* s) { return Value::String(s); }

Value Person(const char* name, std::vector<Value> tasks) {
  return Value::Record(
      {{"name", Str(name)}, {"tasks", Value::Bag(std::move(tasks))}});
}

Value Department(const char* name, std::vector<Value> people) {
  return Value::Record(
      {{"department", Str(name)}, {"people", Value::Bag(std::move(people))}});
}

Index Flat(int tag, int64_t position) { return Index::Flat({tag}, position); }

Value Ix(int tag, int64_t position) {
  return Value::OfIndex(Flat(tag, position));
}

class Renamer {
 public:
  ShQuery Query(const ShQuery& q, bool restart) {
    ShQuery out;
    for (const auto& c : q.comprehensions) {
      if (restart) next_ = 1;
      auto saved = names_;
      ShComprehension r = c;
      for (auto& level : r.levels) {
        for (auto& g : level.generators) g.var = Bind(g.var);
        level.guard = Rename(level.guard);
      }
      r.inner = Rename(r.inner);
      names_ = std::move(saved);
      out.comprehensions.push_back(std::move(r));
    }
    return out;
  }

 private:
  std::string Bind(const std::string& var) {
    std::string name = "v" + std::to_string(next_++);
    names_[var] = name;
    return name;
  }

  Expr Rename(const Expr& e) {
    switch (e.kind()) {
      case Expr::Kind::kProject: {
        auto it = names_.find(e.var());
        return Expr::Project(it == names_.end() ? e.var() : it->second,
                             e.path());
      }
      case Expr::Kind::kPrim: {
        std::vector<Expr> args;
        for (const auto& a : e.args()) args.push_back(Rename(a));
        return Expr::Prim(e.op(), std::move(args));
      }
      case Expr::Kind::kRecord: {
        std::vector<Expr> args;
        for (const auto& a : e.args()) args.push_back(Rename(a));
        return Expr::Record(e.labels(), std::move(args));
      }
      case Expr::Kind::kIsEmpty:
        if (e.has_sh_query()) return Expr::IsEmpty(Query(e.sh_query(), false));
        return e;
      default:
        return e;
    }
  }

  std::map<std::string, std::string> names_;
  int next_ = 1;
};

}  // namespace

std::string SourcePath(const std::string& relative) {
  return std::string(SHREDQ_SOURCE_DIR) + "/" + relative;
}

std::string CorpusQuery(const std::string& name) {
  return ReadFile(SourcePath("corpus/queries/" + name + ".nrc"));
}

std::vector<std::string> TheoremCorpus() {
  return {"q1", "q2", "q3", "q4", "q5", "q6", "qf1", "qf2", "qf3", "qf4"};
}

Schema CorpusSchema() {
  return ParseSchemaJson(ReadFile(SourcePath("corpus/org_schema.json")));
}

Database SampleDatabase() {
  return ParseDatabaseJson(ReadFile(SourcePath("corpus/sample_data.json")),
                           CorpusSchema());
}

CompiledQuery CompileCorpus(const std::string& name) {
  return CompileQuery(CorpusQuery(name), CorpusSchema());
}

Type RunningResultType() {
  Type person = Type::Record(
      {{"name", Type::String()}, {"tasks", Type::Bag(Type::String())}});
  return Type::Bag(Type::Record(
      {{"department", Type::String()}, {"people", Type::Bag(person)}}));
}

Value RunningResultValue() {
  return Value::Bag({
      Department("Product",
                 {Person("Bert", {Str("build")}), Person("Pat", {Str("buy")})}),
      Department("Research", {}),
      Department("Quality", {}),
      Department("Sales",
                 {Person("Erik", {Str("call"), Str("enthuse")}),
                  Person("Fred", {Str("call")}), Person("Sue", {Str("buy")})}),
  });
}

ShreddedResult RunningR1() {
  Index top = Index::Flat(StaticTag::Top(), 1);
  ShreddedResult r;
  const char* names[] = {"Product", "Quality", "Research", "Sales"};
  for (int i = 0; i < 4; ++i) {
    r.push_back({top,
                 Value::Record(
                     {{"department", Str(names[i])}, {"people", Ix(1, i + 1)}}),
                 std::nullopt});
  }
  return r;
}

ShreddedResult RunningR2() {
  auto row = [](int64_t dept, const char* name, int tag, int64_t pos) {
    return ShreddedRow{
        Flat(1, dept),
        Value::Record({{"name", Str(name)}, {"tasks", Ix(tag, pos)}}),
        std::nullopt};
  };
  return {row(1, "Bert", 2, 1), row(4, "Erik", 2, 2), row(4, "Fred", 2, 3),
          row(1, "Pat", 4, 1), row(4, "Sue", 4, 2)};
}

ShreddedResult RunningR3() {
  auto row = [](int tag, int64_t pos, const char* task) {
    return ShreddedRow{Flat(tag, pos), Str(task), std::nullopt};
  };
  return {row(2, 1, "build"), row(2, 2, "call"), row(2, 2, "enthuse"),
          row(2, 3, "call"),  row(4, 1, "buy"),  row(4, 2, "buy")};
}

ShQuery CanonicalVariables(const ShQuery& q) {
  return Renamer().Query(q, true);
}

GoldenCheck CheckGolden(const std::string& relative,
                        const std::string& actual) {
  std::filesystem::path path = SourcePath("tests/golden/" + relative);
  const char* update = std::getenv("SHREDQ_UPDATE_GOLDEN");
  if (update != nullptr && std::string(update) == "1") {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream(path, std::ios::binary) << actual;
    return {true, "updated " + path.string()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return {false, "missing golden file " + path.string()};
  std::string expected((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  if (expected == actual) return {true, ""};
  return {false, "golden mismatch for " + relative + "\n--- expected\n" +
                     expected + "\n--- actual\n" + actual};
}

}  // namespace shredq::testing
