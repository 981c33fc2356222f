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

#include "shredq/frontend/parser.h"

#include <cctype>
#include <charconv>
#include <set>

#include "shredq/ast/error.h"

namespace shredq {

namespace {

enum class Tok {
  kEnd,
  kIdent,
  kInt,
  kString,
  kKeyword,
  kSymbol,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  int64_t int_value = 0;
  SourcePos pos;
};

const std::set<std::string>& Keywords() {
  static const std::set<std::string> kKeywords = {
      "for", "where", "return", "if",    "then",  "else",
      "not", "true",  "false",  "table", "empty", "fun",
  };
  return kKeywords;
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (true) {
      SkipSpaceAndComments();
      Token t;
      t.pos = {line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
          Advance();
        }
        t.text = text_.substr(start, pos_ - start);
        t.kind = Keywords().count(t.text) ? Tok::kKeyword : Tok::kIdent;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          Advance();
        }
        t.kind = Tok::kInt;
        t.text = text_.substr(start, pos_ - start);
        auto [ptr, ec] = std::from_chars(
            t.text.data(), t.text.data() + t.text.size(), t.int_value);
        if (ec != std::errc()) {
          throw SyntaxError(t.pos.line, t.pos.column,
                            "integer literal out of range: " + t.text);
        }
      } else if (c == '"') {
        t.kind = Tok::kString;
        t.text = LexString(t.pos);
      } else {
        t.kind = Tok::kSymbol;
        t.text = LexSymbol(t.pos);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipSpaceAndComments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else if (c == '-' && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == '-') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
      } else {
        return;
      }
    }
  }

  std::string LexString(SourcePos start) {
    Advance();  // opening quote
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) {
        throw SyntaxError(start.line, start.column, "unterminated string");
      }
      char c = text_[pos_];
      Advance();
      if (c == '"') return out;
      if (c == '\\') {
        if (pos_ >= text_.size()) {
          throw SyntaxError(start.line, start.column, "unterminated string");
        }
        char e = text_[pos_];
        Advance();
        switch (e) {
          case 'n':
            out += '\n';
            break;
          case 't':
            out += '\t';
            break;
          case '"':
            out += '"';
            break;
          case '\\':
            out += '\\';
            break;
          default:
            throw SyntaxError(line_, column_,
                              std::string("unknown escape \\") + e);
        }
      } else {
        out += c;
      }
    }
  }

  std::string LexSymbol(SourcePos start) {
    static const char* kSymbols[] = {
        "<-", "->", "<>", "<=", ">=", "&&", "||", "++", "(", ")", "{",  "}",
        "[",  "]",  ",",  ".",  "=",  "<",  ">",  "+",  "-", "*", "\\", ";"};
    for (const char* s : kSymbols) {
      std::string_view sym(s);
      if (text_.compare(pos_, sym.size(), sym) == 0) {
        for (size_t i = 0; i < sym.size(); ++i) Advance();
        return std::string(sym);
      }
    }
    throw SyntaxError(
        start.line, start.column,
        std::string("unexpected character '") + text_[pos_] + "'");
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  SourceQuery Program() {
    SourceQuery q;
    while (IsKeyword("fun")) q.bindings.push_back(ParseBinding());
    q.main = Expr();
    ExpectEnd();
    return q;
  }

  Term Single() {
    Term t = Expr();
    ExpectEnd();
    return t;
  }

 private:
  const Token& Peek(size_t ahead = 0) const {
    size_t i = std::min(idx_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  Token Next() {
    Token t = Peek();
    if (idx_ < toks_.size() - 1) ++idx_;
    return t;
  }
  bool IsKeyword(const char* k, size_t ahead = 0) const {
    return Peek(ahead).kind == Tok::kKeyword && Peek(ahead).text == k;
  }
  bool IsSymbol(const char* s, size_t ahead = 0) const {
    return Peek(ahead).kind == Tok::kSymbol && Peek(ahead).text == s;
  }

  [[noreturn]] void Error(const Token& t, const std::string& msg) const {
    std::string found =
        t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(t.pos.line, t.pos.column, msg + ", found " + found);
  }

  void ExpectSymbol(const char* s) {
    if (!IsSymbol(s)) Error(Peek(), std::string("expected '") + s + "'");
    Next();
  }
  void ExpectKeyword(const char* k) {
    if (!IsKeyword(k)) Error(Peek(), std::string("expected '") + k + "'");
    Next();
  }
  std::string ExpectIdent() {
    if (Peek().kind != Tok::kIdent) Error(Peek(), "expected an identifier");
    return Next().text;
  }
  void ExpectEnd() {
    if (Peek().kind != Tok::kEnd) Error(Peek(), "expected end of input");
  }

  Binding ParseBinding() {
    Binding b;
    b.pos = Peek().pos;
    ExpectKeyword("fun");
    b.name = ExpectIdent();
    ExpectSymbol("(");
    if (!IsSymbol(")")) {
      b.params.push_back(ExpectIdent());
      while (IsSymbol(",")) {
        Next();
        b.params.push_back(ExpectIdent());
      }
    }
    ExpectSymbol(")");
    ExpectSymbol("=");
    b.body = Expr();
    if (IsSymbol(";")) Next();
    return b;
  }

  Term Expr() {
    const Token& t = Peek();
    SourcePos pos = t.pos;
    if (IsKeyword("if")) {
      Next();
      Term c = Expr();
      ExpectKeyword("then");
      Term a = Expr();
      ExpectKeyword("else");
      Term b = Expr();
      return Term::If(c, a, b, pos);
    }
    if (IsKeyword("for")) return ParseFor();
    if (IsKeyword("return")) {
      Next();
      return Term::Singleton(Expr(), pos);
    }
    if (IsSymbol("\\")) {
      Next();
      std::vector<std::string> params;
      params.push_back(ExpectIdent());
      while (Peek().kind == Tok::kIdent) params.push_back(Next().text);
      ExpectSymbol("->");
      Term body = Expr();
      for (auto it = params.rbegin(); it != params.rend(); ++it) {
        body = Term::Lam(*it, body, pos);
      }
      return body;
    }
    return Union();
  }

  Term ParseFor() {
    SourcePos pos = Peek().pos;
    ExpectKeyword("for");
    ExpectSymbol("(");
    std::vector<std::pair<std::string, Term>> gens;
    do {
      if (!gens.empty()) Next();  // ','
      std::string var = ExpectIdent();
      ExpectSymbol("<-");
      gens.emplace_back(var, Expr());
    } while (IsSymbol(","));
    ExpectSymbol(")");
    std::optional<Term> cond;
    if (IsKeyword("where")) {
      Next();
      cond = Or();
    }
    Term body = Expr();
    if (cond) body = Term::If(*cond, body, Term::Empty(pos), pos);
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
      body = Term::For(it->first, it->second, body, pos);
    }
    return body;
  }

  Term Union() {
    Term t = Or();
    while (IsSymbol("++")) {
      SourcePos pos = Next().pos;
      t = Term::Union(t, Or(), pos);
    }
    return t;
  }

  Term Or() {
    Term t = And();
    while (IsSymbol("||")) {
      SourcePos pos = Next().pos;
      t = Term::Prim(PrimOp::kOr, {t, And()}, pos);
    }
    return t;
  }

  Term And() {
    Term t = Not();
    while (IsSymbol("&&")) {
      SourcePos pos = Next().pos;
      t = Term::Prim(PrimOp::kAnd, {t, Not()}, pos);
    }
    return t;
  }

  Term Not() {
    if (IsKeyword("not")) {
      SourcePos pos = Next().pos;
      return Term::Prim(PrimOp::kNot, {Not()}, pos);
    }
    return Compare();
  }

  Term Compare() {
    Term t = Additive();
    static const std::pair<const char*, PrimOp> kOps[] = {
        {"=", PrimOp::kEq}, {"<>", PrimOp::kNe}, {"<", PrimOp::kLt},
        {">", PrimOp::kGt}, {"<=", PrimOp::kLe}, {">=", PrimOp::kGe}};
    for (const auto& [sym, op] : kOps) {
      if (IsSymbol(sym)) {
        SourcePos pos = Next().pos;
        Term rhs = Additive();
        for (const auto& [sym2, op2] : kOps) {
          if (IsSymbol(sym2)) Error(Peek(), "comparisons do not chain");
        }
        return Term::Prim(op, {t, rhs}, pos);
      }
    }
    return t;
  }

  Term Additive() {
    Term t = Multiplicative();
    while (IsSymbol("+") || IsSymbol("-")) {
      Token op = Next();
      t = Term::Prim(op.text == "+" ? PrimOp::kAdd : PrimOp::kSub,
                     {t, Multiplicative()}, op.pos);
    }
    return t;
  }

  Term Multiplicative() {
    Term t = Postfix();
    while (IsSymbol("*")) {
      SourcePos pos = Next().pos;
      t = Term::Prim(PrimOp::kMul, {t, Postfix()}, pos);
    }
    return t;
  }

  Term Postfix() {
    Term t = Primary();
    while (true) {
      if (IsSymbol(".")) {
        SourcePos pos = Next().pos;
        const Token& l = Peek();
        if (l.kind == Tok::kIdent) {
          t = Term::Project(t, Next().text, pos);
        } else if (l.kind == Tok::kInt && l.int_value > 0) {
          t = Term::Project(t, TupleLabel(static_cast<int>(Next().int_value)),
                            pos);
        } else {
          Error(l, "expected a label after '.'");
        }
      } else if (IsSymbol("(")) {
        SourcePos pos = Next().pos;
        do {
          if (IsSymbol(",")) Next();
          t = Term::App(t, Expr(), pos);
        } while (IsSymbol(","));
        ExpectSymbol(")");
      } else {
        return t;
      }
    }
  }

  Term Primary() {
    const Token& t = Peek();
    SourcePos pos = t.pos;
    switch (t.kind) {
      case Tok::kInt:
        return Term::Const(Literal(Next().int_value), pos);
      case Tok::kString:
        return Term::Const(Literal(Next().text), pos);
      case Tok::kIdent:
        return Term::Var(Next().text, pos);
      case Tok::kKeyword:
        if (IsKeyword("true") || IsKeyword("false")) {
          return Term::Const(Literal(Next().text == "true"), pos);
        }
        if (IsKeyword("table")) {
          Next();
          return Term::Table(ExpectIdent(), pos);
        }
        if (IsKeyword("empty")) {
          Next();
          ExpectSymbol("(");
          Term bag = Expr();
          ExpectSymbol(")");
          return Term::IsEmpty(bag, pos);
        }
        if (IsKeyword("for") || IsKeyword("if") || IsKeyword("return")) {
          return Expr();
        }
        Error(t, "unexpected keyword");
      case Tok::kSymbol:
        if (IsSymbol("-") && Peek(1).kind == Tok::kInt) {
          Next();
          return Term::Const(Literal(-Next().int_value), pos);
        }
        if (IsSymbol("[")) {
          Next();
          ExpectSymbol("]");
          return Term::Empty(pos);
        }
        if (IsSymbol("{")) return ParseRecord();
        if (IsSymbol("(")) return ParseParens();
        if (IsSymbol("\\")) return Expr();
        Error(t, "unexpected symbol");
      case Tok::kEnd:
        Error(t, "unexpected end of input");
    }
    Error(t, "unexpected token");
  }

  Term ParseRecord() {
    SourcePos pos = Peek().pos;
    ExpectSymbol("{");
    std::vector<std::string> labels;
    std::vector<Term> fields;
    if (!IsSymbol("}")) {
      do {
        if (!labels.empty()) Next();  // ','
        const Token& l = Peek();
        std::string label = ExpectIdent();
        for (const auto& seen : labels) {
          if (seen == label) {
            throw SyntaxError(l.pos.line, l.pos.column,
                              "duplicate label '" + label + "'");
          }
        }
        ExpectSymbol("=");
        labels.push_back(label);
        fields.push_back(Expr());
      } while (IsSymbol(","));
    }
    ExpectSymbol("}");
    return Term::Record(std::move(labels), std::move(fields), pos);
  }

  Term ParseParens() {
    SourcePos pos = Peek().pos;
    ExpectSymbol("(");
    Term first = Expr();
    if (IsSymbol(")")) {
      Next();
      return first;
    }
    std::vector<Term> comps{first};
    while (IsSymbol(",")) {
      Next();
      if (IsSymbol(")")) break;  // trailing comma: one-element tuple
      comps.push_back(Expr());
    }
    ExpectSymbol(")");
    return Term::Tuple(std::move(comps), pos);
  }

  std::vector<Token> toks_;
  size_t idx_ = 0;
};

}  // namespace

SourceQuery ParseQuery(const std::string& text) {
  return Parser(Lexer(text).Run()).Program();
}

Term ParseTerm(const std::string& text) {
  return Parser(Lexer(text).Run()).Single();
}

}  // namespace shredq
