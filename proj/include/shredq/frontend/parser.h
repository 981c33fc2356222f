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

// Concrete syntax:
//
//   program  ::= binding* expr
//   binding  ::= 'fun' name '(' name, ... ')' '=' expr [';']
//   expr     ::= 'for' '(' x '<-' expr, ... ')' ['where' cond] expr
//              | 'if' expr 'then' expr 'else' expr
//              | 'return' expr | '\' x ... '->' expr | e '++' e
//              | e '||' e | e '&&' e | 'not' e | e cmp e | e ('+'|'-'|'*') e
//              | e '.' label | e '.' k | e '(' expr, ... ')'
//              | '{' l '=' expr, ... '}' | '(' expr, ... ')' | '[]'
//              | 'empty' '(' expr ')' | 'table' name | name | literal
//
// `where c e` abbreviates `if c then e else []`. Multiple generators nest.
// Comments run from `--` to the end of the line.

#ifndef SHREDQ_FRONTEND_PARSER_H_
#define SHREDQ_FRONTEND_PARSER_H_

#include <string>
#include <vector>

#include "shredq/ast/term.h"

namespace shredq {

struct Binding {
  std::string name;
  std::vector<std::string> params;
  Term body;
  SourcePos pos;
};

struct SourceQuery {
  std::vector<Binding> bindings;
  Term main;
};

// Throws SyntaxError.
SourceQuery ParseQuery(const std::string& text);
// A single expression without bindings.
Term ParseTerm(const std::string& text);

}  // namespace shredq

#endif  // SHREDQ_FRONTEND_PARSER_H_
