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

#ifndef SHREDQ_AST_PRINTER_H_
#define SHREDQ_AST_PRINTER_H_

#include <string>

#include "shredq/ast/query.h"
#include "shredq/ast/term.h"

namespace shredq {

// Concrete syntax accepted by the parser; ParseTerm(PrintTerm(t)) == t.
std::string PrintTerm(const Term& t);

std::string PrintExpr(const Expr& e);

// One comprehension per line, joined by "++". Tags print as return^a.
std::string PrintNf(const NfQuery& q);
std::string PrintSh(const ShQuery& q);
std::string PrintLi(const LiQuery& q);

}  // namespace shredq

#endif  // SHREDQ_AST_PRINTER_H_
