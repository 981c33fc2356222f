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

#ifndef SHREDQ_CLI_COMMANDS_H_
#define SHREDQ_CLI_COMMANDS_H_

#include <ostream>

#include "shredq/ast/error.h"

namespace shredq {

// Process exit codes of the command line tool.
enum ExitCode {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidInput = 2,
  kExitEquivalenceFailure = 3,
  kExitDatabase = 4,
};

int ExitCodeFor(ErrorCode code);

// Entry point of the command line tool: normalize, shred, compile, run,
// check and gen-data.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace shredq

#endif  // SHREDQ_CLI_COMMANDS_H_
