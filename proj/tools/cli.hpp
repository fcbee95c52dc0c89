// Copyright 2026 The gmwis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <iosfwd>

namespace gmwis {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitWitness = 1,
  kExitUsage = 2,
  kExitRejected = 3,
};

/// Runs one command line. Results go to out, diagnostics to err.
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gmwis
