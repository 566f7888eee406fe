// Copyright 2026 The boolham Authors
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
#include <string>
#include <vector>

namespace boolham {

/** Process exit codes of the command-line tool. */
enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 1,
  kExitCapExceeded = 2,
  kExitVerifyFailed = 3,
};

/**
 * Runs one command line (without the program name). Input path "-" reads
 * `in`; results go to `out`, diagnostics to `err`. Process-wide settings
 * changed by --dense-cap and --prune-eps are restored before returning.
 */
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace boolham
