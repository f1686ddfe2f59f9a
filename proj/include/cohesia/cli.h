// Copyright 2026 The Cohesia Authors.
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

#ifndef COHESIA_CLI_H_
#define COHESIA_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace cohesia::cli {

enum ExitCode {
  kExitOk = 0,
  kExitUsage = 1,
  kExitUnsupportedProfile = 2,
  kExitInputFailure = 3,
};

// Runs one command line (without the program name). Documents are processed
// independently: a failing document is reported on `err` and skipped, and
// the run then exits with kExitInputFailure.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cohesia::cli

#endif  // COHESIA_CLI_H_
