// Copyright 2026 The bfcurve Authors.
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

#ifndef BFCURVE_TOOLS_CLI_H_
#define BFCURVE_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace bfcurve::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvariantViolation = 2,
};

// Runs one subcommand (field, spectrum, curve, xalpha, survey, bounds, apn).
// Reports go to `out`, diagnostics to `err`. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bfcurve::cli

#endif  // BFCURVE_TOOLS_CLI_H_
