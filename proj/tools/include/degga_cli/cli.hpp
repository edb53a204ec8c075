// Copyright 2026 The degga Authors
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

namespace degga::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,  ///< bad flags, unreadable or unwritable files
  kParse = 2,
  kValidation = 3,
  kUnsupported = 4,
};

/// Directory used for outputs when --out is not given. Unset means stdout.
inline constexpr const char* kOutputDirEnv = "DEGGA_OUTPUT_DIR";

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace degga::cli
