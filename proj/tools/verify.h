// Copyright 2026 The qspoof Authors
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

#ifndef QSPOOF_TOOLS_VERIFY_H
#define QSPOOF_TOOLS_VERIFY_H

#include <string>
#include <vector>

namespace qspoof::tools {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Closed forms against their independent number-basis / determinant oracles.
std::vector<CheckResult> run_oracle_suites();

}  // namespace qspoof::tools

#endif  // QSPOOF_TOOLS_VERIFY_H
