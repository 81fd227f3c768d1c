// Copyright 2026 The liectl Authors
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

#include <ostream>
#include <string>
#include <vector>

namespace liectl::cli {

// Entry point behind the liectl binary. args excludes the program name.
// Exit codes: 0 success, 1 internal failure, 2 input error, 3 operation
// precondition violated.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liectl::cli
