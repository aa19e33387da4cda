// Copyright 2026 The qca Authors
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

#ifndef QCA_TOOLS_CLI_H
#define QCA_TOOLS_CLI_H

#include <ostream>

namespace qca {

/// Entry point of the `qca` tool. Exit codes: 0 pass, 1 property violated,
/// 2 malformed input or usage. Every path writes a JSON document.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qca

#endif
