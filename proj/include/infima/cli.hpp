// Copyright 2026 The infima Authors. All Rights Reserved.
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infima::cli {

inline constexpr int kExitOk = 0;
/// A bound, sandwich or audit check failed or could not be decided.
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name.
///
///   count <tree> [--json]
///   oracle <tree> [--limit N] [--json]
///   search --max-n N [--mode exhaustive|pruned] [--audit] [--json]
///   construct --n N [--standard-form] [--json]
///   alpha --digits D [--json]
///   bounds --max-n N [--json]
///   ratio --max-n N [--csv PATH]
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace infima::cli
