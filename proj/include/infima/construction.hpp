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

#include <cstddef>
#include <vector>

#include "infima/tree.hpp"

namespace infima {

/// The minimal trees of order n, built directly without search. The tree in
/// standard form comes first; for n = 6, n = 7 and every n > 6 with
/// n % 5 == 2 a second tree follows. All results are canonical.
/// Throws std::invalid_argument for n == 0.
std::vector<RootedTree> construct_minimal(std::size_t n);

/// Rewrites every branch [[*,*,*],*,*] as [[*,*],[*,*]]. Both have
/// I = 61, so the count of the whole tree is unchanged. Canonical result.
RootedTree to_standard_form(const RootedTree& tree);

}  // namespace infima
