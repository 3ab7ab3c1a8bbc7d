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

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>

#include "infima/tree.hpp"

namespace infima {

using BigInt = mpz_class;

/// Counts of nonempty infima-closed vertex sets of one tree.
struct CountProfile {
  BigInt i_total;         // all nonempty closed sets
  BigInt i_without_root;  // those avoiding the root
  BigInt i_with_root;     // those containing the root
  BigInt j_value;         // i_total + 2

  friend bool operator==(const CountProfile&, const CountProfile&) = default;
};

/// Exact count by the branch recursion
///   I0 = sum I(B_j),  I1 = prod (1 + I(B_j)),  I = I0 + I1.
CountProfile count_ics(const RootedTree& tree);

/// Memoizes count_ics on canonical serialization. Meant to live for one
/// search run; not thread-safe.
class CountCache {
 public:
  const CountProfile& profile(const RootedTree& tree);
  const BigInt& count(const RootedTree& tree) { return profile(tree).i_total; }
  std::size_t size() const { return memo_.size(); }

 private:
  std::unordered_map<std::string, CountProfile> memo_;
};

/// J([A,B]) = J(A) J(B) - 1. Both arguments must be at least 3, the J value
/// of a single vertex.
BigInt j_of_pair(const BigInt& j_a, const BigInt& j_b);

inline constexpr std::size_t kDefaultOracleLimit = 20;

/// Brute force: enumerates all nonempty vertex subsets and keeps those closed
/// under pairwise infimum. Throws std::invalid_argument above `max_order`
/// (which itself may not exceed 62).
BigInt oracle_count(const RootedTree& tree,
                    std::size_t max_order = kDefaultOracleLimit);

/// Number of infima-closed sets containing every vertex of `required`
/// (duplicates are ignored). With an empty requirement this is I(tree).
BigInt count_required(const RootedTree& tree,
                      std::span<const VertexId> required);

}  // namespace infima
