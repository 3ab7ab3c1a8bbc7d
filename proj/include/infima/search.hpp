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
#include <functional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "infima/counting.hpp"
#include "infima/tree.hpp"

namespace infima {

/// Default largest order searched by full enumeration (32973 trees).
inline constexpr std::size_t kDefaultExhaustiveCap = 14;

/// Name of the environment variable overriding kDefaultExhaustiveCap.
inline constexpr const char* kExhaustiveCapEnv = "INFIMA_EXHAUSTIVE_CAP";

/// kDefaultExhaustiveCap, or the value of INFIMA_EXHAUSTIVE_CAP when set.
/// Throws std::invalid_argument for a malformed value.
std::size_t exhaustive_cap_from_env();

enum class SearchMode { kExhaustive, kPruned };

std::string_view to_string(SearchMode mode);
/// Accepts "exhaustive" or "pruned".
SearchMode parse_search_mode(std::string_view text);

/// Minimum count m_n for one order together with every tree attaining it.
struct MinimalRecord {
  std::size_t order = 0;
  BigInt min_count;
  /// Canonical, deduplicated, in canonical order.
  std::vector<RootedTree> minimal_trees;
};

struct SearchTable {
  SearchMode mode = SearchMode::kPruned;
  /// records[n - 1] is the record for order n.
  std::vector<MinimalRecord> records;

  std::size_t max_order() const { return records.size(); }
  /// Throws std::out_of_range when order n is not covered.
  const MinimalRecord& at(std::size_t n) const;
};

/// Raised when exhaustive and pruned search disagree.
class SearchMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Enumerates every unlabeled rooted tree of order n exactly once, in
/// canonical form and canonical order. Throws std::invalid_argument when n is
/// zero or above `cap`.
std::vector<RootedTree> generate_all_trees(
    std::size_t n, std::size_t cap = kDefaultExhaustiveCap);

/// Streaming form of generate_all_trees().
void for_each_tree(std::size_t n, std::size_t cap,
                   const std::function<void(const RootedTree&)>& visit);

/// Minimum of I over all trees of order n, keeping every argmin.
MinimalRecord find_minimal_exhaustive(std::size_t n,
                                      std::size_t cap = kDefaultExhaustiveCap);

/// Minimal trees of order n assembled from minimal branches in `table`.
/// For n >= 8 only two-branch roots are considered; below that every
/// partition of n - 1 into branch orders is tried. Needs records for all
/// orders below n; throws std::invalid_argument otherwise or when n < 2.
MinimalRecord find_minimal_pruned(std::size_t n, const SearchTable& table);

struct SearchOptions {
  SearchMode mode = SearchMode::kPruned;
  std::size_t exhaustive_cap = kDefaultExhaustiveCap;
  /// In pruned mode, compare orders up to min(14, cap) against full
  /// enumeration and throw SearchMismatch on any difference.
  bool cross_check = true;
};

/// Records for orders 1..max_n.
SearchTable search_table(std::size_t max_n, const SearchOptions& options = {});

/// True iff every order-7 branch is [[*,*],[*,*]].
bool is_standard_form(const RootedTree& tree);

/// Both records describe the same m_n and the same set of trees.
bool same_record(const MinimalRecord& a, const MinimalRecord& b);

}  // namespace infima
