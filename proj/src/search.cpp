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

#include "infima/search.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>

namespace infima {

namespace {

void require_within_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n == 0) {
    throw std::invalid_argument(std::string(what) +
                                ": order must be positive");
  }
  if (n > cap) {
    throw std::invalid_argument(std::string(what) + ": order " +
                                std::to_string(n) +
                                " exceeds the exhaustive cap " +
                                std::to_string(cap));
  }
}

// All canonical trees of each order, built order by order from multisets of
// smaller trees.
class TreeCatalog {
 public:
  const std::vector<RootedTree>& trees(std::size_t n) {
    while (by_order_.size() < n) extend();
    return by_order_[n - 1];
  }

  // Visits each tree of order n without storing it. Orders below n must be
  // present already.
  void visit_order(std::size_t n,
                   const std::function<void(const RootedTree&)>& visit) {
    if (n == 1) {
      visit(RootedTree());
      return;
    }
    trees(n - 1);
    // Pool of candidate branches in canonical order: larger orders first.
    std::vector<const RootedTree*> pool;
    std::vector<std::size_t> first_of_order(n, 0);
    for (std::size_t k = n - 1; k >= 1; --k) {
      first_of_order[k] = pool.size();
      for (const auto& t : by_order_[k - 1]) pool.push_back(&t);
    }
    std::vector<RootedTree> branches;
    // Non-decreasing pool indices give each multiset once, already sorted.
    std::function<void(std::size_t, std::size_t)> pick =
        [&](std::size_t from, std::size_t remaining) {
          if (remaining == 0) {
            visit(RootedTree(branches));
            return;
          }
          for (std::size_t i = std::max(from, first_of_order[remaining]);
               i < pool.size(); ++i) {
            branches.push_back(*pool[i]);
            pick(i, remaining - pool[i]->order());
            branches.pop_back();
          }
        };
    pick(0, n - 1);
  }

 private:
  void extend() {
    const std::size_t n = by_order_.size() + 1;
    std::vector<RootedTree> out;
    visit_order(n, [&out](const RootedTree& t) { out.push_back(t); });
    sort_canonical(out);
    by_order_.push_back(std::move(out));
  }

  std::vector<std::vector<RootedTree>> by_order_;
};

class ExhaustiveSearcher {
 public:
  MinimalRecord find(std::size_t n) {
    MinimalRecord record;
    record.order = n;
    bool first = true;
    catalog_.visit_order(n, [&](const RootedTree& t) {
      const BigInt& count = cache_.count(t);
      if (first || count < record.min_count) {
        first = false;
        record.min_count = count;
        record.minimal_trees.clear();
        record.minimal_trees.push_back(t);
      } else if (count == record.min_count) {
        record.minimal_trees.push_back(t);
      }
    });
    sort_canonical(record.minimal_trees);
    return record;
  }

 private:
  TreeCatalog catalog_;
  CountCache cache_;
};

// Non-increasing partitions of `total` into parts of size at most `largest`.
void partitions(std::size_t total, std::size_t largest,
                std::vector<std::size_t>& current,
                std::vector<std::vector<std::size_t>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t part = std::min(total, largest); part >= 1; --part) {
    current.push_back(part);
    partitions(total - part, part, current, out);
    current.pop_back();
  }
}

// Every tree whose root branches have the given orders and are minimal.
void assemble(const SearchTable& table, const std::vector<std::size_t>& parts,
              std::vector<RootedTree>& out) {
  std::vector<RootedTree> branches;
  std::function<void(std::size_t)> choose = [&](std::size_t slot) {
    if (slot == parts.size()) {
      out.push_back(canonicalize(RootedTree(branches)));
      return;
    }
    for (const auto& t : table.at(parts[slot]).minimal_trees) {
      branches.push_back(t);
      choose(slot + 1);
      branches.pop_back();
    }
  };
  choose(0);
}

void dedupe_canonical(std::vector<RootedTree>& trees) {
  sort_canonical(trees);
  trees.erase(std::unique(trees.begin(), trees.end()), trees.end());
}

}  // namespace

std::size_t exhaustive_cap_from_env() {
  const char* value = std::getenv(kExhaustiveCapEnv);
  if (value == nullptr || *value == '\0') return kDefaultExhaustiveCap;
  const std::string_view text(value);
  std::size_t cap = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || ptr != text.data() + text.size() || cap == 0) {
    throw std::invalid_argument(std::string(kExhaustiveCapEnv) +
                                " must be a positive integer, got '" +
                                std::string(text) + "'");
  }
  return cap;
}

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::kExhaustive ? "exhaustive" : "pruned";
}

SearchMode parse_search_mode(std::string_view text) {
  if (text == "exhaustive") return SearchMode::kExhaustive;
  if (text == "pruned") return SearchMode::kPruned;
  throw std::invalid_argument("unknown search mode '" + std::string(text) +
                              "' (expected exhaustive or pruned)");
}

const MinimalRecord& SearchTable::at(std::size_t n) const {
  if (n == 0 || n > records.size()) {
    throw std::out_of_range("search table has no record for order " +
                            std::to_string(n));
  }
  return records[n - 1];
}

std::vector<RootedTree> generate_all_trees(std::size_t n, std::size_t cap) {
  require_within_cap(n, cap, "generate_all_trees");
  TreeCatalog catalog;
  return catalog.trees(n);
}

void for_each_tree(std::size_t n, std::size_t cap,
                   const std::function<void(const RootedTree&)>& visit) {
  require_within_cap(n, cap, "for_each_tree");
  TreeCatalog catalog;
  catalog.visit_order(n, visit);
}

MinimalRecord find_minimal_exhaustive(std::size_t n, std::size_t cap) {
  require_within_cap(n, cap, "find_minimal_exhaustive");
  ExhaustiveSearcher searcher;
  return searcher.find(n);
}

MinimalRecord find_minimal_pruned(std::size_t n, const SearchTable& table) {
  if (n < 2) {
    throw std::invalid_argument("find_minimal_pruned: order must be >= 2");
  }
  if (table.max_order() < n - 1) {
    throw std::invalid_argument(
        "find_minimal_pruned: table must cover every order below " +
        std::to_string(n));
  }

  std::vector<std::vector<std::size_t>> candidates;
  if (n >= 8) {
    for (std::size_t big = n - 2; 2 * big >= n - 1; --big) {
      candidates.push_back({big, n - 1 - big});
    }
  } else {
    std::vector<std::size_t> current;
    partitions(n - 1, n - 1, current, candidates);
  }

  MinimalRecord record;
  record.order = n;
  std::vector<const std::vector<std::size_t>*> best;
  for (const auto& parts : candidates) {
    BigInt sum = 0;
    BigInt product = 1;
    for (auto p : parts) {
      const BigInt& m = table.at(p).min_count;
      sum += m;
      product *= m + 1;
    }
    const BigInt value = sum + product;
    if (best.empty() || value < record.min_count) {
      record.min_count = value;
      best.assign({&parts});
    } else if (value == record.min_count) {
      best.push_back(&parts);
    }
  }

  for (const auto* parts : best) assemble(table, *parts, record.minimal_trees);
  dedupe_canonical(record.minimal_trees);
  return record;
}

SearchTable search_table(std::size_t max_n, const SearchOptions& options) {
  if (max_n == 0) {
    throw std::invalid_argument("search_table: max_n must be positive");
  }
  SearchTable table;
  table.mode = options.mode;
  table.records.reserve(max_n);

  if (options.mode == SearchMode::kExhaustive) {
    require_within_cap(max_n, options.exhaustive_cap, "search_table");
    ExhaustiveSearcher searcher;
    for (std::size_t n = 1; n <= max_n; ++n) {
      table.records.push_back(searcher.find(n));
    }
    return table;
  }

  table.records.push_back({1, 1, {RootedTree()}});
  for (std::size_t n = 2; n <= max_n; ++n) {
    table.records.push_back(find_minimal_pruned(n, table));
  }

  if (options.cross_check) {
    const std::size_t limit =
        std::min({max_n, options.exhaustive_cap, kDefaultExhaustiveCap});
    ExhaustiveSearcher searcher;
    for (std::size_t n = 1; n <= limit; ++n) {
      if (!same_record(searcher.find(n), table.at(n))) {
        throw SearchMismatch("pruned and exhaustive search disagree at order " +
                             std::to_string(n));
      }
    }
  }
  return table;
}

bool is_standard_form(const RootedTree& tree) {
  static const RootedTree kStandardSeven = parse_tree("[[*,*],[*,*]]");
  std::vector<const RootedTree*> stack{&tree};
  while (!stack.empty()) {
    const RootedTree* t = stack.back();
    stack.pop_back();
    if (t->order() < 7) continue;
    if (t->order() == 7) {
      if (!isomorphic(*t, kStandardSeven)) return false;
      continue;
    }
    for (const auto& kid : t->children()) stack.push_back(&kid);
  }
  return true;
}

bool same_record(const MinimalRecord& a, const MinimalRecord& b) {
  if (a.order != b.order || a.min_count != b.min_count ||
      a.minimal_trees.size() != b.minimal_trees.size()) {
    return false;
  }
  auto x = a.minimal_trees;
  auto y = b.minimal_trees;
  sort_canonical(x);
  sort_canonical(y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!isomorphic(x[i], y[i])) return false;
  }
  return true;
}

}  // namespace infima
