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

#include "infima/counting.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace infima {

namespace {

CountProfile make_profile(BigInt without_root, BigInt with_root) {
  CountProfile p;
  p.i_without_root = std::move(without_root);
  p.i_with_root = std::move(with_root);
  p.i_total = p.i_without_root + p.i_with_root;
  p.j_value = p.i_total + 2;
  return p;
}

BigInt count_required_rec(const RootedTree& tree,
                          const std::vector<VertexId>& required) {
  if (required.empty()) return count_ics(tree).i_total;

  const auto kids = tree.children();
  bool root_required = false;
  std::map<std::size_t, std::vector<VertexId>> buckets;
  for (const auto& v : required) {
    if (v.is_root()) {
      root_required = true;
      continue;
    }
    VertexId tail;
    tail.path.assign(v.path.begin() + 1, v.path.end());
    buckets[v.path.front()].push_back(std::move(tail));
  }

  // Sets containing the root: any closed set (possibly empty) per free
  // branch, and a nonempty one covering the requirement per constrained one.
  std::map<std::size_t, BigInt> constrained;
  BigInt with_root = 1;
  for (std::size_t j = 0; j < kids.size(); ++j) {
    auto it = buckets.find(j);
    if (it == buckets.end()) {
      with_root *= count_ics(kids[j]).i_total + 1;
    } else {
      BigInt c = count_required_rec(kids[j], it->second);
      with_root *= c;
      constrained.emplace(j, std::move(c));
    }
  }
  if (root_required) return with_root;

  // A root-avoiding closed set lies inside a single branch.
  if (constrained.size() == 1) return with_root + constrained.begin()->second;
  return with_root;
}

}  // namespace

CountProfile count_ics(const RootedTree& tree) {
  struct Frame {
    const RootedTree* tree;
    std::size_t next;
    BigInt sum;
    BigInt product;
  };
  std::vector<Frame> stack;
  stack.push_back({&tree, 0, 0, 1});
  CountProfile result;

  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto kids = top.tree->children();
    if (top.next < kids.size()) {
      const RootedTree* kid = &kids[top.next++];
      stack.push_back({kid, 0, 0, 1});
      continue;
    }
    // A leaf has sum 0 and empty product 1: I0 = 0, I1 = 1.
    BigInt without_root = std::move(top.sum);
    BigInt with_root = std::move(top.product);
    stack.pop_back();
    if (stack.empty()) {
      result = make_profile(std::move(without_root), std::move(with_root));
    } else {
      const BigInt total = without_root + with_root;
      Frame& parent = stack.back();
      parent.sum += total;
      parent.product *= total + 1;
    }
  }
  return result;
}

const CountProfile& CountCache::profile(const RootedTree& tree) {
  std::string key = serialize(tree);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  BigInt sum = 0;
  BigInt product = 1;
  for (const auto& kid : tree.children()) {
    const BigInt i = profile(kid).i_total;
    sum += i;
    product *= i + 1;
  }
  auto [it, inserted] = memo_.emplace(
      std::move(key), make_profile(std::move(sum), std::move(product)));
  return it->second;
}

BigInt j_of_pair(const BigInt& j_a, const BigInt& j_b) {
  if (j_a < 3 || j_b < 3) {
    throw std::invalid_argument(
        "j_of_pair: J values are at least 3 (J of a single vertex)");
  }
  return j_a * j_b - 1;
}

BigInt oracle_count(const RootedTree& tree, std::size_t max_order) {
  if (max_order > 62) {
    throw std::invalid_argument("oracle_count: limit may not exceed 62");
  }
  const std::size_t n = tree.order();
  if (n > max_order) {
    throw std::invalid_argument("oracle_count: order " + std::to_string(n) +
                                " exceeds the limit " +
                                std::to_string(max_order));
  }

  const std::vector<VertexId> vertices = preorder_vertices(tree);
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(vertices[i], i);

  std::vector<std::vector<std::uint8_t>> inf(n, std::vector<std::uint8_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto k = static_cast<std::uint8_t>(
          index.at(infimum(tree, vertices[i], vertices[j])));
      inf[i][j] = k;
      inf[j][i] = k;
    }
  }

  std::uint64_t closed = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    bool ok = true;
    for (std::uint64_t a = mask; a != 0 && ok; a &= a - 1) {
      const int i = std::countr_zero(a);
      for (std::uint64_t b = a & (a - 1); b != 0; b &= b - 1) {
        const int j = std::countr_zero(b);
        if (((mask >> inf[i][j]) & 1U) == 0) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++closed;
  }
  return BigInt(static_cast<unsigned long>(closed));
}

BigInt count_required(const RootedTree& tree,
                      std::span<const VertexId> required) {
  for (const auto& v : required) branch_at(tree, v);
  std::vector<VertexId> unique(required.begin(), required.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  return count_required_rec(tree, unique);
}

}  // namespace infima
