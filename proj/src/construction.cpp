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

#include "infima/construction.hpp"

#include <deque>
#include <stdexcept>
#include <utility>

namespace infima {

namespace {

const RootedTree& standard_seven() {
  static const RootedTree t = parse_tree("[[*,*],[*,*]]");
  return t;
}

const RootedTree& variant_seven() {
  static const RootedTree t = parse_tree("[[*,*,*],*,*]");
  return t;
}

// Plane tree under construction; vertex 0 is the root.
class Arena {
 public:
  Arena() : kids_(1) {}

  std::size_t add_child(std::size_t parent) {
    kids_.emplace_back();
    kids_[parent].push_back(kids_.size() - 1);
    return kids_.size() - 1;
  }
  void add_leaves(std::size_t parent, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) add_child(parent);
  }
  void remove_last_child(std::size_t parent) { kids_[parent].pop_back(); }
  bool is_leaf(std::size_t v) const { return kids_[v].empty(); }
  const std::vector<std::size_t>& kids(std::size_t v) const {
    return kids_[v];
  }

  // Level order, left to right.
  std::vector<std::size_t> level_order() const {
    std::vector<std::size_t> out;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      out.push_back(v);
      for (std::size_t c : kids_[v]) queue.push_back(c);
    }
    return out;
  }

  // Vertices with at least one leaf child, in level order.
  std::vector<std::size_t> leaf_parents() const {
    std::vector<std::size_t> out;
    for (std::size_t v : level_order()) {
      for (std::size_t c : kids_[v]) {
        if (is_leaf(c)) {
          out.push_back(v);
          break;
        }
      }
    }
    return out;
  }

  // Removes one leaf child of v (the last one in stored order).
  void remove_leaf_child(std::size_t v) {
    auto& k = kids_[v];
    for (std::size_t i = k.size(); i-- > 0;) {
      if (is_leaf(k[i])) {
        k.erase(k.begin() + static_cast<std::ptrdiff_t>(i));
        return;
      }
    }
  }

  RootedTree build() const {
    const std::vector<std::size_t> order = level_order();
    std::vector<RootedTree> built(kids_.size());
    for (std::size_t i = order.size(); i-- > 0;) {
      const std::size_t v = order[i];
      std::vector<RootedTree> children;
      children.reserve(kids_[v].size());
      for (std::size_t c : kids_[v]) children.push_back(std::move(built[c]));
      built[v] = RootedTree(std::move(children));
    }
    return canonicalize(built[0]);
  }

 private:
  std::vector<std::vector<std::size_t>> kids_;
};

RootedTree build_standard(std::size_t n) {
  std::size_t h = 1;
  while (n > 5 * (std::size_t{1} << h) + 1) ++h;
  const std::size_t m = (2 * n + 7) / 10;
  const std::size_t half = std::size_t{1} << (h - 1);

  Arena arena;
  std::vector<std::size_t> level{0};
  for (std::size_t depth = 0; depth + 1 < h; ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t v : level) {
      next.push_back(arena.add_child(v));
      next.push_back(arena.add_child(v));
    }
    level = std::move(next);
  }
  for (std::size_t i = 0; i < level.size(); ++i) {
    if (i < m - half) {
      arena.add_leaves(arena.add_child(level[i]), 3);
      arena.add_leaves(arena.add_child(level[i]), 3);
    } else {
      arena.add_leaves(level[i], 3);
    }
  }

  if (n + 2 == 5 * m) {
    const std::size_t last = arena.level_order().back();
    for (std::size_t v : arena.level_order()) {
      const auto& k = arena.kids(v);
      if (!k.empty() && k.back() == last) {
        arena.remove_last_child(v);
        break;
      }
    }
  } else if (n + 3 == 5 * m) {
    const auto parents = arena.leaf_parents();
    arena.remove_leaf_child(parents[parents.size() - 1]);
    arena.remove_leaf_child(parents[parents.size() - 2]);
  } else if (n == 5 * m) {
    arena.add_child(arena.leaf_parents()[0]);
  } else if (n == 5 * m + 1) {
    const auto parents = arena.leaf_parents();
    arena.add_child(parents[0]);
    arena.add_child(parents[1]);
  }
  return arena.build();
}

RootedTree replace_sevens(const RootedTree& tree, const RootedTree& from,
                          const RootedTree& to) {
  return canonicalize(rebuild_bottom_up(
      tree,
      [&](const RootedTree& original, std::vector<RootedTree> kids) {
        if (original.order() == 7 && isomorphic(original, from)) return to;
        return RootedTree(std::move(kids));
      },
      [](const RootedTree& t) { return t.order() < 7; }));
}

}  // namespace

std::vector<RootedTree> construct_minimal(std::size_t n) {
  switch (n) {
    case 0:
      throw std::invalid_argument("construct_minimal: order must be positive");
    case 1:
      return {parse_tree("*")};
    case 2:
      return {parse_tree("[*]")};
    case 3:
      return {parse_tree("[*,*]")};
    case 4:
      return {parse_tree("[*,*,*]")};
    case 5:
      return {parse_tree("[*,*,*,*]")};
    case 6:
      return {parse_tree("[[*,*,*],*]"), parse_tree("[[*,*],*,*]")};
    default:
      break;
  }
  std::vector<RootedTree> out{build_standard(n)};
  if (n % 5 == 2) {
    out.push_back(replace_sevens(out.front(), standard_seven(),
                                 variant_seven()));
  }
  return out;
}

RootedTree to_standard_form(const RootedTree& tree) {
  return replace_sevens(tree, variant_seven(), standard_seven());
}

}  // namespace infima
