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

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace infima {

/// Unlabeled rooted tree.
///
/// A tree is an immutable value: a root together with an ordered list of
/// branches. Order and height are computed once at construction. Branches are
/// shared between trees, so copies are cheap.
///
/// The stored child order is kept exactly as given; trees produced by
/// parse_tree(), canonicalize() and the search routines are always canonical:
/// children sorted by decreasing order, ties broken by the lexicographically
/// larger serialization first. Two trees are isomorphic iff their canonical
/// forms are equal.
class RootedTree {
 public:
  /// The single-vertex tree.
  RootedTree();

  /// A root whose branches are `children`, in the given order.
  explicit RootedTree(std::vector<RootedTree> children);

  static RootedTree leaf() { return RootedTree(); }
  /// Path on n vertices rooted at one end.
  static RootedTree path(std::size_t n);
  /// Star on n vertices rooted at its centre.
  static RootedTree star(std::size_t n);

  std::span<const RootedTree> children() const;
  std::size_t child_count() const { return children().size(); }
  bool is_leaf() const { return children().empty(); }

  /// Number of vertices.
  std::size_t order() const;
  /// Maximum root-to-leaf distance.
  std::size_t height() const;
  /// True when every child list along the tree is in canonical order.
  bool is_canonical() const;

  /// Plane equality: same shape with the same stored child order.
  friend bool operator==(const RootedTree& a, const RootedTree& b);

 private:
  struct Node;
  std::shared_ptr<Node> node_;

  friend struct NodeAccess;
};

/// Address of a vertex: child indices from the root (empty path = root).
struct VertexId {
  std::vector<std::size_t> path;

  static VertexId root() { return {}; }
  VertexId child(std::size_t index) const;
  VertexId parent() const;
  std::size_t depth() const { return path.size(); }
  bool is_root() const { return path.empty(); }
  /// True if this vertex lies on the path from the root to `other`
  /// (inclusive).
  bool is_ancestor_of(const VertexId& other) const;

  /// "/" for the root, otherwise "/i/j/...".
  std::string to_string() const;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  /// Byte offset into the input where the problem was detected.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class InvalidVertex : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Parses the bracket notation `tree := "*" | "[" tree ("," tree)* "]"`.
/// Whitespace is ignored. The result is canonical.
RootedTree parse_tree(std::string_view text);

/// Canonical bracket serialization (children emitted in canonical order).
std::string serialize(const RootedTree& tree);

RootedTree canonicalize(const RootedTree& tree);

/// Canonical total order on trees: negative when `a` sorts before `b`
/// (larger order first, then larger serialization first).
std::strong_ordering compare_canonical(const RootedTree& a,
                                       const RootedTree& b);

inline bool canonical_before(const RootedTree& a, const RootedTree& b) {
  return compare_canonical(a, b) < 0;
}

bool isomorphic(const RootedTree& a, const RootedTree& b);

/// Sorts a list of canonical trees into canonical order.
void sort_canonical(std::vector<RootedTree>& trees);

bool is_valid_vertex(const RootedTree& tree, const VertexId& v);

/// The branch rooted at `v`. Throws InvalidVertex.
const RootedTree& branch_at(const RootedTree& tree, const VertexId& v);

/// Lowest common ancestor of `v` and `w`. Throws InvalidVertex.
VertexId infimum(const RootedTree& tree, const VertexId& v, const VertexId& w);

/// Removes the leaf `v`; the result is canonical. Throws InvalidVertex for a
/// bad address and std::invalid_argument when `v` is not a leaf or the tree
/// is a single vertex.
RootedTree delete_leaf(const RootedTree& tree, const VertexId& v);

/// Level-order listing, left to right within a level by stored child order.
/// Each id stores its full path, so the output size is the sum of all depths.
std::vector<VertexId> canonical_vertex_order(const RootedTree& tree);

/// Depth-first preorder listing by stored child order.
std::vector<VertexId> preorder_vertices(const RootedTree& tree);

std::vector<VertexId> leaves(const RootedTree& tree);

/// Builds a tree from a parent array: vertex 0 is the root and
/// parents[i] < i for every i >= 1 (parents[0] is ignored).
/// The result is canonical.
RootedTree from_parent_array(std::span<const std::size_t> parents);

using RebuildFn =
    std::function<RootedTree(const RootedTree&, std::vector<RootedTree>)>;
using KeepFn = std::function<bool(const RootedTree&)>;

/// Rebuilds `tree` bottom-up. `rebuild(original, new_children)` is called for
/// every vertex after its children have been rebuilt and returns the
/// replacement branch. Branches for which `keep` returns true are reused
/// as-is without being visited. Iterative, so arbitrarily deep trees are fine.
RootedTree rebuild_bottom_up(const RootedTree& tree, const RebuildFn& rebuild,
                             const KeepFn& keep = {});

}  // namespace infima
