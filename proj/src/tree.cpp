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

#include "infima/tree.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <utility>

namespace infima {

struct RootedTree::Node {
  std::vector<RootedTree> children;
  std::size_t order = 1;
  std::size_t height = 0;
  bool canonical = true;

  Node() = default;
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;

  // Releases uniquely owned descendants iteratively; a path with a few
  // hundred thousand vertices would otherwise overflow the stack.
  ~Node() {
    std::vector<std::shared_ptr<Node>> pending;
    auto drain = [&pending](std::vector<RootedTree>& kids) {
      for (auto& kid : kids) {
        if (kid.node_ && kid.node_.use_count() == 1) {
          pending.push_back(std::move(kid.node_));
        }
      }
      kids.clear();
    };
    drain(children);
    while (!pending.empty()) {
      std::shared_ptr<Node> node = std::move(pending.back());
      pending.pop_back();
      drain(node->children);
    }
  }
};

struct NodeAccess {
  using Node = RootedTree::Node;
  static const RootedTree::Node* get(const RootedTree& t) {
    return t.node_.get();
  }
};

namespace {

using Node = NodeAccess::Node;

const std::shared_ptr<Node>& shared_leaf() {
  static const std::shared_ptr<Node> leaf = std::make_shared<Node>();
  return leaf;
}

// Streams the bracket serialization of a canonical tree one byte at a time,
// walking children in stored order.
class SerialCursor {
 public:
  explicit SerialCursor(const Node* root) : enter_(root) {}

  // Next byte, or -1 at the end.
  int next() {
    for (;;) {
      if (enter_ != nullptr) {
        const Node* node = enter_;
        enter_ = nullptr;
        if (node->children.empty()) return '*';
        stack_.push_back({node, 0, false});
        return '[';
      }
      if (stack_.empty()) return -1;
      Frame& top = stack_.back();
      if (top.next == top.node->children.size()) {
        stack_.pop_back();
        return ']';
      }
      if (top.next > 0 && !top.comma_emitted) {
        top.comma_emitted = true;
        return ',';
      }
      enter_ = NodeAccess::get(top.node->children[top.next]);
      ++top.next;
      top.comma_emitted = false;
    }
  }

 private:
  struct Frame {
    const Node* node;
    std::size_t next;
    bool comma_emitted;
  };
  const Node* enter_;
  std::vector<Frame> stack_;
};

// Lexicographic comparison of the serializations of two canonical trees.
std::strong_ordering compare_serial(const Node* a, const Node* b) {
  if (a == b) return std::strong_ordering::equal;
  SerialCursor ca(a);
  SerialCursor cb(b);
  for (;;) {
    const int x = ca.next();
    const int y = cb.next();
    if (x != y) return x <=> y;
    if (x < 0) return std::strong_ordering::equal;
  }
}

// Canonical order on canonical trees.
std::strong_ordering compare_canonical_nodes(const Node* a, const Node* b) {
  if (a == b) return std::strong_ordering::equal;
  if (a->order != b->order) return b->order <=> a->order;
  return compare_serial(b, a);
}

void sort_canonical_children(std::vector<RootedTree>& kids) {
  std::stable_sort(kids.begin(), kids.end(),
                   [](const RootedTree& x, const RootedTree& y) {
                     return compare_canonical_nodes(NodeAccess::get(x),
                                                    NodeAccess::get(y)) < 0;
                   });
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

RootedTree::RootedTree() : node_(shared_leaf()) {}

RootedTree::RootedTree(std::vector<RootedTree> children) {
  if (children.empty()) {
    node_ = shared_leaf();
    return;
  }
  auto node = std::make_shared<Node>();
  std::size_t order = 1;
  std::size_t height = 0;
  bool canonical = true;
  for (const auto& c : children) {
    order += c.order();
    height = std::max(height, c.height() + 1);
    canonical = canonical && c.is_canonical();
  }
  if (canonical) {
    for (std::size_t i = 1; i < children.size(); ++i) {
      if (compare_canonical_nodes(children[i - 1].node_.get(),
                                  children[i].node_.get()) > 0) {
        canonical = false;
        break;
      }
    }
  }
  node->children = std::move(children);
  node->order = order;
  node->height = height;
  node->canonical = canonical;
  node_ = std::move(node);
}

RootedTree RootedTree::path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path: order must be positive");
  RootedTree t;
  for (std::size_t i = 1; i < n; ++i) t = RootedTree(std::vector{t});
  return t;
}

RootedTree RootedTree::star(std::size_t n) {
  if (n == 0) throw std::invalid_argument("star: order must be positive");
  return RootedTree(std::vector<RootedTree>(n - 1, RootedTree()));
}

std::span<const RootedTree> RootedTree::children() const {
  return node_->children;
}
std::size_t RootedTree::order() const { return node_->order; }
std::size_t RootedTree::height() const { return node_->height; }
bool RootedTree::is_canonical() const { return node_->canonical; }

bool operator==(const RootedTree& a, const RootedTree& b) {
  std::vector<std::pair<const Node*, const Node*>> stack{
      {a.node_.get(), b.node_.get()}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x == y) continue;
    if (x->order != y->order || x->height != y->height ||
        x->children.size() != y->children.size()) {
      return false;
    }
    for (std::size_t i = 0; i < x->children.size(); ++i) {
      stack.emplace_back(x->children[i].node_.get(),
                         y->children[i].node_.get());
    }
  }
  return true;
}

VertexId VertexId::child(std::size_t index) const {
  VertexId v = *this;
  v.path.push_back(index);
  return v;
}

VertexId VertexId::parent() const {
  if (path.empty()) throw InvalidVertex("the root has no parent");
  VertexId v = *this;
  v.path.pop_back();
  return v;
}

bool VertexId::is_ancestor_of(const VertexId& other) const {
  return path.size() <= other.path.size() &&
         std::equal(path.begin(), path.end(), other.path.begin());
}

std::string VertexId::to_string() const {
  if (path.empty()) return "/";
  std::string s;
  for (auto i : path) {
    s += '/';
    s += std::to_string(i);
  }
  return s;
}

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error("parse error at offset " + std::to_string(offset) +
                         ": " + message),
      offset_(offset) {}

RootedTree parse_tree(std::string_view text) {
  enum class Expect { kTree, kSeparator, kEnd };
  std::vector<std::vector<RootedTree>> open;
  std::optional<RootedTree> result;
  Expect expect = Expect::kTree;
  bool just_opened = false;

  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (is_space(c)) continue;

    std::optional<RootedTree> value;
    switch (expect) {
      case Expect::kTree:
        if (c == '*') {
          value.emplace();
        } else if (c == '[') {
          open.emplace_back();
          just_opened = true;
          continue;
        } else if (c == ']' && just_opened) {
          throw ParseError("empty brackets; a single vertex is written '*'",
                           pos);
        } else {
          throw ParseError(std::string("expected '*' or '[' but found '") +
                               c + "'",
                           pos);
        }
        break;
      case Expect::kSeparator:
        if (c == ',') {
          expect = Expect::kTree;
          just_opened = false;
          continue;
        }
        if (c == ']') {
          auto kids = std::move(open.back());
          open.pop_back();
          sort_canonical_children(kids);
          value.emplace(std::move(kids));
          break;
        }
        throw ParseError(std::string("expected ',' or ']' but found '") + c +
                             "'",
                         pos);
      case Expect::kEnd:
        throw ParseError("trailing characters after tree", pos);
    }

    just_opened = false;
    if (open.empty()) {
      result = std::move(value);
      expect = Expect::kEnd;
    } else {
      open.back().push_back(std::move(*value));
      expect = Expect::kSeparator;
    }
  }

  if (!result) {
    throw ParseError(text.empty() || open.empty() ? "empty input"
                                                  : "unexpected end of input",
                     text.size());
  }
  return std::move(*result);
}

std::string serialize(const RootedTree& tree) {
  const RootedTree canon = canonicalize(tree);
  std::string out;
  out.reserve(4 * canon.order());
  SerialCursor cursor(NodeAccess::get(canon));
  for (int c = cursor.next(); c >= 0; c = cursor.next()) {
    out.push_back(static_cast<char>(c));
  }
  return out;
}

RootedTree rebuild_bottom_up(const RootedTree& tree, const RebuildFn& rebuild,
                             const KeepFn& keep) {
  if (keep && keep(tree)) return tree;

  struct Frame {
    const RootedTree* tree;
    std::size_t next;
    std::vector<RootedTree> done;
  };
  std::vector<Frame> stack;
  stack.push_back({&tree, 0, {}});
  std::optional<RootedTree> result;

  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto kids = top.tree->children();
    if (top.next < kids.size()) {
      const RootedTree& kid = kids[top.next++];
      if (keep && keep(kid)) {
        top.done.push_back(kid);
      } else {
        stack.push_back({&kid, 0, {}});
      }
      continue;
    }
    RootedTree built = rebuild(*top.tree, std::move(top.done));
    stack.pop_back();
    if (stack.empty()) {
      result = std::move(built);
    } else {
      stack.back().done.push_back(std::move(built));
    }
  }
  return std::move(*result);
}

RootedTree canonicalize(const RootedTree& tree) {
  if (tree.is_canonical()) return tree;
  return rebuild_bottom_up(
      tree,
      [](const RootedTree&, std::vector<RootedTree> kids) {
        sort_canonical_children(kids);
        return RootedTree(std::move(kids));
      },
      [](const RootedTree& t) { return t.is_canonical(); });
}

std::strong_ordering compare_canonical(const RootedTree& a,
                                       const RootedTree& b) {
  if (a.is_canonical() && b.is_canonical()) {
    return compare_canonical_nodes(NodeAccess::get(a), NodeAccess::get(b));
  }
  const RootedTree ca = canonicalize(a);
  const RootedTree cb = canonicalize(b);
  return compare_canonical_nodes(NodeAccess::get(ca), NodeAccess::get(cb));
}

bool isomorphic(const RootedTree& a, const RootedTree& b) {
  if (a.order() != b.order() || a.height() != b.height()) return false;
  return compare_canonical(a, b) == 0;
}

void sort_canonical(std::vector<RootedTree>& trees) {
  for (auto& t : trees) t = canonicalize(t);
  sort_canonical_children(trees);
}

bool is_valid_vertex(const RootedTree& tree, const VertexId& v) {
  const RootedTree* at = &tree;
  for (auto i : v.path) {
    const auto kids = at->children();
    if (i >= kids.size()) return false;
    at = &kids[i];
  }
  return true;
}

const RootedTree& branch_at(const RootedTree& tree, const VertexId& v) {
  const RootedTree* at = &tree;
  for (std::size_t level = 0; level < v.path.size(); ++level) {
    const auto kids = at->children();
    if (v.path[level] >= kids.size()) {
      throw InvalidVertex("vertex " + v.to_string() + ": index " +
                          std::to_string(v.path[level]) + " at depth " +
                          std::to_string(level) + " is out of range");
    }
    at = &kids[v.path[level]];
  }
  return *at;
}

VertexId infimum(const RootedTree& tree, const VertexId& v,
                 const VertexId& w) {
  branch_at(tree, v);
  branch_at(tree, w);
  VertexId common;
  const std::size_t n = std::min(v.path.size(), w.path.size());
  for (std::size_t i = 0; i < n && v.path[i] == w.path[i]; ++i) {
    common.path.push_back(v.path[i]);
  }
  return common;
}

RootedTree delete_leaf(const RootedTree& tree, const VertexId& v) {
  if (tree.order() == 1) {
    throw std::invalid_argument("delete_leaf: tree is a single vertex");
  }
  if (!branch_at(tree, v).is_leaf()) {
    throw std::invalid_argument("delete_leaf: vertex " + v.to_string() +
                                " is not a leaf");
  }
  // Walk down recording ancestors, then rebuild the spine bottom-up.
  std::vector<const RootedTree*> spine{&tree};
  for (std::size_t level = 0; level + 1 < v.path.size(); ++level) {
    spine.push_back(&spine.back()->children()[v.path[level]]);
  }
  std::optional<RootedTree> replacement;
  for (std::size_t level = spine.size(); level-- > 0;) {
    const auto kids = spine[level]->children();
    std::vector<RootedTree> rebuilt;
    rebuilt.reserve(kids.size());
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i != v.path[level]) {
        rebuilt.push_back(kids[i]);
      } else if (replacement) {
        rebuilt.push_back(std::move(*replacement));
      }
    }
    replacement.emplace(std::move(rebuilt));
  }
  return canonicalize(*replacement);
}

std::vector<VertexId> canonical_vertex_order(const RootedTree& tree) {
  std::vector<VertexId> order;
  order.reserve(tree.order());
  std::deque<std::pair<const RootedTree*, VertexId>> queue;
  queue.emplace_back(&tree, VertexId::root());
  while (!queue.empty()) {
    auto [t, id] = std::move(queue.front());
    queue.pop_front();
    const auto kids = t->children();
    for (std::size_t i = 0; i < kids.size(); ++i) {
      queue.emplace_back(&kids[i], id.child(i));
    }
    order.push_back(std::move(id));
  }
  return order;
}

std::vector<VertexId> preorder_vertices(const RootedTree& tree) {
  std::vector<VertexId> order;
  order.reserve(tree.order());
  std::vector<std::pair<const RootedTree*, VertexId>> stack;
  stack.emplace_back(&tree, VertexId::root());
  while (!stack.empty()) {
    auto [t, id] = std::move(stack.back());
    stack.pop_back();
    const auto kids = t->children();
    for (std::size_t i = kids.size(); i-- > 0;) {
      stack.emplace_back(&kids[i], id.child(i));
    }
    order.push_back(std::move(id));
  }
  return order;
}

std::vector<VertexId> leaves(const RootedTree& tree) {
  std::vector<VertexId> out;
  for (auto& v : preorder_vertices(tree)) {
    if (branch_at(tree, v).is_leaf()) out.push_back(std::move(v));
  }
  return out;
}

RootedTree from_parent_array(std::span<const std::size_t> parents) {
  if (parents.empty()) {
    throw std::invalid_argument("from_parent_array: no vertices");
  }
  const std::size_t n = parents.size();
  std::vector<std::vector<std::size_t>> kids(n);
  for (std::size_t i = 1; i < n; ++i) {
    if (parents[i] >= i) {
      throw std::invalid_argument(
          "from_parent_array: parent index must precede the child");
    }
    kids[parents[i]].push_back(i);
  }
  std::vector<std::optional<RootedTree>> built(n);
  for (std::size_t i = n; i-- > 0;) {
    std::vector<RootedTree> branch;
    branch.reserve(kids[i].size());
    for (auto k : kids[i]) {
      branch.push_back(std::move(*built[k]));
      built[k].reset();
    }
    sort_canonical_children(branch);
    built[i].emplace(std::move(branch));
  }
  return std::move(*built[0]);
}

}  // namespace infima
