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

#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "infima/tree.hpp"
#include "support/oracles.hpp"

using namespace infima;

TEST_CASE("parse and serialize round trip in canonical form") {
  CHECK(serialize(parse_tree("*")) == "*");
  CHECK(serialize(parse_tree("[*]")) == "[*]");
  CHECK(serialize(parse_tree("[*,[*,*]]")) == "[[*,*],*]");
  CHECK(serialize(parse_tree(" [ * , * ] ")) == "[*,*]");
  const RootedTree t = parse_tree("[*,[*],[*,*],[[*]]]");
  CHECK(t.order() == 10);
  CHECK(t.height() == 3);
  CHECK(t.is_canonical());
  CHECK(parse_tree(serialize(t)) == t);
}

TEST_CASE("parse errors carry the byte offset") {
  for (const auto* bad : {"", "[", "[]", "[*,]", "*]", "[*;*]", "x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_tree(bad), ParseError);
  }
  try {
    parse_tree("[*,]");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
}

TEST_CASE("paths and stars") {
  CHECK(serialize(RootedTree::path(3)) == "[[*]]");
  CHECK(serialize(RootedTree::star(4)) == "[*,*,*]");
  CHECK(RootedTree::path(1) == RootedTree());
  CHECK(RootedTree::path(50).height() == 49);
  CHECK_THROWS_AS(RootedTree::path(0), std::invalid_argument);
  CHECK_THROWS_AS(RootedTree::star(0), std::invalid_argument);
}

TEST_CASE("canonical form decides isomorphism") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 15;
    auto parent = testing::random_parent_array(n, rng);
    const RootedTree plain(parse_tree(testing::parent_array_to_brackets(parent)));
    const RootedTree from_array = from_parent_array(parent);
    CHECK(isomorphic(plain, from_array));
    CHECK(serialize(plain) == serialize(from_array));
  }
  const RootedTree a(std::vector<RootedTree>{RootedTree(), RootedTree::path(2)});
  CHECK_FALSE(a.is_canonical());
  CHECK(canonicalize(a).is_canonical());
  CHECK(isomorphic(a, parse_tree("[[*],*]")));
  CHECK_FALSE(isomorphic(a, parse_tree("[*,*,*]")));
}

TEST_CASE("canonical order puts larger order first") {
  CHECK(canonical_before(parse_tree("[*,*]"), parse_tree("[*]")));
  CHECK(compare_canonical(parse_tree("[*]"), parse_tree("[*]")) == 0);
  std::vector<RootedTree> ts{parse_tree("*"), parse_tree("[*,*,*]"),
                             parse_tree("[[*]]"), parse_tree("[*,*]")};
  sort_canonical(ts);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    CHECK(ts[i - 1].order() >= ts[i].order());
  }
}

TEST_CASE("vertex ids, infimum and branch access") {
  const RootedTree t = parse_tree("[[*,*],[*]]");
  const VertexId a = VertexId::root().child(0).child(1);
  const VertexId b = VertexId::root().child(1).child(0);
  CHECK(a.to_string() == "/0/1");
  CHECK(VertexId::root().to_string() == "/");
  CHECK(infimum(t, a, b).is_root());
  CHECK(infimum(t, a, VertexId::root().child(0).child(0)) ==
        VertexId::root().child(0));
  CHECK(infimum(t, a, a) == a);
  CHECK(infimum(t, a, a.parent()) == a.parent());
  CHECK(VertexId::root().child(0).is_ancestor_of(a));
  CHECK_FALSE(a.is_ancestor_of(b));
  CHECK(serialize(branch_at(t, VertexId::root().child(0))) == "[*,*]");
  CHECK_THROWS_AS(branch_at(t, VertexId{{5}}), InvalidVertex);
  CHECK_THROWS_AS(VertexId::root().parent(), InvalidVertex);
  CHECK_FALSE(is_valid_vertex(t, VertexId{{1, 1}}));
}

TEST_CASE("vertex listings") {
  const RootedTree t = parse_tree("[[*,*],[*]]");
  const auto bfs = canonical_vertex_order(t);
  REQUIRE(bfs.size() == 6);
  CHECK(bfs[0].is_root());
  CHECK(bfs[1].to_string() == "/0");
  CHECK(bfs[2].to_string() == "/1");
  CHECK(bfs[3].to_string() == "/0/0");
  CHECK(bfs[5].to_string() == "/1/0");
  const auto pre = preorder_vertices(t);
  CHECK(pre[2].to_string() == "/0/0");
  CHECK(leaves(t).size() == 3);
}

TEST_CASE("delete_leaf") {
  const RootedTree t = parse_tree("[[*,*],[*]]");
  CHECK(serialize(delete_leaf(t, VertexId{{1, 0}})) == "[[*,*],*]");
  CHECK(serialize(delete_leaf(t, VertexId{{0, 0}})) == "[[*],[*]]");
  CHECK_THROWS_AS(delete_leaf(t, VertexId{{0}}), std::invalid_argument);
  CHECK_THROWS_AS(delete_leaf(RootedTree(), VertexId::root()),
                  std::invalid_argument);
  CHECK_THROWS_AS(delete_leaf(t, VertexId{{3}}), InvalidVertex);
}

TEST_CASE("deep paths do not exhaust the stack") {
  const std::size_t n = 100000;
  const RootedTree p = RootedTree::path(n);
  CHECK(p.order() == n);
  CHECK(p.height() == n - 1);
  const std::string s = serialize(p);
  CHECK(s.size() == 2 * (n - 1) + 1);
  CHECK(parse_tree(s) == p);
  CHECK(canonicalize(p) == p);
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 1; i < n; ++i) parent[i] = i - 1;
  CHECK(from_parent_array(parent) == p);
}

TEST_CASE("from_parent_array rejects malformed input") {
  CHECK_THROWS_AS(from_parent_array(std::vector<std::size_t>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_parent_array(std::vector<std::size_t>{0, 1}),
                  std::invalid_argument);
}
