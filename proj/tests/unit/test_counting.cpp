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

#include "infima/counting.hpp"
#include "infima/search.hpp"
#include "infima/tree.hpp"
#include "support/oracles.hpp"

using namespace infima;

TEST_CASE("small trees") {
  const CountProfile star4 = count_ics(parse_tree("[*,*,*]"));
  CHECK(star4.i_total == 11);
  CHECK(star4.i_without_root == 3);
  CHECK(star4.i_with_root == 8);
  CHECK(star4.j_value == 13);
  CHECK(count_ics(RootedTree()).i_total == 1);
  CHECK(count_ics(parse_tree("[*]")).i_total == 3);
}

TEST_CASE("profile invariants hold on random trees") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto parent = testing::random_parent_array(1 + trial % 40, rng);
    const CountProfile p = count_ics(from_parent_array(parent));
    CHECK(p.i_total == p.i_without_root + p.i_with_root);
    CHECK(p.j_value == p.i_total + 2);
  }
}

TEST_CASE("closed forms for paths and stars up to 64") {
  for (std::size_t n = 1; n <= 64; ++n) {
    CAPTURE(n);
    CHECK(count_ics(RootedTree::path(n)).i_total == testing::path_count(n));
    CHECK(count_ics(RootedTree::star(n)).i_total == testing::star_count(n));
  }
}

TEST_CASE("recursion agrees with an independent brute force") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const auto parent = testing::random_parent_array(1 + trial % 13, rng);
    const RootedTree t = from_parent_array(parent);
    const mpz_class expected = testing::brute_force_closed_sets(parent);
    CHECK(count_ics(t).i_total == expected);
    CHECK(oracle_count(t) == expected);
  }
}

TEST_CASE("two-branch roots linearize in J") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const RootedTree a = from_parent_array(testing::random_parent_array(1 + trial % 9, rng));
    const RootedTree b = from_parent_array(testing::random_parent_array(1 + trial % 7, rng));
    const BigInt ja = count_ics(a).j_value;
    const BigInt jb = count_ics(b).j_value;
    CHECK(count_ics(RootedTree({a, b})).j_value == j_of_pair(ja, jb));
    CHECK(j_of_pair(ja, jb) == ja * jb - 1);
  }
  CHECK_THROWS_AS(j_of_pair(2, 13), std::invalid_argument);
}

TEST_CASE("count cache returns the same profile") {
  CountCache cache;
  const RootedTree t = parse_tree("[[*,*,*],[*,*]]");
  const CountProfile& first = cache.profile(t);
  CHECK(first.i_total == 101);
  CHECK(cache.profile(canonicalize(t)).i_total == 101);
}

TEST_CASE("oracle limit") {
  CHECK_THROWS_AS(oracle_count(RootedTree::path(21)), std::invalid_argument);
  CHECK(oracle_count(RootedTree::path(21), 21) == testing::path_count(21));
  CHECK_THROWS_AS(oracle_count(RootedTree(), 63), std::invalid_argument);
}

TEST_CASE("count_required") {
  const RootedTree t = parse_tree("[[*,*],*]");
  CHECK(count_required(t, std::vector<VertexId>{}) == count_ics(t).i_total);
  // Containing both leaves of the [*,*] branch forces their parent in.
  const std::vector<VertexId> pair{VertexId{{0, 0}}, VertexId{{0, 1}}};
  const std::vector<VertexId> triple{VertexId{{0, 0}}, VertexId{{0, 1}},
                                     VertexId{{0}}};
  CHECK(count_required(t, pair) == count_required(t, triple));
  std::vector<VertexId> dup{VertexId{{1}}, VertexId{{1}}};
  CHECK(count_required(t, dup) == count_required(t, std::vector<VertexId>{VertexId{{1}}}));
  CHECK_THROWS_AS(count_required(t, std::vector<VertexId>{VertexId{{4}}}), InvalidVertex);
}

TEST_CASE("deep path") {
  const std::size_t n = 100000;
  const CountProfile p = count_ics(RootedTree::path(n));
  CHECK(p.i_total == testing::path_count(n));
}
