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

#include <set>
#include <string>

#include "infima/construction.hpp"
#include "infima/counting.hpp"
#include "infima/search.hpp"
#include "infima/tree.hpp"

using namespace infima;

namespace {

std::set<std::string> as_strings(const std::vector<RootedTree>& trees) {
  std::set<std::string> out;
  for (const auto& t : trees) out.insert(serialize(t));
  return out;
}

}  // namespace

TEST_CASE("small orders") {
  CHECK(as_strings(construct_minimal(1)) == std::set<std::string>{"*"});
  CHECK(as_strings(construct_minimal(4)) == std::set<std::string>{"[*,*,*]"});
  CHECK(as_strings(construct_minimal(6)) ==
        std::set<std::string>{"[[*,*,*],*]", "[[*,*],*,*]"});
  CHECK(as_strings(construct_minimal(7)) ==
        std::set<std::string>{"[[*,*],[*,*]]", "[[*,*,*],*,*]"});
  CHECK_THROWS_AS(construct_minimal(0), std::invalid_argument);
}

TEST_CASE("construction equals search up to 120") {
  const SearchTable table = search_table(120);
  for (std::size_t n = 1; n <= 120; ++n) {
    CAPTURE(n);
    const auto built = construct_minimal(n);
    const auto& record = table.at(n);
    CHECK(as_strings(built) == as_strings(record.minimal_trees));
    const bool two = n == 6 || n == 7 || (n > 6 && n % 5 == 2);
    CHECK(built.size() == (two ? 2u : 1u));
    CHECK(is_standard_form(built.front()));
    for (const auto& t : built) {
      CHECK(t.is_canonical());
      CHECK(t.order() == n);
    }
  }
}

TEST_CASE("large orders are minimal by the two-branch recursion") {
  // A two-branch split [A, B] with A, B minimal is never below m_n, so
  // checking J against every split verifies minimality from smaller orders.
  const std::size_t max_n = 400;
  std::vector<BigInt> j(max_n + 1);
  for (std::size_t n = 1; n <= 7; ++n) {
    j[n] = count_ics(construct_minimal(n).front()).j_value;
  }
  for (std::size_t n = 8; n <= max_n; ++n) {
    const auto built = construct_minimal(n);
    const BigInt value = count_ics(built.front()).j_value;
    BigInt best = value;
    for (std::size_t a = 1; a + a <= n - 1; ++a) {
      const BigInt candidate = j[n - 1 - a] * j[a] - 1;
      if (candidate < best) best = candidate;
    }
    CAPTURE(n);
    CHECK(value == best);
    for (const auto& t : built) CHECK(count_ics(t).j_value == value);
    j[n] = value;
  }
}

TEST_CASE("standard form rewrite keeps the count") {
  const RootedTree t = parse_tree("[[[*,*,*],*,*],[[*,*,*],*,*]]");
  const RootedTree s = to_standard_form(t);
  CHECK(serialize(s) == "[[[*,*],[*,*]],[[*,*],[*,*]]]");
  CHECK(count_ics(s).i_total == count_ics(t).i_total);
  CHECK(to_standard_form(s) == s);
  // The two order-6 minimal trees are not related by the rewrite.
  for (std::size_t n = 1; n <= 80; ++n) {
    if (n == 6) continue;
    for (const auto& t2 : construct_minimal(n)) {
      CHECK(to_standard_form(t2) == construct_minimal(n).front());
    }
  }
}

TEST_CASE("deep orders build quickly") {
  const auto built = construct_minimal(100000);
  CHECK(built.front().order() == 100000);
}
