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

#include <string>

#include "infima/audit.hpp"
#include "infima/search.hpp"
#include "infima/tree.hpp"

using namespace infima;

TEST_CASE("check ids are unique and described") {
  const auto ids = audit_check_ids();
  CHECK(ids.size() == 20);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    CHECK_FALSE(audit_check_description(ids[i]).empty());
    for (std::size_t k = i + 1; k < ids.size(); ++k) CHECK(ids[i] != ids[k]);
  }
  CHECK(audit_check_description("no_such_check").empty());
}

TEST_CASE("report layout") {
  const AuditReport report = audit_structure(parse_tree("[[*,*,*],[*,*]]"));
  REQUIRE(report.verdicts.size() == audit_check_ids().size());
  for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
    CHECK(report.verdicts[i].check == audit_check_ids()[i]);
  }
  CHECK(report.passed());
  CHECK(report.failures().empty());
  CHECK(report.find("no_single_child") != nullptr);
  CHECK(report.find("unknown") == nullptr);
}

TEST_CASE("minimal trees pass from order 7 to 120") {
  const SearchTable table = search_table(120);
  for (std::size_t n = 7; n <= 120; ++n) {
    for (const auto& t : table.at(n).minimal_trees) {
      const AuditReport report = audit_structure(t, table);
      CAPTURE(serialize(t));
      for (const auto* f : report.failures()) CAPTURE(f->check);
      CHECK(report.passed());
    }
  }
}

TEST_CASE("the order-6 minimal tree with a root degree of 3") {
  // [[*,*],*,*] is minimal, yet its order-3 branch is not inside an order-7
  // or order-8 branch. The check reports it rather than special-casing n=6.
  const SearchTable table = search_table(6);
  const AuditReport report = audit_structure(parse_tree("[[*,*],*,*]"), table);
  const auto failures = report.failures();
  REQUIRE(failures.size() == 1);
  CHECK(failures[0]->check == "order_3_inside_7_or_8");
  REQUIRE(failures[0]->witness.has_value());
  CHECK(failures[0]->witness->to_string() == "/0");
  CHECK(audit_structure(parse_tree("[[*,*,*],*]"), table).passed());
}

TEST_CASE("a path is flagged") {
  const AuditReport report = audit_structure(RootedTree::path(10));
  CHECK_FALSE(report.passed());
  const AuditVerdict* v = report.find("no_single_child");
  REQUIRE(v != nullptr);
  CHECK_FALSE(v->passed);
  REQUIRE(v->witness.has_value());
  CHECK(v->witness->depth() >= 1);
  CHECK_FALSE(report.find("branches_minimal")->passed);
}

TEST_CASE("an order-6 internal branch is flagged") {
  const RootedTree t = parse_tree("[[[*,*,*],*],[*,*,*]]");
  const AuditReport report = audit_structure(t);
  const AuditVerdict* v = report.find("no_order_6_branch");
  REQUIRE(v != nullptr);
  CHECK_FALSE(v->passed);
  REQUIRE(v->witness.has_value());
  CHECK(branch_at(t, *v->witness).order() == 6);
}

TEST_CASE("every failure carries a witness") {
  for (const auto* text :
       {"[[[[*]]],*]", "[*,*,*,*,*,*,*,*]", "[[*,*,*,*],[*,*,*,*],[*,*]]",
        "[[[*,*],[*,*],*],[*,*,*]]"}) {
    const AuditReport report = audit_structure(parse_tree(text));
    CAPTURE(text);
    CHECK_FALSE(report.passed());
    for (const auto* f : report.failures()) {
      CHECK(f->applicable);
      CHECK(f->witness.has_value());
      CHECK_FALSE(f->detail.empty());
    }
  }
}
