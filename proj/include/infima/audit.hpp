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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infima/search.hpp"
#include "infima/tree.hpp"

namespace infima {

/// Outcome of one structural check.
struct AuditVerdict {
  std::string check;
  /// False when the check's hypothesis (order threshold, residue class)
  /// excludes this tree; such a verdict always passes.
  bool applicable = true;
  bool passed = true;
  /// Offending vertex; always set on failure.
  std::optional<VertexId> witness;
  /// Second vertex for checks about pairs of branches.
  std::optional<VertexId> partner;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditVerdict> verdicts;

  bool passed() const;
  /// nullptr when no verdict carries that id.
  const AuditVerdict* find(std::string_view check) const;
  std::vector<const AuditVerdict*> failures() const;
};

/// Ids of all checks, in the order they appear in a report.
std::span<const std::string_view> audit_check_ids();

/// One-line statement of a check, or an empty view for an unknown id.
std::string_view audit_check_description(std::string_view check);

/// Runs every structural check on a tree claimed to be minimal. Checks that
/// assume standard form run on the tree with each [[*,*,*],*,*] branch
/// replaced in place by [[*,*],[*,*]], so witnesses keep their addresses.
/// `table` supplies the minimal sets for the branch-minimality check; orders
/// it does not cover make that check inapplicable.
AuditReport audit_structure(const RootedTree& tree, const SearchTable& table);

/// As above with a pruned table computed up to the tree's order.
AuditReport audit_structure(const RootedTree& tree);

}  // namespace infima
