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

#include "infima/audit.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <set>
#include <utility>

namespace infima {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct CheckInfo {
  std::string_view id;
  std::string_view description;
};

constexpr std::array<CheckInfo, 20> kChecks{{
    {"no_single_child", "no non-root vertex has exactly one child"},
    {"binary_above_order_8", "every branch of order >= 8 has root degree 2"},
    {"sibling_dominates_grandchildren",
     "in every branch [[A,B],C] both |A| and |B| are at most |C|"},
    {"deeper_pair_not_larger",
     "in every branch [[A,B],[[D,E],C]] max(|D|,|E|) <= min(|A|,|B|)"},
    {"disjoint_pairs_comparable",
     "for disjoint binary vertices with children A,B and C,D: "
     "max(|A|,|B|) <= min(|C|,|D|) or the reverse"},
    {"deeper_pair_smaller",
     "for disjoint binary vertices, the children of the deeper one are no "
     "larger than those of the shallower one"},
    {"binary_top_two_levels",
     "every branch of order >= 18 has root and root children of degree 2"},
    {"height_monotone_in_order",
     "in standard form, |A| <= |B| implies h(A) <= h(B) for all branches"},
    {"no_order_6_branch", "no proper branch has order 6"},
    {"order_3_inside_7_or_8",
     "every proper branch of order 3 lies inside a branch of order 7 or 8"},
    {"forbidden_disjoint_pairs",
     "no two disjoint branches have orders (7,7), (8,8), (11,11), (7,5), "
     "(8,5), (8,7), (11,10), (16,10), (15,11) or (16,11)"},
    {"leaves_in_small_stars",
     "order >= 7, standard form: every leaf lies in a branch of order 3, 4 "
     "or 5"},
    {"no_3_with_5",
     "order >= 7, standard form: branches of order 3 and 5 do not coexist"},
    {"at_most_two_order_3",
     "order >= 7, standard form: at most two branches of order 3, and two "
     "only inside one branch of order 7"},
    {"order_5_placement",
     "order >= 6: every branch of order 5 lies inside a branch of order 10, "
     "11, 15 or 16"},
    {"at_most_two_order_5", "at most two branches of order 5"},
    {"root_heights_balanced",
     "order >= 7, standard form: the two root branches differ in height by "
     "at most 1"},
    {"leaves_on_last_two_levels",
     "order >= 7, standard form: all leaves lie on the last two levels"},
    {"residue_census",
     "order >= 8, standard form: the branches of order 3, 5 and 7 and the "
     "placement of leaves match the order modulo 5"},
    {"branches_minimal", "every branch is a minimal tree of its order"},
}};

// Preorder flattening: the branch at vertex i occupies [i, i + order(i)).
class Flat {
 public:
  explicit Flat(const RootedTree& tree) {
    struct Item {
      const RootedTree* tree;
      VertexId id;
      std::size_t parent;
    };
    std::vector<Item> stack{{&tree, VertexId::root(), kNone}};
    while (!stack.empty()) {
      Item item = std::move(stack.back());
      stack.pop_back();
      const std::size_t index = node_.size();
      node_.push_back(item.tree);
      parent_.push_back(item.parent);
      depth_.push_back(item.id.depth());
      kids_.emplace_back();
      if (item.parent != kNone) kids_[item.parent].push_back(index);
      const auto children = item.tree->children();
      for (std::size_t j = children.size(); j-- > 0;) {
        stack.push_back({&children[j], item.id.child(j), index});
      }
      id_.push_back(std::move(item.id));
    }
  }

  std::size_t size() const { return node_.size(); }
  const RootedTree& branch(std::size_t i) const { return *node_[i]; }
  std::size_t order(std::size_t i) const { return node_[i]->order(); }
  std::size_t height(std::size_t i) const { return node_[i]->height(); }
  std::size_t depth(std::size_t i) const { return depth_[i]; }
  std::size_t parent(std::size_t i) const { return parent_[i]; }
  const std::vector<std::size_t>& kids(std::size_t i) const {
    return kids_[i];
  }
  bool is_leaf(std::size_t i) const { return kids_[i].empty(); }
  bool is_binary(std::size_t i) const { return kids_[i].size() == 2; }
  const VertexId& id(std::size_t i) const { return id_[i]; }

  // a is an ancestor of b or equal to it.
  bool contains(std::size_t a, std::size_t b) const {
    return a <= b && b < a + order(a);
  }
  bool disjoint(std::size_t a, std::size_t b) const {
    return !contains(a, b) && !contains(b, a);
  }
  // Some proper ancestor of v satisfies pred.
  template <typename Pred>
  bool has_proper_ancestor(std::size_t v, Pred pred) const {
    for (std::size_t a = parent_[v]; a != kNone; a = parent_[a]) {
      if (pred(a)) return true;
    }
    return false;
  }
  std::vector<std::size_t> with_order(std::size_t k) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (order(i) == k) out.push_back(i);
    }
    return out;
  }
  std::size_t min_child_order(std::size_t i) const {
    return std::min(order(kids_[i][0]), order(kids_[i][1]));
  }
  std::size_t max_child_order(std::size_t i) const {
    return std::max(order(kids_[i][0]), order(kids_[i][1]));
  }

 private:
  std::vector<const RootedTree*> node_;
  std::vector<VertexId> id_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> depth_;
  std::vector<std::vector<std::size_t>> kids_;
};

std::string join_orders(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

class Auditor {
 public:
  Auditor(const RootedTree& tree, const RootedTree& standard,
          const SearchTable& table)
      : flat_(tree), std_(standard), table_(table), n_(tree.order()) {}

  AuditReport run() {
    no_single_child();
    binary_above_order_8();
    sibling_dominates_grandchildren();
    deeper_pair_not_larger();
    disjoint_pairs();
    binary_top_two_levels();
    height_monotone_in_order();
    no_order_6_branch();
    order_3_inside_7_or_8();
    forbidden_disjoint_pairs();
    small_star_checks();
    order_5_placement();
    at_most_two_order_5();
    completeness_checks();
    residue_census();
    branches_minimal();
    return std::move(report_);
  }

 private:
  void pass(std::string_view id, std::string detail = {}) {
    report_.verdicts.push_back(
        {std::string(id), true, true, std::nullopt, std::nullopt,
         std::move(detail)});
  }
  void skip(std::string_view id, std::string why) {
    report_.verdicts.push_back(
        {std::string(id), false, true, std::nullopt, std::nullopt,
         std::move(why)});
  }
  void fail(std::string_view id, const Flat& f, std::size_t witness,
            std::size_t partner, std::string detail) {
    AuditVerdict v{std::string(id), true, false, f.id(witness), std::nullopt,
                   std::move(detail)};
    if (partner != kNone) v.partner = f.id(partner);
    report_.verdicts.push_back(std::move(v));
  }

  bool standard_applies(std::string_view id, std::size_t min_order) {
    if (n_ < min_order) {
      skip(id, "order below " + std::to_string(min_order));
      return false;
    }
    return true;
  }

  void no_single_child() {
    constexpr std::string_view id = "no_single_child";
    for (std::size_t i = 1; i < flat_.size(); ++i) {
      if (flat_.kids(i).size() == 1) {
        fail(id, flat_, i, kNone, "non-root vertex with a single child");
        return;
      }
    }
    pass(id);
  }

  void binary_above_order_8() {
    constexpr std::string_view id = "binary_above_order_8";
    for (std::size_t i = 0; i < flat_.size(); ++i) {
      if (flat_.order(i) >= 8 && !flat_.is_binary(i)) {
        fail(id, flat_, i, kNone,
             "branch of order " + std::to_string(flat_.order(i)) + " has " +
                 std::to_string(flat_.kids(i).size()) + " children");
        return;
      }
    }
    pass(id);
  }

  void sibling_dominates_grandchildren() {
    constexpr std::string_view id = "sibling_dominates_grandchildren";
    for (std::size_t u = 0; u < flat_.size(); ++u) {
      if (!flat_.is_binary(u)) continue;
      for (int side = 0; side < 2; ++side) {
        const std::size_t x = flat_.kids(u)[side];
        const std::size_t c = flat_.kids(u)[1 - side];
        if (!flat_.is_binary(x)) continue;
        if (flat_.max_child_order(x) > flat_.order(c)) {
          fail(id, flat_, x, c,
               "child of order " + std::to_string(flat_.max_child_order(x)) +
                   " exceeds sibling branch of order " +
                   std::to_string(flat_.order(c)));
          return;
        }
      }
    }
    pass(id);
  }

  void deeper_pair_not_larger() {
    constexpr std::string_view id = "deeper_pair_not_larger";
    for (std::size_t u = 0; u < flat_.size(); ++u) {
      if (!flat_.is_binary(u)) continue;
      for (int side = 0; side < 2; ++side) {
        const std::size_t p = flat_.kids(u)[side];
        const std::size_t q = flat_.kids(u)[1 - side];
        if (!flat_.is_binary(p) || !flat_.is_binary(q)) continue;
        for (std::size_t r : flat_.kids(q)) {
          if (!flat_.is_binary(r)) continue;
          if (flat_.max_child_order(r) > flat_.min_child_order(p)) {
            fail(id, flat_, r, p,
                 "deeper child of order " +
                     std::to_string(flat_.max_child_order(r)) +
                     " exceeds shallower child of order " +
                     std::to_string(flat_.min_child_order(p)));
            return;
          }
        }
      }
    }
    pass(id);
  }

  void disjoint_pairs() {
    constexpr std::string_view comparable = "disjoint_pairs_comparable";
    constexpr std::string_view deeper = "deeper_pair_smaller";
    std::vector<std::size_t> binary;
    for (std::size_t i = 0; i < flat_.size(); ++i) {
      if (flat_.is_binary(i)) binary.push_back(i);
    }
    bool comparable_ok = true;
    bool deeper_ok = true;
    for (std::size_t a = 0; a < binary.size(); ++a) {
      for (std::size_t b = a + 1; b < binary.size(); ++b) {
        const std::size_t v = binary[a];
        const std::size_t w = binary[b];
        if (!flat_.disjoint(v, w)) continue;
        const bool v_low = flat_.max_child_order(v) <= flat_.min_child_order(w);
        const bool w_low = flat_.max_child_order(w) <= flat_.min_child_order(v);
        if (comparable_ok && !v_low && !w_low) {
          comparable_ok = false;
          fail(comparable, flat_, v, w,
               "children orders interleave between the two vertices");
        }
        if (deeper_ok && flat_.depth(v) != flat_.depth(w)) {
          const bool deeper_is_v = flat_.depth(v) > flat_.depth(w);
          if (!(deeper_is_v ? v_low : w_low)) {
            deeper_ok = false;
            fail(deeper, flat_, deeper_is_v ? v : w, deeper_is_v ? w : v,
                 "deeper vertex has a child larger than a child of the "
                 "shallower one");
          }
        }
      }
    }
    if (comparable_ok) pass(comparable);
    if (deeper_ok) pass(deeper);
    // Keep the report in the documented order.
    auto& v = report_.verdicts;
    auto first = v.end() - 2;
    if (first->check == deeper) std::iter_swap(first, first + 1);
  }

  void binary_top_two_levels() {
    constexpr std::string_view id = "binary_top_two_levels";
    for (std::size_t i = 0; i < flat_.size(); ++i) {
      if (flat_.order(i) < 18) continue;
      if (!flat_.is_binary(i)) {
        fail(id, flat_, i, kNone, "branch of order >= 18 without two children");
        return;
      }
      for (std::size_t c : flat_.kids(i)) {
        if (!flat_.is_binary(c)) {
          fail(id, flat_, c, i,
               "child of a branch of order >= 18 without two children");
          return;
        }
      }
    }
    pass(id);
  }

  void height_monotone_in_order() {
    constexpr std::string_view id = "height_monotone_in_order";
    const Flat& s = std_;
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (a != b && s.order(a) <= s.order(b) && s.height(a) > s.height(b)) {
          fail(id, s, a, b,
               "branch of order " + std::to_string(s.order(a)) +
                   " is taller than one of order " +
                   std::to_string(s.order(b)));
          return;
        }
      }
    }
    pass(id, "evaluated in standard form");
  }

  void no_order_6_branch() {
    constexpr std::string_view id = "no_order_6_branch";
    for (std::size_t i = 1; i < flat_.size(); ++i) {
      if (flat_.order(i) == 6) {
        fail(id, flat_, i, kNone, "proper branch of order 6");
        return;
      }
    }
    pass(id);
  }

  void order_3_inside_7_or_8() {
    constexpr std::string_view id = "order_3_inside_7_or_8";
    for (std::size_t i = 1; i < flat_.size(); ++i) {
      if (flat_.order(i) != 3) continue;
      const bool ok = flat_.has_proper_ancestor(i, [this](std::size_t a) {
        return flat_.order(a) == 7 || flat_.order(a) == 8;
      });
      if (!ok) {
        fail(id, flat_, i, kNone,
             "order-3 branch outside every branch of order 7 or 8");
        return;
      }
    }
    pass(id);
  }

  void forbidden_disjoint_pairs() {
    constexpr std::string_view id = "forbidden_disjoint_pairs";
    static const std::set<std::pair<std::size_t, std::size_t>> kForbidden{
        {7, 7},   {8, 8},   {11, 11}, {7, 5},   {8, 5},
        {8, 7},   {11, 10}, {16, 10}, {15, 11}, {16, 11}};
    for (std::size_t a = 0; a < flat_.size(); ++a) {
      for (std::size_t b = a + 1; b < flat_.size(); ++b) {
        if (!flat_.disjoint(a, b)) continue;
        const std::size_t big = std::max(flat_.order(a), flat_.order(b));
        const std::size_t small = std::min(flat_.order(a), flat_.order(b));
        if (kForbidden.count({big, small}) != 0) {
          fail(id, flat_, a, b,
               "disjoint branches of orders " + join_orders(big, small));
          return;
        }
      }
    }
    pass(id);
  }

  void small_star_checks() {
    constexpr std::string_view leaves_id = "leaves_in_small_stars";
    constexpr std::string_view mix_id = "no_3_with_5";
    constexpr std::string_view three_id = "at_most_two_order_3";
    if (n_ < 7) {
      for (auto id : {leaves_id, mix_id, three_id}) skip(id, "order below 7");
      return;
    }
    const Flat& s = std_;
    bool leaves_ok = true;
    for (std::size_t i = 0; i < s.size() && leaves_ok; ++i) {
      if (!s.is_leaf(i)) continue;
      const bool ok = s.has_proper_ancestor(i, [&s](std::size_t a) {
        return s.order(a) >= 3 && s.order(a) <= 5;
      });
      if (!ok) {
        leaves_ok = false;
        fail(leaves_id, s, i, kNone,
             "leaf outside every branch of order 3, 4 or 5");
      }
    }
    if (leaves_ok) pass(leaves_id, "evaluated in standard form");

    const auto threes = s.with_order(3);
    const auto fives = s.with_order(5);
    if (!threes.empty() && !fives.empty()) {
      fail(mix_id, s, threes.front(), fives.front(),
           "branches of order 3 and 5 coexist");
    } else {
      pass(mix_id, "evaluated in standard form");
    }

    if (threes.size() > 2) {
      fail(three_id, s, threes[2], kNone,
           std::to_string(threes.size()) + " branches of order 3");
    } else if (threes.size() == 2) {
      bool shared = false;
      for (std::size_t a : s.with_order(7)) {
        if (s.contains(a, threes[0]) && s.contains(a, threes[1])) {
          shared = true;
        }
      }
      if (shared) {
        pass(three_id, "evaluated in standard form");
      } else {
        fail(three_id, s, threes[0], threes[1],
             "two branches of order 3 not inside one branch of order 7");
      }
    } else {
      pass(three_id, "evaluated in standard form");
    }
  }

  void order_5_placement() {
    constexpr std::string_view id = "order_5_placement";
    if (!standard_applies(id, 6)) return;
    for (std::size_t i : flat_.with_order(5)) {
      const bool ok = flat_.has_proper_ancestor(i, [this](std::size_t a) {
        const std::size_t o = flat_.order(a);
        return o == 10 || o == 11 || o == 15 || o == 16;
      });
      if (!ok) {
        fail(id, flat_, i, kNone,
             "order-5 branch outside every branch of order 10, 11, 15 or 16");
        return;
      }
    }
    pass(id);
  }

  void at_most_two_order_5() {
    constexpr std::string_view id = "at_most_two_order_5";
    const auto fives = flat_.with_order(5);
    if (fives.size() > 2) {
      fail(id, flat_, fives[2], kNone,
           std::to_string(fives.size()) + " branches of order 5");
      return;
    }
    pass(id);
  }

  void completeness_checks() {
    constexpr std::string_view balanced_id = "root_heights_balanced";
    constexpr std::string_view levels_id = "leaves_on_last_two_levels";
    if (n_ < 7) {
      skip(balanced_id, "order below 7");
      skip(levels_id, "order below 7");
      return;
    }
    const Flat& s = std_;
    if (!s.is_binary(0)) {
      fail(balanced_id, s, 0, kNone, "root does not have two children");
    } else {
      const std::size_t a = s.kids(0)[0];
      const std::size_t b = s.kids(0)[1];
      const std::size_t ha = s.height(a);
      const std::size_t hb = s.height(b);
      if ((ha > hb ? ha - hb : hb - ha) > 1) {
        fail(balanced_id, s, a, b,
             "root branch heights " + join_orders(ha, hb));
      } else {
        pass(balanced_id, "evaluated in standard form");
      }
    }

    const std::size_t h = s.height(0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.is_leaf(i) && s.depth(i) + 1 < h) {
        fail(levels_id, s, i, kNone,
             "leaf at depth " + std::to_string(s.depth(i)) +
                 " in a tree of height " + std::to_string(h));
        return;
      }
    }
    pass(levels_id, "evaluated in standard form");
  }

  void residue_census() {
    constexpr std::string_view id = "residue_census";
    if (!standard_applies(id, 8)) return;
    const Flat& s = std_;
    const std::size_t residue = n_ % 5;
    std::vector<std::size_t> special;
    std::string expectation;
    switch (residue) {
      case 0:
      case 1: {
        special = s.with_order(5);
        const std::size_t want = residue == 0 ? 1 : 2;
        if (special.size() != want) {
          fail(id, s, special.size() > want ? special[want] : 0, kNone,
               "expected " + std::to_string(want) +
                   " branch(es) of order 5, found " +
                   std::to_string(special.size()));
          return;
        }
        break;
      }
      case 2:
        special = s.with_order(7);
        if (special.empty()) {
          fail(id, s, 0, kNone, "expected a branch of order 7");
          return;
        }
        break;
      case 3:
        special = s.with_order(3);
        if (special.size() != 1) {
          fail(id, s, special.size() > 1 ? special[1] : 0, kNone,
               "expected one branch of order 3, found " +
                   std::to_string(special.size()));
          return;
        }
        break;
      default:
        break;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!s.is_leaf(i)) continue;
      const bool ok = s.has_proper_ancestor(i, [&](std::size_t a) {
        return s.order(a) == 4 ||
               std::find(special.begin(), special.end(), a) != special.end();
      });
      if (!ok) {
        fail(id, s, i, kNone,
             "leaf outside the branches allowed for residue " +
                 std::to_string(residue));
        return;
      }
    }
    pass(id, "evaluated in standard form");
  }

  void branches_minimal() {
    constexpr std::string_view id = "branches_minimal";
    if (table_.max_order() < n_) {
      skip(id, "search table stops at order " +
                   std::to_string(table_.max_order()));
      return;
    }
    std::map<std::size_t, std::set<std::string>> minimal;
    for (std::size_t i = 0; i < flat_.size(); ++i) {
      const std::size_t k = flat_.order(i);
      auto it = minimal.find(k);
      if (it == minimal.end()) {
        std::set<std::string> forms;
        for (const auto& t : table_.at(k).minimal_trees) {
          forms.insert(serialize(t));
        }
        it = minimal.emplace(k, std::move(forms)).first;
      }
      if (it->second.count(serialize(flat_.branch(i))) == 0) {
        fail(id, flat_, i, kNone,
             "branch of order " + std::to_string(k) + " is not minimal");
        return;
      }
    }
    pass(id);
  }

  Flat flat_;
  Flat std_;
  const SearchTable& table_;
  std::size_t n_;
  AuditReport report_;
};

// Replaces [[*,*,*],*,*] by [[*,*],[*,*]] without reordering anything else,
// so every vertex outside a rewritten branch keeps its address.
RootedTree standard_form_in_place(const RootedTree& tree) {
  static const RootedTree kVariant = parse_tree("[[*,*,*],*,*]");
  static const RootedTree kStandard = parse_tree("[[*,*],[*,*]]");
  return rebuild_bottom_up(
      tree,
      [](const RootedTree& original, std::vector<RootedTree> kids) {
        if (original.order() == 7 && isomorphic(original, kVariant)) {
          return kStandard;
        }
        return RootedTree(std::move(kids));
      },
      [](const RootedTree& t) { return t.order() < 7; });
}

}  // namespace

bool AuditReport::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const AuditVerdict& v) { return v.passed; });
}

const AuditVerdict* AuditReport::find(std::string_view check) const {
  for (const auto& v : verdicts) {
    if (v.check == check) return &v;
  }
  return nullptr;
}

std::vector<const AuditVerdict*> AuditReport::failures() const {
  std::vector<const AuditVerdict*> out;
  for (const auto& v : verdicts) {
    if (!v.passed) out.push_back(&v);
  }
  return out;
}

std::span<const std::string_view> audit_check_ids() {
  static const auto kIds = [] {
    std::array<std::string_view, kChecks.size()> ids{};
    for (std::size_t i = 0; i < kChecks.size(); ++i) ids[i] = kChecks[i].id;
    return ids;
  }();
  return kIds;
}

std::string_view audit_check_description(std::string_view check) {
  for (const auto& info : kChecks) {
    if (info.id == check) return info.description;
  }
  return {};
}

AuditReport audit_structure(const RootedTree& tree, const SearchTable& table) {
  return Auditor(tree, standard_form_in_place(tree), table).run();
}

AuditReport audit_structure(const RootedTree& tree) {
  SearchOptions options;
  options.cross_check = false;
  return audit_structure(tree, search_table(tree.order(), options));
}

}  // namespace infima
