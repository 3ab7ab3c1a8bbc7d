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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <vector>

#include "infima/asymptotics.hpp"
#include "infima/audit.hpp"
#include "infima/construction.hpp"
#include "infima/counting.hpp"
#include "infima/search.hpp"
#include "infima/tree.hpp"

namespace py = pybind11;
using namespace infima;

namespace {

py::object to_int(const BigInt& v) {
  const std::string digits = v.get_str();
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(digits.c_str(), nullptr, 10));
}

std::vector<std::string> serialize_all(const std::vector<RootedTree>& trees) {
  std::vector<std::string> out;
  out.reserve(trees.size());
  for (const auto& t : trees) out.push_back(serialize(t));
  return out;
}

SearchTable table_for(std::size_t max_n, const std::string& mode) {
  SearchOptions options;
  options.mode = parse_search_mode(mode);
  options.exhaustive_cap = exhaustive_cap_from_env();
  return search_table(max_n, options);
}

py::object optional_path(const std::optional<VertexId>& v) {
  return v ? py::cast(v->path) : py::none();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Infima-closed set counts, minimal trees and the constant alpha.";

  py::register_exception<ParseError>(m, "TreeParseError", PyExc_ValueError);
  py::register_exception<SearchMismatch>(m, "SearchMismatch",
                                         PyExc_RuntimeError);

  m.def("canonical",
        [](const std::string& tree) {
          return serialize(canonicalize(parse_tree(tree)));
        },
        py::arg("tree"), "Canonical bracket form of a tree.");

  m.def("order", [](const std::string& tree) { return parse_tree(tree).order(); },
        py::arg("tree"));
  m.def("height",
        [](const std::string& tree) { return parse_tree(tree).height(); },
        py::arg("tree"));

  m.def("count",
        [](const std::string& tree) {
          const CountProfile p = count_ics(parse_tree(tree));
          py::dict d;
          d["I"] = to_int(p.i_total);
          d["I0"] = to_int(p.i_without_root);
          d["I1"] = to_int(p.i_with_root);
          d["J"] = to_int(p.j_value);
          return d;
        },
        py::arg("tree"), "Dict with keys I, I0, I1 and J.");

  m.def("oracle_count",
        [](const std::string& tree, std::size_t limit) {
          return to_int(oracle_count(parse_tree(tree), limit));
        },
        py::arg("tree"), py::arg("limit") = kDefaultOracleLimit,
        "I by brute-force subset enumeration.");

  m.def("count_required",
        [](const std::string& tree,
           const std::vector<std::vector<std::size_t>>& required) {
          std::vector<VertexId> ids;
          for (const auto& path : required) ids.push_back(VertexId{path});
          return to_int(count_required(parse_tree(tree), ids));
        },
        py::arg("tree"), py::arg("required"),
        "Closed sets containing every vertex given as a child-index path.");

  m.def("generate_all_trees",
        [](std::size_t n) { return serialize_all(generate_all_trees(n)); },
        py::arg("n"));

  m.def("minimal_table",
        [](std::size_t max_n, const std::string& mode) {
          py::list rows;
          for (const auto& r : table_for(max_n, mode).records) {
            py::dict d;
            d["order"] = r.order;
            d["m_n"] = to_int(r.min_count);
            d["trees"] = serialize_all(r.minimal_trees);
            rows.append(d);
          }
          return rows;
        },
        py::arg("max_n"), py::arg("mode") = "pruned",
        "One dict per order 1..max_n with keys order, m_n and trees.");

  m.def("construct_minimal",
        [](std::size_t n, bool standard_form) {
          std::vector<RootedTree> trees = construct_minimal(n);
          if (standard_form) {
            for (auto& t : trees) t = to_standard_form(t);
            sort_canonical(trees);
            trees.erase(std::unique(trees.begin(), trees.end()), trees.end());
          }
          return serialize_all(trees);
        },
        py::arg("n"), py::arg("standard_form") = false);

  m.def("audit",
        [](const std::string& tree) {
          const AuditReport report = audit_structure(parse_tree(tree));
          py::list verdicts;
          for (const auto& v : report.verdicts) {
            py::dict d;
            d["check"] = v.check;
            d["applicable"] = v.applicable;
            d["passed"] = v.passed;
            d["witness"] = optional_path(v.witness);
            d["partner"] = optional_path(v.partner);
            d["detail"] = v.detail;
            verdicts.append(d);
          }
          py::dict out;
          out["passed"] = report.passed();
          out["verdicts"] = verdicts;
          return out;
        },
        py::arg("tree"), "Structural checks for minimal trees.");

  m.def("audit_check_ids", [] {
    std::vector<std::string> ids;
    for (auto id : audit_check_ids()) ids.emplace_back(id);
    return ids;
  });

  m.def("alpha",
        [](std::size_t digits) {
          const auto bits = std::max<std::size_t>(128, digits * 4 + 40);
          return compute_alpha(bits).to_decimal(digits);
        },
        py::arg("digits") = 25, "alpha truncated to significant digits.");

  m.def("beta",
        [](std::size_t digits) {
          const auto bits = std::max<std::size_t>(128, digits * 4 + 40);
          return compute_beta(bits).to_decimal(digits);
        },
        py::arg("digits") = 25, "beta truncated to significant digits.");

  m.def("x_sequence",
        [](std::size_t k) {
          py::list out;
          for (const auto& x : x_sequence(k)) out.append(to_int(x));
          return out;
        },
        py::arg("k"), "x_1 .. x_k.");

  m.def("verify_bounds",
        [](std::size_t max_n) {
          const BoundsReport report = verify_bounds(table_for(max_n, "pruned"));
          py::list rows;
          for (const auto& r : report.rows) {
            py::dict d;
            d["n"] = r.n;
            d["m_n"] = to_int(r.m_n);
            d["lower"] = r.lower ? to_int(*r.lower) : py::none();
            d["upper"] = r.upper ? to_int(*r.upper) : py::none();
            d["holds"] = r.holds();
            d["lower_tight"] = r.lower_tight;
            d["precision_bits"] = r.precision_bits;
            rows.append(d);
          }
          py::dict out;
          out["all_hold"] = report.all_hold();
          out["tight_orders"] = report.tight_orders();
          out["rows"] = rows;
          return out;
        },
        py::arg("max_n"));

  m.def("ratio_series",
        [](std::size_t max_n) {
          std::vector<std::pair<std::size_t, double>> out;
          for (const auto& p : ratio_series(table_for(max_n, "pruned"),
                                            compute_alpha(kDefaultPrecisionBits))) {
            out.emplace_back(p.n, p.value);
          }
          return out;
        },
        py::arg("max_n"), "(n, alpha^(-n-1) m_n) pairs.");
}
