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

#include "infima/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "infima/asymptotics.hpp"
#include "infima/audit.hpp"
#include "infima/construction.hpp"
#include "infima/counting.hpp"
#include "infima/search.hpp"
#include "infima/tree.hpp"

namespace infima::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kGrammar =
    "Trees use the bracket grammar  tree := \"*\" | \"[\" tree (\",\" tree)* "
    "\"]\"\n"
    "e.g. \"*\" (one vertex), \"[*,*,*]\" (a root with three leaves).";

constexpr const char* kSynopsis =
    "usage:\n"
    "  infima count <tree> [--json]\n"
    "  infima oracle <tree> [--limit N] [--json]\n"
    "  infima search --max-n N [--mode exhaustive|pruned] [--audit] [--json]\n"
    "  infima construct --n N [--standard-form] [--json]\n"
    "  infima alpha --digits D [--json]\n"
    "  infima bounds --max-n N [--json]\n"
    "  infima ratio --max-n N [--csv PATH]\n";

void print_usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n\n" << kSynopsis << "\n" << kGrammar
      << "\n";
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string big(const BigInt& v) { return v.get_str(); }

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

RootedTree parse_argument(const std::string& text) {
  try {
    return parse_tree(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("invalid tree: ") + e.what());
  }
}

SearchTable pruned_table(std::size_t max_n) {
  SearchOptions options;
  options.exhaustive_cap = exhaustive_cap_from_env();
  return search_table(max_n, options);
}

Json verdict_json(const AuditVerdict& v) {
  Json j;
  j["check"] = v.check;
  j["applicable"] = v.applicable;
  j["passed"] = v.passed;
  j["witness"] = v.witness ? Json(v.witness->to_string()) : Json(nullptr);
  j["partner"] = v.partner ? Json(v.partner->to_string()) : Json(nullptr);
  j["detail"] = v.detail;
  return j;
}

// --- count / oracle -------------------------------------------------------

int run_count(const std::string& text, bool json, std::ostream& out) {
  const RootedTree tree = parse_argument(text);
  const CountProfile p = count_ics(tree);
  if (json) {
    Json j;
    j["tree"] = serialize(tree);
    j["order"] = tree.order();
    j["I"] = big(p.i_total);
    j["I0"] = big(p.i_without_root);
    j["I1"] = big(p.i_with_root);
    j["J"] = big(p.j_value);
    emit_json(out, j);
  } else {
    out << "I=" << p.i_total << "\n"
        << "I0=" << p.i_without_root << "\n"
        << "I1=" << p.i_with_root << "\n"
        << "J=" << p.j_value << "\n";
  }
  return kExitOk;
}

int run_oracle(const std::string& text, std::size_t limit, bool json,
               std::ostream& out) {
  const RootedTree tree = parse_argument(text);
  const BigInt count = oracle_count(tree, limit);
  if (json) {
    Json j;
    j["tree"] = serialize(tree);
    j["order"] = tree.order();
    j["I"] = big(count);
    emit_json(out, j);
  } else {
    out << "I=" << count << "\n";
  }
  return kExitOk;
}

// --- search ---------------------------------------------------------------

int run_search(std::size_t max_n, const std::string& mode_text, bool audit,
               bool json, std::ostream& out) {
  SearchOptions options;
  options.mode = parse_search_mode(mode_text);
  options.exhaustive_cap = exhaustive_cap_from_env();
  const SearchTable table = search_table(max_n, options);

  bool audit_ok = true;
  Json records = Json::array();
  std::ostringstream tsv;
  tsv << "order\tm_n\tcount\ttrees" << (audit ? "\taudit" : "") << "\n";

  for (const auto& r : table.records) {
    Json rec;
    rec["order"] = r.order;
    rec["m_n"] = big(r.min_count);
    rec["count"] = r.minimal_trees.size();
    Json trees = Json::array();
    std::string tree_list;
    for (const auto& t : r.minimal_trees) {
      trees.push_back(serialize(t));
      if (!tree_list.empty()) tree_list += " ";
      tree_list += serialize(t);
    }
    rec["trees"] = trees;
    tsv << r.order << "\t" << r.min_count << "\t" << r.minimal_trees.size()
        << "\t" << tree_list;

    if (audit) {
      Json audits = Json::array();
      std::string cell;
      for (std::size_t i = 0; i < r.minimal_trees.size(); ++i) {
        const AuditReport report = audit_structure(r.minimal_trees[i], table);
        Json a;
        a["tree"] = serialize(r.minimal_trees[i]);
        a["passed"] = report.passed();
        Json verdicts = Json::array();
        for (const auto& v : report.verdicts) verdicts.push_back(verdict_json(v));
        a["verdicts"] = verdicts;
        audits.push_back(a);
        for (const auto* f : report.failures()) {
          audit_ok = false;
          if (!cell.empty()) cell += ";";
          cell += "tree" + std::to_string(i) + ":" + f->check + "@" +
                  f->witness->to_string();
        }
      }
      rec["audit"] = audits;
      tsv << "\t" << (cell.empty() ? "pass" : cell);
    }
    tsv << "\n";
    records.push_back(rec);
  }

  if (json) {
    Json j;
    j["mode"] = std::string(to_string(table.mode));
    j["max_n"] = max_n;
    if (audit) j["audit_passed"] = audit_ok;
    j["records"] = records;
    emit_json(out, j);
  } else {
    out << tsv.str();
  }
  return audit_ok ? kExitOk : kExitVerificationFailed;
}

// --- construct ------------------------------------------------------------

int run_construct(std::size_t n, bool standard, bool json,
                  std::ostream& out) {
  std::vector<RootedTree> trees = construct_minimal(n);
  if (standard) {
    for (auto& t : trees) t = to_standard_form(t);
    sort_canonical(trees);
    trees.erase(std::unique(trees.begin(), trees.end()), trees.end());
  }
  Json list = Json::array();
  for (const auto& t : trees) {
    const BigInt count = count_ics(t).i_total;
    if (json) {
      Json j;
      j["tree"] = serialize(t);
      j["I"] = big(count);
      list.push_back(j);
    } else {
      out << serialize(t) << "\t" << count << "\n";
    }
  }
  if (json) {
    Json j;
    j["n"] = n;
    j["standard_form"] = standard;
    j["trees"] = list;
    emit_json(out, j);
  }
  return kExitOk;
}

// --- alpha ----------------------------------------------------------------

int run_alpha(std::size_t digits, bool json, std::ostream& out) {
  const auto bits = static_cast<std::size_t>(
      std::ceil(static_cast<double>(digits) * 3.3219280948873623) + 40);
  const std::size_t precision = std::max<std::size_t>(bits, 128);
  const FixedReal alpha = compute_alpha(precision);
  const FixedReal beta = compute_beta(precision);
  if (json) {
    Json j;
    j["digits"] = digits;
    j["precision_bits"] = precision;
    j["alpha"] = alpha.to_decimal(digits);
    j["alpha_error"] = alpha.error_bound_string();
    j["beta"] = beta.to_decimal(digits);
    j["beta_error"] = beta.error_bound_string();
    emit_json(out, j);
  } else {
    out << "alpha=" << alpha.to_decimal(digits) << "\t(|error| < "
        << alpha.error_bound_string() << ")\n"
        << "beta=" << beta.to_decimal(digits) << "\t(|error| < "
        << beta.error_bound_string() << ")\n";
  }
  return kExitOk;
}

// --- bounds / ratio -------------------------------------------------------

std::string optional_big(const std::optional<BigInt>& v) {
  return v ? big(*v) : std::string("?");
}

int run_bounds(std::size_t max_n, bool json, std::ostream& out) {
  const BoundsReport report = verify_bounds(pruned_table(max_n));
  if (json) {
    Json rows = Json::array();
    for (const auto& r : report.rows) {
      Json j;
      j["n"] = r.n;
      j["lower"] = r.lower ? Json(big(*r.lower)) : Json(nullptr);
      j["m_n"] = big(r.m_n);
      j["upper"] = r.upper ? Json(big(*r.upper)) : Json(nullptr);
      j["lower_holds"] = r.lower_holds;
      j["upper_holds"] =
          r.upper_holds ? Json(*r.upper_holds) : Json(nullptr);
      j["sharp_lower_holds"] = r.sharp_lower_holds;
      j["lower_tight"] = r.lower_tight;
      j["decided"] = r.decided;
      j["precision_bits"] = r.precision_bits;
      rows.push_back(j);
    }
    Json j;
    j["max_n"] = max_n;
    j["all_hold"] = report.all_hold();
    j["rows"] = rows;
    emit_json(out, j);
  } else {
    out << "n\tlower\tm_n\tupper\tlower_tight\n";
    for (const auto& r : report.rows) {
      out << r.n << "\t" << optional_big(r.lower) << "\t" << r.m_n << "\t"
          << (r.n >= 8 ? optional_big(r.upper) : std::string("-")) << "\t"
          << (r.lower_tight ? "yes" : "no") << "\n";
    }
  }
  return report.all_hold() ? kExitOk : kExitVerificationFailed;
}

int run_ratio(std::size_t max_n, const std::string& csv_path,
              std::ostream& out) {
  const auto points =
      ratio_series(pruned_table(max_n), compute_alpha(kDefaultPrecisionBits));
  std::ostringstream csv;
  csv << "n,ratio\n";
  for (const auto& p : points) csv << p.n << "," << p.decimal << "\n";
  if (csv_path.empty()) {
    out << csv.str();
    return kExitOk;
  }
  std::ofstream file(csv_path);
  if (!file) throw UsageError("cannot open '" + csv_path + "' for writing");
  file << csv.str();
  if (!file.flush()) throw std::runtime_error("failed writing " + csv_path);
  out << "wrote " << points.size() << " rows to " << csv_path << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Infima-closed sets in rooted trees: exact counts, minimal "
               "trees and the growth constant alpha.",
               "infima"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  app.set_version_flag("--version", "infima 0.1.0");

  bool json = false;
  std::string tree_text;
  std::size_t limit = kDefaultOracleLimit;
  std::size_t max_n = 0;
  std::size_t n = 0;
  std::size_t digits = 0;
  std::string mode = "pruned";
  std::string csv_path;
  bool audit = false;
  bool standard = false;

  auto* count = app.add_subcommand("count", "I, I0, I1 and J of one tree");
  count->add_option("tree", tree_text, "tree in bracket notation")->required();
  count->add_flag("--json", json, "print one JSON object");

  auto* oracle =
      app.add_subcommand("oracle", "I by brute-force subset enumeration");
  oracle->add_option("tree", tree_text, "tree in bracket notation")
      ->required();
  oracle->add_option("--limit", limit, "largest accepted order (<= 62)")
      ->capture_default_str();
  oracle->add_flag("--json", json, "print one JSON object");

  auto* search = app.add_subcommand("search", "m_n and all minimal trees");
  search->add_option("--max-n", max_n, "largest order")
      ->required()
      ->check(CLI::PositiveNumber);
  search->add_option("--mode", mode, "exhaustive or pruned")
      ->check(CLI::IsMember({"exhaustive", "pruned"}))
      ->capture_default_str();
  search->add_flag("--audit", audit, "run the structural audit");
  search->add_flag("--json", json, "print JSON instead of TSV");

  auto* construct =
      app.add_subcommand("construct", "minimal trees of order n, no search");
  construct->add_option("--n", n, "order")
      ->required()
      ->check(CLI::PositiveNumber);
  construct->add_flag("--standard-form", standard,
                      "rewrite [[*,*,*],*,*] branches as [[*,*],[*,*]]");
  construct->add_flag("--json", json, "print one JSON object");

  auto* alpha = app.add_subcommand("alpha", "certified alpha and beta");
  alpha->add_option("--digits", digits, "significant digits (truncated)")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  alpha->add_flag("--json", json, "print one JSON object");

  auto* bounds =
      app.add_subcommand("bounds", "check the two-sided bounds on m_n");
  bounds->add_option("--max-n", max_n, "largest order")
      ->required()
      ->check(CLI::PositiveNumber);
  bounds->add_flag("--json", json, "print JSON instead of TSV");

  auto* ratio = app.add_subcommand("ratio", "alpha^(-n-1) m_n as CSV");
  ratio->add_option("--max-n", max_n, "largest order")
      ->required()
      ->check(CLI::PositiveNumber);
  ratio->add_option("--csv", csv_path, "write the CSV here, not to stdout");

  std::vector<std::string> argv_storage{"infima"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    print_usage_error(err, e.what());
    return kExitUsage;
  }

  try {
    if (count->parsed()) return run_count(tree_text, json, out);
    if (oracle->parsed()) return run_oracle(tree_text, limit, json, out);
    if (search->parsed()) return run_search(max_n, mode, audit, json, out);
    if (construct->parsed()) return run_construct(n, standard, json, out);
    if (alpha->parsed()) return run_alpha(digits, json, out);
    if (bounds->parsed()) return run_bounds(max_n, json, out);
    if (ratio->parsed()) return run_ratio(max_n, csv_path, out);
  } catch (const UsageError& e) {
    print_usage_error(err, e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    print_usage_error(err, e.what());
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    print_usage_error(err, e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  print_usage_error(err, "no subcommand");
  return kExitUsage;
}

}  // namespace infima::cli
