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

// Reference computations that share no code with the library. Tests compare
// library results against these.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace infima::testing {

/// Number of unlabeled rooted trees with n vertices, for n = 0..max_n, from
/// the Euler transform recurrence
///   (n - 1) a(n) = sum_{k=1}^{n-1} (sum_{d | k} d a(d)) a(n - k).
inline std::vector<mpz_class> rooted_tree_counts(std::size_t max_n) {
  std::vector<mpz_class> a(max_n + 1, 0);
  if (max_n >= 1) a[1] = 1;
  std::vector<mpz_class> s(max_n + 1, 0);  // s[k] = sum_{d | k} d a(d)
  for (std::size_t n = 2; n <= max_n; ++n) {
    const std::size_t k_new = n - 1;
    for (std::size_t d = 1; d <= k_new; ++d) {
      if (k_new % d == 0) s[k_new] += mpz_class(static_cast<unsigned long>(d)) * a[d];
    }
    mpz_class total = 0;
    for (std::size_t k = 1; k <= n - 1; ++k) total += s[k] * a[n - k];
    a[n] = total / static_cast<unsigned long>(n - 1);
  }
  return a;
}

/// I(P_n) = 2^n - 1 for the path rooted at an end.
inline mpz_class path_count(std::size_t n) {
  return (mpz_class(1) << static_cast<mp_bitcnt_t>(n)) - 1;
}

/// I(S_n) = 2^(n-1) + n - 1 for the star rooted at its centre.
inline mpz_class star_count(std::size_t n) {
  return (mpz_class(1) << static_cast<mp_bitcnt_t>(n - 1)) +
         static_cast<unsigned long>(n - 1);
}

/// Tree as a parent array: parent[0] is unused, parent[i] < i otherwise.
using ParentArray = std::vector<std::size_t>;

inline ParentArray random_parent_array(std::size_t n, std::mt19937_64& rng) {
  ParentArray p(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    p[i] = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
  }
  return p;
}

/// Counts nonempty vertex sets closed under lowest common ancestors by
/// checking every pair of every subset. Exponential; n <= 20.
inline mpz_class brute_force_closed_sets(const ParentArray& parent) {
  const std::size_t n = parent.size();
  std::vector<std::size_t> depth(n, 0);
  for (std::size_t i = 1; i < n; ++i) depth[i] = depth[parent[i]] + 1;
  std::vector<std::vector<std::size_t>> lca(n, std::vector<std::size_t>(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t a = u, b = v;
      while (depth[a] > depth[b]) a = parent[a];
      while (depth[b] > depth[a]) b = parent[b];
      while (a != b) {
        a = parent[a];
        b = parent[b];
      }
      lca[u][v] = a;
    }
  }
  std::uint64_t count = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    bool closed = true;
    for (std::size_t u = 0; u < n && closed; ++u) {
      if (!(mask >> u & 1)) continue;
      for (std::size_t v = u + 1; v < n; ++v) {
        if ((mask >> v & 1) && !(mask >> lca[u][v] & 1)) {
          closed = false;
          break;
        }
      }
    }
    count += closed;
  }
  return mpz_class(static_cast<unsigned long>(count));
}

/// Bracket string of a parent array, children in index order.
inline std::string parent_array_to_brackets(const ParentArray& parent,
                                            std::size_t v = 0) {
  std::vector<std::size_t> kids;
  for (std::size_t i = v + 1; i < parent.size(); ++i) {
    if (parent[i] == v) kids.push_back(i);
  }
  if (kids.empty()) return "*";
  std::string out = "[";
  for (std::size_t k = 0; k < kids.size(); ++k) {
    if (k) out += ",";
    out += parent_array_to_brackets(parent, kids[k]);
  }
  return out + "]";
}

}  // namespace infima::testing
