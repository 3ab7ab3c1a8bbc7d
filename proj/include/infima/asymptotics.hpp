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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "infima/counting.hpp"
#include "infima/fixed_real.hpp"
#include "infima/search.hpp"

namespace infima {

inline constexpr std::size_t kDefaultXCap = 24;
inline constexpr std::size_t kDefaultPrecisionBits = 256;
/// Ceiling for automatic precision escalation.
inline constexpr std::size_t kMaxPrecisionBits = std::size_t{1} << 15;

/// x_1 .. x_K with x_1 = 13 and x_{k+1} = x_k^2 - 1; element k-1 is x_k.
/// x_k is the J value of the minimal tree of order 5 * 2^(k-1) - 1.
/// Throws std::invalid_argument for K == 0 and std::out_of_range above `cap`.
std::vector<BigInt> x_sequence(std::size_t K, std::size_t cap = kDefaultXCap);

/// beta = lim 2^-k ln x_k, from 2^-K ln x_K minus a tail in
/// [0, 1.01 * 2^-K * x_K^-2], with K large enough that the tail is below
/// 2^-(precision_bits + 40). Result at scale precision_bits with a certified
/// error of a few ulps. Throws std::invalid_argument below 64 bits and
/// std::range_error when K would exceed the x-sequence cap.
FixedReal compute_beta(std::size_t precision_bits = kDefaultPrecisionBits);

/// alpha = exp(2 beta / 5), same contract as compute_beta().
FixedReal compute_alpha(std::size_t precision_bits = kDefaultPrecisionBits);

/// X_k + 1/(2 X_k) <= x_k <= X_k + 1/X_k with X_k = exp(2^k beta).
struct SandwichRow {
  std::size_t k = 0;
  BigInt x_k;
  bool lower_holds = false;
  bool upper_holds = false;
  /// Both comparisons decided within the precision limit.
  bool decided = false;
  /// Precision (bits after the point) at which they were decided.
  std::size_t precision_bits = 0;
};

/// Decides both inequalities for one k, doubling precision from 256 bits
/// until decided or `max_bits` is exceeded.
SandwichRow check_sandwich(std::size_t k,
                           std::size_t max_bits = kMaxPrecisionBits);

/// Lower bound ceil(alpha^(n+1)) - 2 <= m_n; for n >= 8 also the upper bound
/// m_n <= floor(21/20 alpha^(n+1)) - 4; and the sharper
/// m_n + 2 >= alpha^(n+1) + 1 / (2 alpha^(n+1)).
struct BoundsRow {
  std::size_t n = 0;
  BigInt m_n;
  /// ceil(alpha^(n+1)) - 2 when decided.
  std::optional<BigInt> lower;
  /// floor(21/20 alpha^(n+1)) - 4 when n >= 8 and decided.
  std::optional<BigInt> upper;
  bool lower_holds = false;
  /// nullopt for n < 8.
  std::optional<bool> upper_holds;
  bool sharp_lower_holds = false;
  /// m_n equals the lower bound.
  bool lower_tight = false;
  /// Every floor, ceiling and comparison above was decided.
  bool decided = false;
  std::size_t precision_bits = 0;

  bool holds() const {
    return decided && lower_holds && upper_holds.value_or(true) &&
           sharp_lower_holds;
  }
};

struct BoundsReport {
  std::vector<BoundsRow> rows;

  bool all_decided() const;
  bool all_hold() const;
  /// Orders n at which the lower bound is attained.
  std::vector<std::size_t> tight_orders() const;
};

/// One row per order of `table`, decided with the given alpha only.
BoundsReport verify_bounds(const SearchTable& table, const FixedReal& alpha);

/// As above, recomputing alpha at doubled precision (from 256 bits up to
/// `max_bits`) for rows that stay undecided.
BoundsReport verify_bounds(const SearchTable& table,
                           std::size_t max_bits = kMaxPrecisionBits);

struct RatioPoint {
  std::size_t n = 0;
  /// alpha^(-n-1) m_n truncated to 12 significant digits.
  std::string decimal;
  double value = 0.0;
};

std::vector<RatioPoint> ratio_series(const SearchTable& table,
                                     const FixedReal& alpha);

}  // namespace infima
