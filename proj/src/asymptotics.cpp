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

#include "infima/asymptotics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace infima {

namespace {

std::size_t bit_length(const BigInt& x) {
  return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

FixedReal unit(std::size_t scale) { return FixedReal::from_integer(1, scale); }

BoundsRow bounds_row(std::size_t n, const BigInt& m_n, const FixedReal& alpha) {
  BoundsRow row;
  row.n = n;
  row.m_n = m_n;
  row.precision_bits = alpha.scale_bits();

  const FixedReal power = alpha.pow(n + 1);
  bool decided = true;

  if (auto c = power.certified_ceil()) {
    row.lower = *c - 2;
    row.lower_holds = *row.lower <= m_n;
    row.lower_tight = *row.lower == m_n;
  } else {
    decided = false;
  }

  if (n >= 8) {
    if (auto f = power.mul_int(21).div_int(20).certified_floor()) {
      row.upper = *f - 4;
      row.upper_holds = m_n <= *row.upper;
    } else {
      row.upper_holds = false;
      decided = false;
    }
  }

  const std::size_t s = alpha.scale_bits();
  const FixedReal gap = FixedReal::from_integer(m_n + 2, s) - power -
                        (unit(s) / power).div_int(2);
  if (auto sign = gap.sign()) {
    row.sharp_lower_holds = *sign >= 0;
  } else {
    decided = false;
  }

  row.decided = decided;
  return row;
}

}  // namespace

std::vector<BigInt> x_sequence(std::size_t K, std::size_t cap) {
  if (K == 0) throw std::invalid_argument("x_sequence: K must be positive");
  if (K > cap) {
    throw std::out_of_range("x_sequence: K = " + std::to_string(K) +
                            " exceeds the cap " + std::to_string(cap));
  }
  std::vector<BigInt> xs{13};
  xs.reserve(K);
  while (xs.size() < K) xs.push_back(xs.back() * xs.back() - 1);
  return xs;
}

FixedReal compute_beta(std::size_t precision_bits) {
  if (precision_bits < 64) {
    throw std::invalid_argument("compute_beta: need at least 64 bits");
  }
  const std::size_t wp = precision_bits + 32;
  // Smallest K with x_K^-2 <= 2^-(precision_bits + 40).
  BigInt x = 13;
  std::size_t K = 1;
  while (2 * (bit_length(x) - 1) < precision_bits + 40) {
    if (++K > kDefaultXCap) {
      throw std::range_error("compute_beta: " +
                             std::to_string(precision_bits) +
                             " bits need more than " +
                             std::to_string(kDefaultXCap) + " terms of x_k");
    }
    x = x * x - 1;
  }

  // 2^-K ln x_K overshoots beta by at most 1.01 * 2^-K * x_K^-2, which is
  // below 2^(wp+1) / x_K^2 ulps at scale wp + K.
  const FixedReal log_x = ln_fixed(x, wp);
  BigInt tail;
  mpz_cdiv_q(tail.get_mpz_t(), BigInt(BigInt(1) << (wp + 1)).get_mpz_t(),
             BigInt(x * x).get_mpz_t());
  const FixedReal shifted = log_x.mul_pow2(-static_cast<long>(K));
  const FixedReal beta(shifted.mantissa(), shifted.scale_bits(),
                       shifted.error_ulps() + tail);
  return beta.rescale(precision_bits);
}

FixedReal compute_alpha(std::size_t precision_bits) {
  const FixedReal beta = compute_beta(precision_bits + 16);
  return exp_fixed(beta.mul_int(2).div_int(5), precision_bits + 8)
      .rescale(precision_bits);
}

SandwichRow check_sandwich(std::size_t k, std::size_t max_bits) {
  if (k == 0) throw std::invalid_argument("check_sandwich: k must be positive");
  SandwichRow row;
  row.k = k;
  row.x_k = x_sequence(k, std::max(k, kDefaultXCap)).back();

  for (std::size_t bits = kDefaultPrecisionBits; bits <= max_bits; bits *= 2) {
    // X_k < 2^(2^(k+1)), so beta needs that many extra bits.
    const std::size_t beta_bits = bits + (std::size_t{1} << (k + 1)) + k + 32;
    const FixedReal beta = compute_beta(beta_bits);
    const FixedReal big_x =
        exp_fixed(beta.mul_pow2(static_cast<long>(k)), bits + 16);
    const FixedReal inverse = unit(bits + 16) / big_x;
    const auto low = compare(big_x + inverse.div_int(2), row.x_k);
    const auto high = compare(big_x + inverse, row.x_k);
    if (low && high) {
      row.lower_holds = *low <= 0;
      row.upper_holds = *high >= 0;
      row.decided = true;
      row.precision_bits = bits;
      return row;
    }
  }
  row.precision_bits = max_bits;
  return row;
}

bool BoundsReport::all_decided() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const BoundsRow& r) { return r.decided; });
}

bool BoundsReport::all_hold() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const BoundsRow& r) { return r.holds(); });
}

std::vector<std::size_t> BoundsReport::tight_orders() const {
  std::vector<std::size_t> out;
  for (const auto& r : rows) {
    if (r.decided && r.lower_tight) out.push_back(r.n);
  }
  return out;
}

BoundsReport verify_bounds(const SearchTable& table, const FixedReal& alpha) {
  BoundsReport report;
  for (const auto& record : table.records) {
    report.rows.push_back(bounds_row(record.order, record.min_count, alpha));
  }
  return report;
}

BoundsReport verify_bounds(const SearchTable& table, std::size_t max_bits) {
  std::size_t bits = kDefaultPrecisionBits;
  BoundsReport report = verify_bounds(table, compute_alpha(bits));
  while (!report.all_decided() && bits * 2 <= max_bits) {
    bits *= 2;
    const FixedReal alpha = compute_alpha(bits);
    for (auto& row : report.rows) {
      if (!row.decided) row = bounds_row(row.n, row.m_n, alpha);
    }
  }
  return report;
}

std::vector<RatioPoint> ratio_series(const SearchTable& table,
                                     const FixedReal& alpha) {
  std::vector<RatioPoint> out;
  const std::size_t s = alpha.scale_bits();
  for (const auto& record : table.records) {
    const FixedReal ratio = FixedReal::from_integer(record.min_count, s) /
                            alpha.pow(record.order + 1);
    out.push_back({record.order, ratio.to_decimal(12), ratio.to_double()});
  }
  return out;
}

}  // namespace infima
