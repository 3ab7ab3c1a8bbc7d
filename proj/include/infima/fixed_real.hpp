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

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>

namespace infima {

/// Fixed-point real with a certified error bound.
///
/// Represents every real in
///   [(mantissa - error_ulps) * 2^-scale_bits, (mantissa + error_ulps) * 2^-scale_bits].
/// Each operation returns an interval that contains every possible exact
/// result for operands taken from the input intervals; rounding is always
/// charged to error_ulps.
class FixedReal {
 public:
  /// Exact zero.
  FixedReal() = default;
  FixedReal(mpz_class mantissa, std::size_t scale_bits,
            mpz_class error_ulps = 0);

  static FixedReal from_integer(const mpz_class& value,
                                std::size_t scale_bits);
  /// num / den rounded to scale_bits; one ulp of error when inexact.
  static FixedReal from_ratio(const mpz_class& num, const mpz_class& den,
                              std::size_t scale_bits);

  const mpz_class& mantissa() const { return mantissa_; }
  std::size_t scale_bits() const { return scale_bits_; }
  const mpz_class& error_ulps() const { return error_ulps_; }
  bool is_exact() const { return error_ulps_ == 0; }

  /// Endpoints of the interval in units of 2^-scale_bits.
  mpz_class lower_mantissa() const { return mantissa_ - error_ulps_; }
  mpz_class upper_mantissa() const { return mantissa_ + error_ulps_; }

  /// Number of correct bits after the binary point that the error bound
  /// guarantees: the error is below 2^-accuracy_bits(). May be negative.
  long accuracy_bits() const;

  /// Same value at another scale. Refining is exact; coarsening rounds to
  /// nearest and adds an ulp.
  FixedReal rescale(std::size_t scale_bits) const;

  /// Multiplication by 2^k; exact.
  FixedReal mul_pow2(long k) const;
  FixedReal mul_int(const mpz_class& k) const;
  /// Division by a nonzero integer; one extra ulp for rounding.
  FixedReal div_int(const mpz_class& k) const;
  FixedReal abs() const;

  friend FixedReal operator-(const FixedReal& a);
  friend FixedReal operator+(const FixedReal& a, const FixedReal& b);
  friend FixedReal operator-(const FixedReal& a, const FixedReal& b);
  /// Result at the larger of the two scales.
  friend FixedReal operator*(const FixedReal& a, const FixedReal& b);
  /// Result at the larger of the two scales. Throws std::domain_error when
  /// the divisor interval contains zero.
  friend FixedReal operator/(const FixedReal& a, const FixedReal& b);

  /// -1, 0 or 1 when every point of the interval has that sign
  /// (0 only for an exact zero), nullopt otherwise.
  std::optional<int> sign() const;
  /// Sign of a - b when decided.
  friend std::optional<int> compare(const FixedReal& a, const FixedReal& b);
  friend std::optional<int> compare(const FixedReal& a, const mpz_class& b);

  /// floor / ceil of the value when constant over the whole interval.
  std::optional<mpz_class> certified_floor() const;
  std::optional<mpz_class> certified_ceil() const;

  /// Integer power by repeated squaring, n >= 0.
  FixedReal pow(unsigned long n) const;

  /// Midpoint truncated toward zero to `significant_digits` significant
  /// decimal digits, e.g. "1.66928".
  std::string to_decimal(std::size_t significant_digits) const;
  /// Bound on the absolute error as "2^-k" (k = accuracy_bits()), or "0".
  std::string error_bound_string() const;
  double to_double() const;

 private:
  mpz_class mantissa_ = 0;
  std::size_t scale_bits_ = 0;
  mpz_class error_ulps_ = 0;
};

/// Natural logarithm of a positive integer, certified, at `scale_bits`.
/// Throws std::domain_error unless x > 0.
FixedReal ln_fixed(const mpz_class& x, std::size_t scale_bits);

/// Natural logarithm of every point of a positive interval. Throws
/// std::domain_error unless the lower end is positive.
FixedReal ln_fixed(const FixedReal& x, std::size_t scale_bits);

/// exp over the whole input interval, at `scale_bits`. Requires
/// |x| < 2^20 and an input error below 1; throws std::domain_error
/// otherwise.
FixedReal exp_fixed(const FixedReal& x, std::size_t scale_bits);

}  // namespace infima
