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

#include "infima/fixed_real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace infima {

namespace {

mpz_class shl(const mpz_class& x, std::size_t k) {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

mpz_class pow2(std::size_t k) { return shl(mpz_class(1), k); }

mpz_class floor_shr(const mpz_class& x, std::size_t k) {
  mpz_class r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

mpz_class ceil_shr(const mpz_class& x, std::size_t k) {
  mpz_class r;
  mpz_cdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

bool divisible_pow2(const mpz_class& x, std::size_t k) {
  return mpz_divisible_2exp_p(x.get_mpz_t(), k) != 0;
}

// Nearest integer to x / 2^k (ties upward).
mpz_class round_shr(const mpz_class& x, std::size_t k) {
  if (k == 0) return x;
  return floor_shr(x + pow2(k - 1), k);
}

mpz_class ceil_div(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::size_t bit_length(const mpz_class& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Charge for a rounding step: one ulp unless the step was exact.
int rounding_ulp(bool exact) { return exact ? 0 : 1; }

FixedReal one(std::size_t scale) { return FixedReal(pow2(scale), scale); }

// 2 * atanh(z) = ln((1 + z) / (1 - z)) for 0 <= z <= 1/3.
FixedReal log_ratio_series(const FixedReal& z) {
  const FixedReal z2 = z * z;
  FixedReal sum = z;
  FixedReal power = z;
  for (unsigned long j = 1;; ++j) {
    power = power * z2;
    sum = sum + power.div_int(2 * j + 1);
    const mpz_class bound = abs(power.mantissa()) + power.error_ulps();
    if (bound <= 16) {
      // Later terms shrink by at least 1/9 each, so their sum is below
      // bound / 8.
      sum = FixedReal(sum.mantissa(), sum.scale_bits(),
                      sum.error_ulps() + ceil_div(bound, 8) + 1);
      break;
    }
  }
  return sum.mul_int(2);
}

FixedReal ln2_at(std::size_t scale) {
  return log_ratio_series(FixedReal::from_ratio(1, 3, scale));
}

// ln(m * 2^-s) for m > 0.
FixedReal ln_exact(const mpz_class& m, std::size_t s, std::size_t scale) {
  const std::size_t b = bit_length(m);
  const long k = static_cast<long>(b) - 1 - static_cast<long>(s);
  const mpz_class half = pow2(b - 1);
  const std::size_t wp =
      scale + 64 + bit_length(mpz_class(std::labs(k)));

  FixedReal result(0, wp);
  if (m != half) {
    // m / half lies in (1, 2); z = (m - half) / (m + half) lies in (0, 1/3).
    result = log_ratio_series(FixedReal::from_ratio(m - half, m + half, wp));
  }
  if (k != 0) result = result + ln2_at(wp).mul_int(k);
  return result.rescale(scale);
}

// exp(m * 2^-s) with |m * 2^-s| < 2^20.
FixedReal exp_exact(const mpz_class& m, std::size_t s, std::size_t scale) {
  if (m == 0) return one(scale);
  const bool negative = m < 0;
  const mpz_class a = abs(m);
  const long top = static_cast<long>(bit_length(a)) - static_cast<long>(s);
  const std::size_t r = static_cast<std::size_t>(std::max(0L, top + 8));
  // e^y < 2^(2 ceil(y)).
  const std::size_t magnitude = 2 * ceil_shr(a, s).get_ui();
  const std::size_t wp = scale + r + magnitude + 64;

  const FixedReal t = FixedReal(a, s + r).rescale(wp);
  FixedReal sum = one(wp) + t;
  FixedReal term = t;
  for (unsigned long j = 2;; ++j) {
    term = (term * t).div_int(j);
    sum = sum + term;
    const mpz_class bound = abs(term.mantissa()) + term.error_ulps();
    if (bound <= 16) {
      // t <= 2^-8, so the remaining terms add less than bound / 255.
      sum = FixedReal(sum.mantissa(), sum.scale_bits(), sum.error_ulps() + 1);
      break;
    }
  }
  for (std::size_t i = 0; i < r; ++i) sum = sum * sum;
  if (negative) sum = one(wp) / sum;
  return sum.rescale(scale);
}

}  // namespace

FixedReal::FixedReal(mpz_class mantissa, std::size_t scale_bits,
                     mpz_class error_ulps)
    : mantissa_(std::move(mantissa)),
      scale_bits_(scale_bits),
      error_ulps_(std::move(error_ulps)) {
  if (error_ulps_ < 0) {
    throw std::invalid_argument("FixedReal: negative error bound");
  }
}

FixedReal FixedReal::from_integer(const mpz_class& value,
                                  std::size_t scale_bits) {
  return FixedReal(shl(value, scale_bits), scale_bits);
}

FixedReal FixedReal::from_ratio(const mpz_class& num, const mpz_class& den,
                                std::size_t scale_bits) {
  if (den == 0) throw std::domain_error("FixedReal: zero denominator");
  const mpz_class scaled = shl(num, scale_bits);
  mpz_class q;
  mpz_class rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(),
              den.get_mpz_t());
  return FixedReal(q, scale_bits, rounding_ulp(rem == 0));
}

long FixedReal::accuracy_bits() const {
  if (error_ulps_ == 0) return std::numeric_limits<long>::max();
  return static_cast<long>(scale_bits_) -
         static_cast<long>(bit_length(error_ulps_));
}

FixedReal FixedReal::rescale(std::size_t scale_bits) const {
  if (scale_bits >= scale_bits_) {
    const std::size_t d = scale_bits - scale_bits_;
    return FixedReal(shl(mantissa_, d), scale_bits, shl(error_ulps_, d));
  }
  const std::size_t d = scale_bits_ - scale_bits;
  return FixedReal(
      round_shr(mantissa_, d), scale_bits,
      ceil_shr(error_ulps_, d) + rounding_ulp(divisible_pow2(mantissa_, d)));
}

FixedReal FixedReal::mul_pow2(long k) const {
  if (k < 0) {
    return FixedReal(mantissa_, scale_bits_ + static_cast<std::size_t>(-k),
                     error_ulps_);
  }
  const auto uk = static_cast<std::size_t>(k);
  if (uk <= scale_bits_) {
    return FixedReal(mantissa_, scale_bits_ - uk, error_ulps_);
  }
  const std::size_t extra = uk - scale_bits_;
  return FixedReal(shl(mantissa_, extra), 0, shl(error_ulps_, extra));
}

FixedReal FixedReal::mul_int(const mpz_class& k) const {
  return FixedReal(mantissa_ * k, scale_bits_, error_ulps_ * ::abs(k));
}

FixedReal FixedReal::div_int(const mpz_class& k) const {
  if (k == 0) throw std::domain_error("FixedReal: division by zero");
  mpz_class q;
  mpz_class rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), mantissa_.get_mpz_t(),
              k.get_mpz_t());
  return FixedReal(q, scale_bits_,
                   ceil_div(error_ulps_, ::abs(k)) + rounding_ulp(rem == 0));
}

FixedReal FixedReal::abs() const {
  return FixedReal(::abs(mantissa_), scale_bits_, error_ulps_);
}

FixedReal operator-(const FixedReal& a) {
  return FixedReal(-a.mantissa_, a.scale_bits_, a.error_ulps_);
}

FixedReal operator+(const FixedReal& a, const FixedReal& b) {
  const std::size_t s = std::max(a.scale_bits_, b.scale_bits_);
  const FixedReal x = a.rescale(s);
  const FixedReal y = b.rescale(s);
  return FixedReal(x.mantissa_ + y.mantissa_, s, x.error_ulps_ + y.error_ulps_);
}

FixedReal operator-(const FixedReal& a, const FixedReal& b) { return a + (-b); }

FixedReal operator*(const FixedReal& a, const FixedReal& b) {
  const std::size_t s = std::max(a.scale_bits_, b.scale_bits_);
  const FixedReal x = a.rescale(s);
  const FixedReal y = b.rescale(s);
  const mpz_class product = x.mantissa_ * y.mantissa_;
  const mpz_class spread = abs(x.mantissa_) * y.error_ulps_ +
                           abs(y.mantissa_) * x.error_ulps_ +
                           x.error_ulps_ * y.error_ulps_;
  return FixedReal(round_shr(product, s), s,
                   ceil_shr(spread, s) +
                       rounding_ulp(divisible_pow2(product, s)));
}

FixedReal operator/(const FixedReal& a, const FixedReal& b) {
  const std::size_t s = std::max(a.scale_bits_, b.scale_bits_);
  const FixedReal x = a.rescale(s);
  const FixedReal y = b.rescale(s);
  const mpz_class mb = abs(y.mantissa_);
  if (mb <= y.error_ulps_) {
    throw std::domain_error("FixedReal: divisor interval contains zero");
  }
  const mpz_class num = shl(x.mantissa_, s);
  mpz_class q;
  mpz_class rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
              y.mantissa_.get_mpz_t());
  const mpz_class spread =
      shl(x.error_ulps_ * mb + y.error_ulps_ * abs(x.mantissa_), s);
  const mpz_class err =
      spread == 0 ? mpz_class(0) : ceil_div(spread, mb * (mb - y.error_ulps_));
  return FixedReal(q, s, err + rounding_ulp(rem == 0));
}

std::optional<int> FixedReal::sign() const {
  if (mantissa_ == 0 && error_ulps_ == 0) return 0;
  if (lower_mantissa() > 0) return 1;
  if (upper_mantissa() < 0) return -1;
  return std::nullopt;
}

std::optional<int> compare(const FixedReal& a, const FixedReal& b) {
  return (a - b).sign();
}

std::optional<int> compare(const FixedReal& a, const mpz_class& b) {
  return (a - FixedReal::from_integer(b, a.scale_bits())).sign();
}

std::optional<mpz_class> FixedReal::certified_floor() const {
  mpz_class lo = floor_shr(lower_mantissa(), scale_bits_);
  if (lo != floor_shr(upper_mantissa(), scale_bits_)) return std::nullopt;
  return lo;
}

std::optional<mpz_class> FixedReal::certified_ceil() const {
  mpz_class lo = ceil_shr(lower_mantissa(), scale_bits_);
  if (lo != ceil_shr(upper_mantissa(), scale_bits_)) return std::nullopt;
  return lo;
}

FixedReal FixedReal::pow(unsigned long n) const {
  FixedReal result = one(scale_bits_);
  FixedReal base = *this;
  while (n != 0) {
    if ((n & 1UL) != 0) result = result * base;
    n >>= 1;
    if (n != 0) base = base * base;
  }
  return result;
}

std::string FixedReal::to_decimal(std::size_t significant_digits) const {
  if (significant_digits == 0) {
    throw std::invalid_argument("to_decimal: need at least one digit");
  }
  const std::string sign = mantissa_ < 0 ? "-" : "";
  const mpz_class a = ::abs(mantissa_);
  if (a == 0) return "0";

  mpz_class ten_pow;
  const mpz_class integer_part = floor_shr(a, scale_bits_);
  if (integer_part > 0) {
    const std::string digits = integer_part.get_str();
    if (digits.size() >= significant_digits) {
      return sign + digits.substr(0, significant_digits) +
             std::string(digits.size() - significant_digits, '0');
    }
    const std::size_t frac = significant_digits - digits.size();
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, frac);
    const std::string all = floor_shr(a * ten_pow, scale_bits_).get_str();
    return sign + all.substr(0, digits.size()) + "." +
           all.substr(digits.size());
  }

  // Count zeros between the point and the first significant digit.
  const mpz_class unit = pow2(scale_bits_);
  std::size_t zeros = 0;
  for (mpz_class v = a * 10; v < unit; v *= 10) ++zeros;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, zeros + significant_digits);
  return sign + "0." + std::string(zeros, '0') +
         floor_shr(a * ten_pow, scale_bits_).get_str();
}

std::string FixedReal::error_bound_string() const {
  if (error_ulps_ == 0) return "0";
  const long k = accuracy_bits();
  return k >= 0 ? "2^-" + std::to_string(k) : "2^" + std::to_string(-k);
}

double FixedReal::to_double() const {
  long exponent = 0;
  const double d = mpz_get_d_2exp(&exponent, mantissa_.get_mpz_t());
  return std::ldexp(d, static_cast<int>(exponent -
                                        static_cast<long>(scale_bits_)));
}

FixedReal ln_fixed(const mpz_class& x, std::size_t scale_bits) {
  if (x <= 0) throw std::domain_error("ln_fixed: argument must be positive");
  return ln_exact(x, 0, scale_bits);
}

FixedReal ln_fixed(const FixedReal& x, std::size_t scale_bits) {
  const mpz_class lo = x.lower_mantissa();
  if (lo <= 0) {
    throw std::domain_error("ln_fixed: interval must be positive");
  }
  FixedReal mid = ln_exact(x.mantissa(), x.scale_bits(), scale_bits);
  if (x.is_exact()) return mid;
  // |ln(y) - ln(m)| <= |y - m| / lo on the interval.
  const mpz_class extra = ceil_div(shl(x.error_ulps(), scale_bits), lo);
  return FixedReal(mid.mantissa(), scale_bits, mid.error_ulps() + extra);
}

FixedReal exp_fixed(const FixedReal& x, std::size_t scale_bits) {
  const std::size_t s = x.scale_bits();
  const mpz_class reach = abs(x.mantissa()) + x.error_ulps();
  if (reach >= shl(mpz_class(1), s + 20)) {
    throw std::domain_error("exp_fixed: |x| must be below 2^20");
  }
  if (x.error_ulps() >= pow2(s)) {
    throw std::domain_error("exp_fixed: input error must be below 1");
  }
  FixedReal mid = exp_exact(x.mantissa(), s, scale_bits);
  if (x.is_exact()) return mid;
  // |exp(m + d) - exp(m)| <= exp(m) * |d| * e^|d| <= 3 exp(m) |d| for |d| < 1.
  const mpz_class hi = abs(mid.mantissa()) + mid.error_ulps();
  const mpz_class extra = ceil_shr(hi * x.error_ulps() * 3, s);
  return FixedReal(mid.mantissa(), scale_bits, mid.error_ulps() + extra);
}

}  // namespace infima
