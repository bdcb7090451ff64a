// Copyright 2026 The badpairs Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dyadic numbers (integer * 2^exponent) and closed intervals with dyadic
// endpoints. All arithmetic on dyadics is exact; rounding happens only where a
// caller asks for it, and always in the stated direction.

#ifndef BADPAIRS_DYADIC_HPP_
#define BADPAIRS_DYADIC_HPP_

#include <compare>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace badpairs {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Rounding { kDown, kUp };

// Number of bits in |x|; 0 for x == 0.
long bit_length(const Integer& x);

// 10^n as an Integer.
Integer pow10(unsigned long n);

class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(Integer mantissa, long exponent);
  explicit Dyadic(const Integer& value) : Dyadic(value, 0) {}
  explicit Dyadic(long value) : Dyadic(Integer(value), 0) {}

  const Integer& mantissa() const { return mantissa_; }
  long exponent() const { return exponent_; }
  int sign() const { return sgn(mantissa_); }
  bool is_zero() const { return mantissa_ == 0; }

  // Position of the most significant bit: |x| < 2^magnitude_bits().
  long magnitude_bits() const;

  // Keeps at most `bits` significant bits, rounding toward -inf or +inf.
  Dyadic rounded(long bits, Rounding direction) const;

  Integer floor() const;
  Integer ceil() const;
  Rational to_rational() const;
  double to_double() const;

  // Exact value of x * 10^digits rounded toward -inf.
  Integer scaled_floor10(unsigned long digits) const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic operator-() const { return Dyadic(-mantissa_, exponent_); }
  Dyadic abs() const { return Dyadic(::abs(mantissa_), exponent_); }
  Dyadic shifted(long by) const { return Dyadic(mantissa_, exponent_ + by); }

  friend int compare(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.mantissa_ == b.mantissa_ && a.exponent_ == b.exponent_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    return compare(a, b) <=> 0;
  }

  // "mantissa*2^exponent"
  std::string to_string() const;
  static Dyadic parse(const std::string& text);

 private:
  void normalize();

  Integer mantissa_;
  long exponent_ = 0;
};

// num/den rounded in `direction` to `bits` significant bits. den != 0.
Dyadic divide(const Integer& num, const Integer& den, long bits,
              Rounding direction);
Dyadic from_rational(const Rational& value, long bits, Rounding direction);

class CertifiedInterval {
 public:
  CertifiedInterval() = default;
  CertifiedInterval(Dyadic lo, Dyadic hi);
  static CertifiedInterval point(const Dyadic& x) { return {x, x}; }

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }
  Dyadic width() const { return hi_ - lo_; }
  Dyadic midpoint() const { return (lo_ + hi_).shifted(-1); }

  bool contains(const Dyadic& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Rational& x) const;
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool overlaps(const CertifiedInterval& other) const {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }
  bool is_positive() const { return lo_.sign() > 0; }
  bool is_negative() const { return hi_.sign() < 0; }

  // Smallest |x| over the interval.
  Dyadic min_magnitude() const;

  friend CertifiedInterval operator+(const CertifiedInterval& a,
                                     const CertifiedInterval& b);
  friend CertifiedInterval operator-(const CertifiedInterval& a,
                                     const CertifiedInterval& b);
  friend CertifiedInterval operator*(const CertifiedInterval& a,
                                     const CertifiedInterval& b);
  CertifiedInterval operator-() const { return {-hi_, -lo_}; }
  CertifiedInterval operator*(const Integer& k) const;
  CertifiedInterval abs() const;

  // Outward rounding of both endpoints to `bits` significant bits.
  CertifiedInterval rounded(long bits) const;
  // Division by a nonzero integer, rounded outward.
  CertifiedInterval divided(const Integer& den, long bits) const;
  // 1/x, rounded outward. Throws std::domain_error if the interval meets 0.
  CertifiedInterval reciprocal(long bits) const;

 private:
  Dyadic lo_;
  Dyadic hi_;
};

// Formats floor(|x| * 10^digits) as a decimal with `digits` fractional
// digits, prefixed by '-' for negative x. The result is the truncation of |x|.
std::string truncated_decimal(const Dyadic& x, unsigned long digits);

// The truncated decimal of every point of the interval, if they all agree.
std::optional<std::string> certified_digits(const CertifiedInterval& x,
                                            unsigned long digits);

}  // namespace badpairs

#endif  // BADPAIRS_DYADIC_HPP_
