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

#include "badpairs/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace badpairs {

long bit_length(const Integer& x) {
  if (x == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

Integer pow10(unsigned long n) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
  return r;
}

namespace {

// m * 2^e for e >= 0, or floor/ceil of m / 2^-e for e < 0.
Integer shift(const Integer& m, long e, Rounding direction) {
  Integer r;
  if (e >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else if (direction == Rounding::kDown) {
    mpz_fdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  } else {
    mpz_cdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

}  // namespace

Dyadic::Dyadic(Integer mantissa, long exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  const auto zeros = mpz_scan1(mantissa_.get_mpz_t(), 0);
  if (zeros > 0) {
    mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), zeros);
    exponent_ += static_cast<long>(zeros);
  }
}

long Dyadic::magnitude_bits() const {
  return bit_length(mantissa_) + exponent_;
}

Dyadic Dyadic::rounded(long bits, Rounding direction) const {
  const long excess = bit_length(mantissa_) - std::max(bits, 1L);
  if (excess <= 0) return *this;
  return Dyadic(shift(mantissa_, -excess, direction), exponent_ + excess);
}

Integer Dyadic::floor() const {
  return shift(mantissa_, exponent_, Rounding::kDown);
}

Integer Dyadic::ceil() const {
  return shift(mantissa_, exponent_, Rounding::kUp);
}

Rational Dyadic::to_rational() const {
  Rational r;
  if (exponent_ >= 0) {
    r = Rational(shift(mantissa_, exponent_, Rounding::kDown));
  } else {
    Integer den;
    mpz_setbit(den.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent_));
    r = Rational(mantissa_, den);
    r.canonicalize();
  }
  return r;
}

double Dyadic::to_double() const {
  long e = 0;
  const double m = mpz_get_d_2exp(&e, mantissa_.get_mpz_t());
  return std::ldexp(m, static_cast<int>(e + exponent_));
}

Integer Dyadic::scaled_floor10(unsigned long digits) const {
  return shift(mantissa_ * pow10(digits), exponent_, Rounding::kDown);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long e = std::min(a.exponent_, b.exponent_);
  Integer sum = shift(a.mantissa_, a.exponent_ - e, Rounding::kDown) +
                shift(b.mantissa_, b.exponent_ - e, Rounding::kDown);
  return Dyadic(std::move(sum), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

int compare(const Dyadic& a, const Dyadic& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  // Same sign: compare magnitudes first to avoid huge shifts.
  const long ma = a.magnitude_bits();
  const long mb = b.magnitude_bits();
  if (ma != mb) return (ma < mb) == (sa > 0) ? -1 : 1;
  const long e = std::min(a.exponent_, b.exponent_);
  const int c = cmp(shift(a.mantissa_, a.exponent_ - e, Rounding::kDown),
                    shift(b.mantissa_, b.exponent_ - e, Rounding::kDown));
  return (c > 0) - (c < 0);
}

std::string Dyadic::to_string() const {
  return mantissa_.get_str() + "*2^" + std::to_string(exponent_);
}

Dyadic Dyadic::parse(const std::string& text) {
  const auto star = text.find("*2^");
  if (star == std::string::npos) {
    throw std::invalid_argument("malformed dyadic: " + text);
  }
  Integer m;
  if (m.set_str(text.substr(0, star), 10) != 0) {
    throw std::invalid_argument("malformed dyadic mantissa: " + text);
  }
  try {
    std::size_t used = 0;
    const std::string exp_text = text.substr(star + 3);
    const long e = std::stol(exp_text, &used);
    if (used != exp_text.size()) throw std::invalid_argument(text);
    return Dyadic(std::move(m), e);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed dyadic exponent: " + text);
  }
}

Dyadic divide(const Integer& num, const Integer& den, long bits,
              Rounding direction) {
  if (den == 0) throw std::domain_error("dyadic division by zero");
  if (num == 0) return Dyadic();
  // Scale so the quotient carries at least `bits` bits.
  long k = bits + bit_length(den) - bit_length(num) + 1;
  if (k < 0) k = 0;
  Integer scaled = shift(num, k, Rounding::kDown);
  Integer d = den;
  if (d < 0) {
    d = -d;
    scaled = -scaled;
  }
  Integer q;
  if (direction == Rounding::kDown) {
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), d.get_mpz_t());
  } else {
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), d.get_mpz_t());
  }
  return Dyadic(std::move(q), -k).rounded(bits, direction);
}

Dyadic from_rational(const Rational& value, long bits, Rounding direction) {
  return divide(value.get_num(), value.get_den(), bits, direction);
}

CertifiedInterval::CertifiedInterval(Dyadic lo, Dyadic hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("interval with lo > hi");
}

bool CertifiedInterval::contains(const Rational& x) const {
  return lo_.to_rational() <= x && x <= hi_.to_rational();
}

Dyadic CertifiedInterval::min_magnitude() const {
  if (contains_zero()) return Dyadic();
  return lo_.sign() > 0 ? lo_ : hi_.abs();
}

CertifiedInterval operator+(const CertifiedInterval& a,
                            const CertifiedInterval& b) {
  return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

CertifiedInterval operator-(const CertifiedInterval& a,
                            const CertifiedInterval& b) {
  return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

CertifiedInterval operator*(const CertifiedInterval& a,
                            const CertifiedInterval& b) {
  if (a.lo_.sign() >= 0 && b.lo_.sign() >= 0) {
    return {a.lo_ * b.lo_, a.hi_ * b.hi_};
  }
  const Dyadic p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_,
                       a.hi_ * b.hi_};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

CertifiedInterval CertifiedInterval::operator*(const Integer& k) const {
  const Dyadic kd(k);
  if (k >= 0) return {lo_ * kd, hi_ * kd};
  return {hi_ * kd, lo_ * kd};
}

CertifiedInterval CertifiedInterval::abs() const {
  if (lo_.sign() >= 0) return *this;
  if (hi_.sign() <= 0) return -*this;
  return {Dyadic(), std::max(-lo_, hi_)};
}

CertifiedInterval CertifiedInterval::rounded(long bits) const {
  return {lo_.rounded(bits, Rounding::kDown), hi_.rounded(bits, Rounding::kUp)};
}

CertifiedInterval CertifiedInterval::divided(const Integer& den,
                                             long bits) const {
  if (den == 0) throw std::domain_error("interval division by zero");
  auto div = [&](const Dyadic& x, Rounding r) {
    // x / den = mantissa / den * 2^exponent.
    return divide(x.mantissa(), den, bits, r).shifted(x.exponent());
  };
  if (den > 0) return {div(lo_, Rounding::kDown), div(hi_, Rounding::kUp)};
  return {div(hi_, Rounding::kDown), div(lo_, Rounding::kUp)};
}

CertifiedInterval CertifiedInterval::reciprocal(long bits) const {
  if (contains_zero()) {
    throw std::domain_error("reciprocal of an interval containing zero");
  }
  auto inv = [&](const Dyadic& x, Rounding r) {
    // 1 / (m 2^e) = (1/m) 2^-e.
    return divide(Integer(1), x.mantissa(), bits, r).shifted(-x.exponent());
  };
  return {inv(hi_, Rounding::kDown), inv(lo_, Rounding::kUp)};
}

std::string truncated_decimal(const Dyadic& x, unsigned long digits) {
  const Integer scaled = x.abs().scaled_floor10(digits);
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out = x.sign() < 0 ? "-" : "";
  out += s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  return out;
}

std::optional<std::string> certified_digits(const CertifiedInterval& x,
                                            unsigned long digits) {
  std::string lo = truncated_decimal(x.lo(), digits);
  if (lo != truncated_decimal(x.hi(), digits)) return std::nullopt;
  return lo;
}

}  // namespace badpairs
