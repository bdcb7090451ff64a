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

#include "badpairs/polynomial.hpp"

#include <stdexcept>

namespace badpairs {

IntegerPolynomial::IntegerPolynomial(std::vector<Integer> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

void IntegerPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

Integer IntegerPolynomial::operator()(const Integer& x) const {
  Integer acc = coeffs_.back();
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Rational IntegerPolynomial::operator()(const Rational& x) const {
  Rational acc(coeffs_.back());
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
    acc = acc * x + Rational(*it);
  }
  return acc;
}

int IntegerPolynomial::sign_at(const Rational& x) const {
  // sum c_i n^i d^(deg-i) has the sign of p(n/d) since d > 0.
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = coeffs_.back();
  Integer dpow = 1;
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
    dpow *= d;
    acc = acc * n + *it * dpow;
  }
  return sgn(acc);
}

int IntegerPolynomial::sign_at(const Integer& x) const {
  return sgn((*this)(x));
}

int IntegerPolynomial::sign_right_of(const Rational& x) const {
  IntegerPolynomial p = *this;
  for (int order = 0; order <= degree(); ++order) {
    const int s = p.sign_at(x);
    if (s != 0) return s;
    p = p.derivative();
  }
  return 0;
}

int IntegerPolynomial::sign_left_of(const Rational& x) const {
  IntegerPolynomial p = *this;
  for (int order = 0; order <= degree(); ++order) {
    const int s = p.sign_at(x);
    if (s != 0) return order % 2 == 0 ? s : -s;
    p = p.derivative();
  }
  return 0;
}

Integer IntegerPolynomial::scaled_value(const Integer& x,
                                        unsigned long scale) const {
  Integer acc = coeffs_.back();
  Integer pow2 = 1;
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), scale);
    acc = acc * x + *it * pow2;
  }
  return acc;
}

IntegerPolynomial IntegerPolynomial::derivative() const {
  if (coeffs_.size() == 1) return IntegerPolynomial({0});
  std::vector<Integer> d;
  d.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  }
  return IntegerPolynomial(std::move(d));
}

IntegerPolynomial IntegerPolynomial::taylor_shift(const Integer& a) const {
  // Repeated synthetic division; O(d^2) multiply-adds.
  std::vector<Integer> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) {
      c[j] += a * c[j + 1];
    }
  }
  return IntegerPolynomial(std::move(c));
}

IntegerPolynomial IntegerPolynomial::reversed() const {
  return IntegerPolynomial(
      std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend()));
}

std::string IntegerPolynomial::to_string() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0 && degree() > 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    out += Integer(abs(c)).get_str();
    if (i > 0) out += "*x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace badpairs
