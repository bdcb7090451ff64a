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

#ifndef BADPAIRS_POLYNOMIAL_HPP_
#define BADPAIRS_POLYNOMIAL_HPP_

#include <initializer_list>
#include <string>
#include <vector>

#include "badpairs/dyadic.hpp"

namespace badpairs {

// Univariate polynomial with integer coefficients, stored lowest degree first.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<Integer> coefficients);
  IntegerPolynomial(std::initializer_list<long> coefficients);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  const Integer& coefficient(std::size_t i) const { return coeffs_.at(i); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& leading() const { return coeffs_.back(); }

  Integer operator()(const Integer& x) const;
  Rational operator()(const Rational& x) const;

  // Sign of p(x), computed from the homogenised integer form.
  int sign_at(const Rational& x) const;
  int sign_at(const Integer& x) const;

  // Sign of p just to the right (left) of x: the sign of the first
  // nonvanishing derivative, adjusted for parity on the left.
  int sign_right_of(const Rational& x) const;
  int sign_left_of(const Rational& x) const;
  int sign_at_plus_infinity() const { return sgn(leading()); }

  // sum c_i X^i 2^{s(d-i)}: the value at X/2^s scaled by 2^{sd}.
  Integer scaled_value(const Integer& x, unsigned long scale) const;

  IntegerPolynomial derivative() const;
  // p(x + a)
  IntegerPolynomial taylor_shift(const Integer& a) const;
  // x^d p(1/x)
  IntegerPolynomial reversed() const;

  friend bool operator==(const IntegerPolynomial& a,
                         const IntegerPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

}  // namespace badpairs

#endif  // BADPAIRS_POLYNOMIAL_HPP_
