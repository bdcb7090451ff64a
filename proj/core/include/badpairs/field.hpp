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

// Exact arithmetic in Q(theta), theta = 2cos(2pi/7), the root in (1, 2) of
// x^3 + x^2 - 2x - 1. Elements are stored as rational coordinates with
// respect to the basis 1, theta, theta^2, which makes the representation
// unique.

#ifndef BADPAIRS_FIELD_HPP_
#define BADPAIRS_FIELD_HPP_

#include <string>
#include <string_view>

#include "badpairs/dyadic.hpp"
#include "badpairs/polynomial.hpp"
#include "badpairs/real_root.hpp"

namespace badpairs {

// x^3 + x^2 - 2x - 1.
const IntegerPolynomial& minimal_polynomial();

// The three real embeddings of Q(theta), by the image of theta:
//   kRoot0 -> 2cos(2pi/7) in (1, 2)
//   kRoot1 -> 2cos(4pi/7) in (-1, 0)
//   kRoot2 -> 2cos(6pi/7) in (-2, -1)
enum class Embedding { kRoot0, kRoot1, kRoot2 };

const RealRootEnclosure& embedding_root(Embedding e);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Rational x, Rational y, Rational z);
  explicit FieldElement(const Rational& c) : FieldElement(c, 0, 0) {}
  explicit FieldElement(long c) : FieldElement(Rational(c), 0, 0) {}

  static FieldElement theta() { return {0, 1, 0}; }

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& z() const { return z_; }

  bool is_zero() const { return x_ == 0 && y_ == 0 && z_ == 0; }
  bool is_rational() const { return y_ == 0 && z_ == 0; }

  friend FieldElement operator+(const FieldElement& u, const FieldElement& v);
  friend FieldElement operator-(const FieldElement& u, const FieldElement& v);
  friend FieldElement operator*(const FieldElement& u, const FieldElement& v);
  friend FieldElement operator*(const Rational& k, const FieldElement& u);
  FieldElement operator-() const { return {-x_, -y_, -z_}; }

  // Throws std::domain_error for the zero element.
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& u, const FieldElement& v) {
    return u.x_ == v.x_ && u.y_ == v.y_ && u.z_ == v.z_;
  }

  // Largest bit length among numerators and denominators.
  long coefficient_bits() const;

  // "x;y;z" with each coordinate written as "num/den".
  std::string to_string() const;
  static FieldElement parse(std::string_view text);

 private:
  Rational x_;
  Rational y_;
  Rational z_;
};

// Evaluates u under embedding e with the root enclosed to `root_bits` bits.
// The enclosure is valid at any root_bits; its width shrinks as root_bits
// grows.
CertifiedInterval evaluate_with_root_bits(const FieldElement& u, Embedding e,
                                          long root_bits);

// Certified enclosure of the image of u under e with
// width <= 2^(1 - precision_bits) * max(1, |value|). precision_bits >= 8.
CertifiedInterval evaluate(const FieldElement& u, Embedding e,
                           long precision_bits);

// The constants a, b, c of the quadratic form attached to the basis
// {1, theta, theta^2}:
//   a = (theta2^2 - theta^2)(theta^2 - theta1^2)
//   b = (theta2^2 - theta^2)(theta1 - theta) + (theta2 - theta)(theta1^2 - theta^2)
//   c = (theta - theta2)(theta1 - theta)
// written in Q(theta) through e1 = theta1 + theta2 = -1 - theta and
// e2 = theta1 theta2 = theta^2 + theta - 2.
struct ConjugateConstants {
  FieldElement a;
  FieldElement b;
  FieldElement c;
};

const ConjugateConstants& conjugate_constants();

}  // namespace badpairs

#endif  // BADPAIRS_FIELD_HPP_
