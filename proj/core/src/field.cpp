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

#include "badpairs/field.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace badpairs {

const IntegerPolynomial& minimal_polynomial() {
  static const IntegerPolynomial p{-1, -2, 1, 1};
  return p;
}

const RealRootEnclosure& embedding_root(Embedding e) {
  static const std::array<RealRootEnclosure, 3> roots = {
      RealRootEnclosure(minimal_polynomial(), Rational(1), Rational(2)),
      RealRootEnclosure(minimal_polynomial(), Rational(-1), Rational(0)),
      RealRootEnclosure(minimal_polynomial(), Rational(-2), Rational(-1)),
  };
  return roots[static_cast<std::size_t>(e)];
}

FieldElement::FieldElement(Rational x, Rational y, Rational z)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  x_.canonicalize();
  y_.canonicalize();
  z_.canonicalize();
}

FieldElement operator+(const FieldElement& u, const FieldElement& v) {
  return {u.x_ + v.x_, u.y_ + v.y_, u.z_ + v.z_};
}

FieldElement operator-(const FieldElement& u, const FieldElement& v) {
  return {u.x_ - v.x_, u.y_ - v.y_, u.z_ - v.z_};
}

FieldElement operator*(const Rational& k, const FieldElement& u) {
  return {k * u.x_, k * u.y_, k * u.z_};
}

FieldElement operator*(const FieldElement& u, const FieldElement& v) {
  // Schoolbook product, then theta^3 = 1 + 2 theta - theta^2 and
  // theta^4 = -1 - theta + 3 theta^2.
  const Rational c0 = u.x_ * v.x_;
  const Rational c1 = u.x_ * v.y_ + u.y_ * v.x_;
  const Rational c2 = u.x_ * v.z_ + u.y_ * v.y_ + u.z_ * v.x_;
  const Rational c3 = u.y_ * v.z_ + u.z_ * v.y_;
  const Rational c4 = u.z_ * v.z_;
  return {c0 + c3 - c4, c1 + 2 * c3 - c4, c2 - c3 + 3 * c4};
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  // Columns of m are the coordinates of u, u*theta, u*theta^2; solve
  // m * v = (1, 0, 0) by Cramer's rule.
  const FieldElement col1 = *this * theta();
  const FieldElement col2 = col1 * theta();
  const std::array<std::array<Rational, 3>, 3> m = {{
      {x_, col1.x_, col2.x_},
      {y_, col1.y_, col2.y_},
      {z_, col1.z_, col2.z_},
  }};
  auto minor = [&](int r, int c) {
    int rows[2], cols[2];
    for (int i = 0, k = 0; i < 3; ++i) if (i != r) rows[k++] = i;
    for (int j = 0, k = 0; j < 3; ++j) if (j != c) cols[k++] = j;
    return Rational(m[rows[0]][cols[0]] * m[rows[1]][cols[1]] -
                    m[rows[0]][cols[1]] * m[rows[1]][cols[0]]);
  };
  const Rational c00 = minor(0, 0);
  const Rational c01 = -minor(0, 1);
  const Rational c02 = minor(0, 2);
  const Rational det = m[0][0] * c00 + m[0][1] * c01 + m[0][2] * c02;
  if (det == 0) throw std::domain_error("singular multiplication matrix");
  return {c00 / det, c01 / det, c02 / det};
}

long FieldElement::coefficient_bits() const {
  long bits = 0;
  for (const Rational* r : {&x_, &y_, &z_}) {
    bits = std::max({bits, bit_length(r->get_num()), bit_length(r->get_den())});
  }
  return bits;
}

std::string FieldElement::to_string() const {
  auto one = [](const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
  };
  return one(x_) + ";" + one(y_) + ";" + one(z_);
}

FieldElement FieldElement::parse(std::string_view text) {
  std::array<Rational, 3> parts;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? text.find(';', start) : text.size();
    if (end == std::string_view::npos) {
      throw std::invalid_argument("field element needs three ';'-separated "
                                  "rationals");
    }
    const std::string piece(text.substr(start, end - start));
    if (piece.empty() || parts[i].set_str(piece, 10) != 0 ||
        parts[i].get_den() == 0) {
      throw std::invalid_argument("malformed rational '" + piece + "'");
    }
    parts[i].canonicalize();
    start = end + 1;
  }
  return {parts[0], parts[1], parts[2]};
}

CertifiedInterval evaluate_with_root_bits(const FieldElement& u, Embedding e,
                                          long root_bits) {
  Integer den = 1;
  for (const Rational* r : {&u.x(), &u.y(), &u.z()}) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r->get_den().get_mpz_t());
  }
  const Integer x = u.x().get_num() * (den / u.x().get_den());
  const Integer y = u.y().get_num() * (den / u.y().get_den());
  const Integer z = u.z().get_num() * (den / u.z().get_den());

  const CertifiedInterval t = embedding_root(e).enclose(root_bits);
  CertifiedInterval v = t * y + (t * t) * z + CertifiedInterval::point(Dyadic(x));
  const long keep =
      std::max(v.lo().magnitude_bits(), v.hi().magnitude_bits()) + root_bits + 8;
  v = v.rounded(keep);
  if (den == 1) return v;
  return v.divided(den, keep);
}

CertifiedInterval evaluate(const FieldElement& u, Embedding e,
                           long precision_bits) {
  if (precision_bits < 8) {
    throw std::invalid_argument("precision_bits must be at least 8");
  }
  long root_bits = precision_bits + 2 * u.coefficient_bits() + 16;
  for (;;) {
    CertifiedInterval v = evaluate_with_root_bits(u, e, root_bits);
    const Dyadic scale = std::max(Dyadic(1), v.min_magnitude());
    if (v.width().shifted(precision_bits - 1) <= scale) return v;
    root_bits *= 2;
  }
}

const ConjugateConstants& conjugate_constants() {
  static const ConjugateConstants constants = [] {
    const FieldElement t = FieldElement::theta();
    const FieldElement t2 = t * t;
    const FieldElement e1 = FieldElement(-1) - t;
    const FieldElement e2 = t2 + t - FieldElement(2);
    // (theta - theta1)(theta - theta2)
    const FieldElement d1 = t2 - t * e1 + e2;
    // theta1^2 + theta2^2
    const FieldElement s2 = e1 * e1 - Rational(2) * e2;
    ConjugateConstants k;
    k.a = -(t2 * t2 - t2 * s2 + e2 * e2);
    k.b = d1 * (e1 + Rational(2) * t);
    k.c = -d1;
    return k;
  }();
  return constants;
}

}  // namespace badpairs
