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

// Integral bases {1, p theta + q theta^2, r theta + s theta^2} built from
// consecutive convergents of theta, and the certified evaluation of
//
//   c* = 1 / max{|A+B+C|, |A-B+C|, 49/|4A|, 49/|4C|}
//
// where (A, B, C) is the image of the conjugate constants (a, b, c) under
// the matrix
//
//   [ s^2    -rs      r^2  ]
//   [ -2qs   ps + qr  -2pr ]
//   [ q^2    -pq      p^2  ]
//
// The identity B^2 - 4AC = +-49 holds for every unimodular basis and is
// checked exactly.

#ifndef BADPAIRS_CUSICK_HPP_
#define BADPAIRS_CUSICK_HPP_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "badpairs/cfrac.hpp"
#include "badpairs/field.hpp"
#include "badpairs/patterns.hpp"

namespace badpairs {

constexpr int kDefaultDigits = 61;

// A broken exact identity. Indicates a bug, never a mathematical outcome.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct IntegralBasis {
  Integer p, q, r, s;
  FieldElement alpha;  // p theta + q theta^2
  FieldElement beta;   // r theta + s theta^2
  std::size_t first_index = 0;   // convergent index k
  std::size_t second_index = 0;  // k + 1

  Integer determinant() const { return p * s - q * r; }
  long max_bits() const;
};

IntegralBasis make_basis(Integer p, Integer q, Integer r, Integer s);

// From consecutive convergents P_k/Q_k and P_{k+1}/Q_{k+1}:
// p = Q_k, q = -P_k, r = -Q_{k+1}, s = P_{k+1}. Throws std::invalid_argument
// unless P_k Q_{k+1} - P_{k+1} Q_k = +-1.
IntegralBasis build_basis(const Convergent& first, const Convergent& second);

struct ABCTriple {
  FieldElement A, B, C;

  // B^2 - 4AC
  FieldElement discriminant() const { return B * B - Rational(4) * A * C; }
};

// (A, B, C) = M(p, q, r, s) (a, b, c) for arbitrary a, b, c.
ABCTriple transform_abc(const Integer& p, const Integer& q, const Integer& r,
                        const Integer& s, const FieldElement& a,
                        const FieldElement& b, const FieldElement& c);

// transform_abc applied to conjugate_constants(). Throws InvariantViolation
// unless B^2 - 4AC is exactly +-49.
ABCTriple compute_abc(const IntegralBasis& basis);

enum class MaxTerm { kSumPlus, kSumMinus, kFourA, kFourC };

// "A+B+C", "A-B+C", "49/4A", "49/4C"
const char* to_string(MaxTerm term);

struct CStarCertificate {
  std::string cstar;  // truncated decimal; true value in [cstar, cstar + ulp)
  std::vector<MaxTerm> achieving;  // more than one only for a certified tie
  ABCTriple abc;
  IntegralBasis basis;
  std::string alpha_frac;
  std::string beta_frac;
  Integer det;
  Rational disc;
  long root_bits = 0;  // precision of theta at which c* was certified
};

// Starting precision for theta: 2 * (max bit length of p, q, r, s) + 128.
long default_start_bits(const IntegralBasis& basis);

// start_bits == 0 selects default_start_bits(basis).
CStarCertificate cstar(const IntegralBasis& basis, int digits = kDefaultDigits,
                       long start_bits = 0);

// Certified truncated decimal of the fractional part of u under theta.
std::string fractional_digits(const FieldElement& u, int digits);

struct FracParts {
  std::string alpha;
  std::string beta;
};

FracParts frac_parts(const IntegralBasis& basis, int digits = kDefaultDigits);

struct TruncationCandidate {
  std::size_t k = 0;
  std::string cstar;
  std::vector<MaxTerm> achieving;
};

struct TruncationChoice {
  std::size_t best_k = 0;
  CStarCertificate certificate;
  std::vector<TruncationCandidate> candidates;
};

// Evaluates c* for every consecutive pair (k, k+1) with k in
// [start_index - 1, start_index + pattern_length - 1] (clipped to the
// available convergents) and returns the maximiser; the lowest k wins ties.
TruncationChoice select_best_truncation(const PatternHit& hit,
                                        std::span<const Integer> quotients,
                                        int digits = kDefaultDigits);

}  // namespace badpairs

#endif  // BADPAIRS_CUSICK_HPP_
