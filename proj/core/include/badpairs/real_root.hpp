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

#ifndef BADPAIRS_REAL_ROOT_HPP_
#define BADPAIRS_REAL_ROOT_HPP_

#include <memory>

#include "badpairs/dyadic.hpp"
#include "badpairs/polynomial.hpp"

namespace badpairs {

// A real root of an integer polynomial, identified by an open isolating
// interval (lo, hi) with rational endpoints. p(lo) and p(hi) must be nonzero
// with opposite signs, and (lo, hi) must contain no other root.
//
// enclose() returns validated enclosures at any precision: a bisection seed
// is refined by fixed-point Newton steps with doubling precision, and the
// final bracket is confirmed by exact sign evaluation of p at both ends.
// The refinement state is shared between copies and guarded by a mutex, so
// a RealRootEnclosure can be used concurrently.
class RealRootEnclosure {
 public:
  RealRootEnclosure(IntegerPolynomial poly, Rational lo, Rational hi);

  const IntegerPolynomial& polynomial() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  // [m, m+1] * 2^-bits with m = floor(root * 2^bits). Deterministic: the
  // result depends only on `bits`, never on earlier calls.
  CertifiedInterval enclose(long bits) const;

 private:
  struct State;

  // True if the root is strictly greater than x / 2^scale.
  bool root_above(const Integer& x, unsigned long scale) const;
  Integer newton_estimate(unsigned long scale) const;
  Integer bisect_floor(unsigned long scale) const;

  IntegerPolynomial poly_;
  IntegerPolynomial derivative_;
  Rational lo_;
  Rational hi_;
  int sign_lo_;
  std::shared_ptr<State> state_;
};

}  // namespace badpairs

#endif  // BADPAIRS_REAL_ROOT_HPP_
