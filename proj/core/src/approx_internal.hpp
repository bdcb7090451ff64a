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

#ifndef BADPAIRS_APPROX_INTERNAL_HPP_
#define BADPAIRS_APPROX_INTERNAL_HPP_

#include "badpairs/approx.hpp"

namespace badpairs::detail {

struct Nearest {
  Integer p;
  Integer distance;  // |q m - p den|
};

// Nearest integer p to q m / den, halves rounded up.
Nearest nearest(const Integer& q, const Integer& m, const Integer& den);

// alpha and beta brought to a common scale, reduced mod 1.
struct ScaledPair {
  ScaledPair(const FixedPointReal& alpha, const FixedPointReal& beta);

  long scale;
  Integer den;  // 10^scale
  Integer a_full, b_full;  // scaled mantissas
  Integer a, b;            // the same mod den

  BestApproxRecord record(const Integer& q) const;
  Integer eps(const Integer& q) const;
};

}  // namespace badpairs::detail

#endif  // BADPAIRS_APPROX_INTERNAL_HPP_
