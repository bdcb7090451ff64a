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

// Reference implementations used only by tests. They are deliberately naive
// and share no code with the library beyond GMP itself.

#ifndef BADPAIRS_TESTS_ORACLE_HPP_
#define BADPAIRS_TESTS_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// floor(root * 2^bits) for the unique root of sum coeffs[i] x^i in (lo, hi),
// by plain bisection.
mpz_class bisect_root_scaled(const std::vector<long>& coeffs, const mpq_class& lo,
                             const mpq_class& hi, unsigned long bits);

// theta = 2cos(2pi/7) and its conjugates, enclosed in [m, m+1] / 2^bits.
struct RationalInterval {
  mpq_class lo, hi;
};
RationalInterval theta_interval(int root, unsigned long bits);

RationalInterval add(const RationalInterval& a, const RationalInterval& b);
RationalInterval sub(const RationalInterval& a, const RationalInterval& b);
RationalInterval mul(const RationalInterval& a, const RationalInterval& b);

// Continued fraction digits shared by x and y, x < y both positive.
std::vector<mpz_class> common_cf_prefix(mpq_class x, mpq_class y);

// First n partial quotients of theta from a bisection enclosure.
std::vector<mpz_class> theta_quotients(std::size_t n);

struct Hit {
  std::size_t start;
  int kind;  // 11 or 2
  mpz_class n1, n2;
};

// Window-by-window scan for [n1,1,1,n2] and [n1,2,n2], both >= min_n.
std::vector<Hit> naive_patterns(const std::vector<mpz_class>& a,
                                const mpz_class& min_n);

struct Record {
  unsigned long q;
  mpz_class p1, p2;
  mpq_class eps;
};

// Rescans every q with rational arithmetic, records on strict improvement.
// Ties in the nearest integer round half up.
std::vector<Record> naive_best_approx(const mpq_class& alpha,
                                      const mpq_class& beta,
                                      unsigned long q_max);

// Denominators of 1-D best approximations of alpha up to q_max.
std::vector<unsigned long> naive_best_approx_1d(const mpq_class& alpha,
                                                unsigned long q_max);

// floor(10^digits * (sqrt(5) - 1) / 2)
mpz_class golden_fraction_scaled(unsigned long digits);

}  // namespace oracle

#endif  // BADPAIRS_TESTS_ORACLE_HPP_
