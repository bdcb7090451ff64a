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
#include "badpairs/real_root.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace badpairs {
namespace {

const IntegerPolynomial kCubic{-1, -2, 1, 1};

TEST(Polynomial, Evaluation) {
  EXPECT_EQ(kCubic(Integer(2)), 7);
  EXPECT_EQ(kCubic(Rational(1, 2)), Rational(-13, 8));
  EXPECT_EQ(kCubic.sign_at(Rational(5, 4)), 1);
  EXPECT_EQ(kCubic.sign_at(Rational(6, 5)), -1);
  EXPECT_EQ(kCubic.sign_at_plus_infinity(), 1);
}

TEST(Polynomial, ShiftAndReverse) {
  // p(x + 1) = x^3 + 4x^2 + 3x - 1
  EXPECT_EQ(kCubic.taylor_shift(Integer(1)), (IntegerPolynomial{-1, 3, 4, 1}));
  EXPECT_EQ(kCubic.reversed(), (IntegerPolynomial{1, 1, -2, -1}));
  EXPECT_EQ(kCubic.derivative(), (IntegerPolynomial{-2, 2, 3}));
}

TEST(Polynomial, OneSidedSignsAtRoot) {
  const IntegerPolynomial p{0, 0, 1};  // x^2
  EXPECT_EQ(p.sign_right_of(Rational(0)), 1);
  EXPECT_EQ(p.sign_left_of(Rational(0)), 1);
  const IntegerPolynomial q{-1, 1};  // x - 1
  EXPECT_EQ(q.sign_right_of(Rational(1)), 1);
  EXPECT_EQ(q.sign_left_of(Rational(1)), -1);
}

TEST(Polynomial, ToString) {
  EXPECT_EQ(kCubic.to_string(), "1*x^3 + 1*x^2 - 2*x - 1");
}

TEST(RealRoot, MatchesBisectionOracle) {
  const RealRootEnclosure root(kCubic, Rational(1), Rational(2));
  for (long bits : {8L, 64L, 257L, 2000L}) {
    const CertifiedInterval iv = root.enclose(bits);
    const Integer m = oracle::bisect_root_scaled({-1, -2, 1, 1}, 1, 2,
                                                 static_cast<unsigned long>(bits));
    EXPECT_EQ(iv.lo(), Dyadic(m, -bits));
    EXPECT_EQ(iv.hi(), Dyadic(m + 1, -bits));
  }
}

TEST(RealRoot, LowerPrecisionAfterHigher) {
  const RealRootEnclosure root(kCubic, Rational(-2), Rational(-1));
  const CertifiedInterval fine = root.enclose(500);
  const CertifiedInterval coarse = root.enclose(60);
  EXPECT_LE(coarse.lo(), fine.lo());
  EXPECT_GE(coarse.hi(), fine.hi());
}

TEST(RealRoot, RejectsIntervalWithoutSignChange) {
  EXPECT_THROW(RealRootEnclosure(kCubic, Rational(2), Rational(3)),
               std::invalid_argument);
  EXPECT_THROW(RealRootEnclosure(kCubic, Rational(2), Rational(1)),
               std::invalid_argument);
}

}  // namespace
}  // namespace badpairs
