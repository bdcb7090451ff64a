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

// Simple continued fractions of real roots of integer cubics, produced by two
// independent methods:
//
//  * IntervalCFStream encloses the root in a dyadic interval, maps it through
//    the inverse convergent transform to an enclosure of the current tail and
//    emits floor(tail) once both endpoints agree. When they do not, the
//    working precision doubles.
//  * ExactCFStream is Lagrange's method: it keeps an integer polynomial whose
//    unique root in a known interval is the current tail, locates the floor
//    by exact sign tests and substitutes x -> a + 1/x.

#ifndef BADPAIRS_CFRAC_HPP_
#define BADPAIRS_CFRAC_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "badpairs/dyadic.hpp"
#include "badpairs/polynomial.hpp"
#include "badpairs/real_root.hpp"

namespace badpairs {

// A real root of an integer cubic (monic not required) with a rational
// isolating interval.
class CubicRoot {
 public:
  CubicRoot(IntegerPolynomial poly, Rational lo, Rational hi);

  // 2cos(2pi/7): root of x^3 + x^2 - 2x - 1 in (1, 2).
  static CubicRoot theta();

  const IntegerPolynomial& polynomial() const { return enclosure_.polynomial(); }
  const Rational& lo() const { return enclosure_.lo(); }
  const Rational& hi() const { return enclosure_.hi(); }
  const RealRootEnclosure& enclosure() const { return enclosure_; }

 private:
  RealRootEnclosure enclosure_;
};

// The continued fraction reached an exact integer tail, so the "root" is
// rational. Never happens for an irrational input.
class TerminatedFraction : public std::runtime_error {
 public:
  explicit TerminatedFraction(std::size_t index);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

struct Convergent {
  std::size_t index = 0;
  Integer p;
  Integer q;
};

// P_k = a_k P_{k-1} + P_{k-2}, Q_k = a_k Q_{k-1} + Q_{k-2} with
// P_{-1} = 1, Q_{-1} = 0, P_{-2} = 0, Q_{-2} = 1.
class ConvergentRecurrence {
 public:
  const Convergent& push(const Integer& a);

  std::size_t size() const { return count_; }
  // Convergent k-1 and k-2 relative to the next push; the seeds before any.
  const Integer& p1() const { return p1_; }
  const Integer& q1() const { return q1_; }
  const Integer& p2() const { return p2_; }
  const Integer& q2() const { return q2_; }
  const Convergent& last() const { return last_; }

 private:
  std::size_t count_ = 0;
  Integer p1_ = 1, q1_ = 0, p2_ = 0, q2_ = 1;
  Convergent last_;
};

std::vector<Convergent> convergents(std::span<const Integer> quotients);

class CFStream {
 public:
  virtual ~CFStream() = default;

  // The partial quotient at index emitted(); advances the stream.
  virtual Integer next() = 0;
  std::size_t emitted() const { return emitted_; }

 protected:
  std::size_t emitted_ = 0;
};

class IntervalCFStream final : public CFStream {
 public:
  static constexpr long kDefaultInitialBits = 256;

  explicit IntervalCFStream(CubicRoot root,
                            long initial_bits = kDefaultInitialBits);

  // Continues a stream whose first quotients are `known` (trusted as given).
  static IntervalCFStream resume(CubicRoot root, std::span<const Integer> known,
                                 long working_bits);

  Integer next() override;

  long working_bits() const { return bits_; }
  const CubicRoot& root() const { return root_; }
  const ConvergentRecurrence& recurrence() const { return rec_; }

  // Enclosure of the tail whose floor is the next quotient, rounded outward
  // to the working precision. Refines as needed.
  CertifiedInterval tail_enclosure();

 private:
  struct Endpoint {
    Integer num;
    Integer den;  // > 0
  };

  bool rebuild_tail();
  void check_terminated() const;

  CubicRoot root_;
  long bits_;
  ConvergentRecurrence rec_;
  bool tail_valid_ = false;
  Endpoint lo_;
  Endpoint hi_;
};

class ExactCFStream final : public CFStream {
 public:
  explicit ExactCFStream(CubicRoot root);

  Integer next() override;

  // Integer polynomial whose unique root between tail_lower() and
  // tail_upper() (unbounded if absent) is the tail.
  const IntegerPolynomial& polynomial() const { return poly_; }
  const Rational& tail_lower() const { return lower_; }
  const std::optional<Rational>& tail_upper() const { return upper_; }

 private:
  // Tail >= n.
  bool tail_at_least(const Integer& n) const;

  IntegerPolynomial poly_;
  Rational lower_;
  std::optional<Rational> upper_;
  int sign_after_lower_ = 0;
};

}  // namespace badpairs

#endif  // BADPAIRS_CFRAC_HPP_
