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

#include "badpairs/cfrac.hpp"

#include <string>
#include <utility>

#include "badpairs/field.hpp"

namespace badpairs {

CubicRoot::CubicRoot(IntegerPolynomial poly, Rational lo, Rational hi)
    : enclosure_([&] {
        if (poly.degree() != 3) {
          throw std::invalid_argument("CubicRoot needs a degree-3 polynomial");
        }
        return RealRootEnclosure(std::move(poly), std::move(lo), std::move(hi));
      }()) {}

CubicRoot CubicRoot::theta() {
  return CubicRoot(minimal_polynomial(), Rational(1), Rational(2));
}

TerminatedFraction::TerminatedFraction(std::size_t index)
    : std::runtime_error("continued fraction terminates at index " +
                         std::to_string(index) +
                         ": the tail is an exact integer, so the root is "
                         "rational"),
      index_(index) {}

const Convergent& ConvergentRecurrence::push(const Integer& a) {
  Integer p = a * p1_ + p2_;
  Integer q = a * q1_ + q2_;
  p2_ = std::exchange(p1_, std::move(p));
  q2_ = std::exchange(q1_, std::move(q));
  last_ = Convergent{count_, p1_, q1_};
  ++count_;
  return last_;
}

std::vector<Convergent> convergents(std::span<const Integer> quotients) {
  std::vector<Convergent> out;
  out.reserve(quotients.size());
  ConvergentRecurrence rec;
  for (const Integer& a : quotients) out.push_back(rec.push(a));
  return out;
}

IntervalCFStream::IntervalCFStream(CubicRoot root, long initial_bits)
    : root_(std::move(root)), bits_(std::max(initial_bits, 8L)) {}

IntervalCFStream IntervalCFStream::resume(CubicRoot root,
                                          std::span<const Integer> known,
                                          long working_bits) {
  IntervalCFStream s(std::move(root), working_bits);
  for (const Integer& a : known) s.rec_.push(a);
  s.emitted_ = known.size();
  return s;
}

bool IntervalCFStream::rebuild_tail() {
  const CertifiedInterval x = root_.enclosure().enclose(bits_);
  // t = (P2 - Q2 x) / (Q1 x - P1), monotone away from the pole x = P1/Q1.
  auto map = [&](const Dyadic& d, Endpoint& out) {
    Integer n = d.mantissa();
    Integer den = 1;
    if (d.exponent() >= 0) {
      mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), d.exponent());
    } else {
      mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), -d.exponent());
    }
    out.num = rec_.p2() * den - rec_.q2() * n;
    out.den = rec_.q1() * n - rec_.p1() * den;
    return sgn(out.den);
  };
  Endpoint a, b;
  const int sa = map(x.lo(), a);
  const int sb = map(x.hi(), b);
  if (sa == 0 || sa != sb) return false;
  if (sa < 0) {
    a.num = -a.num, a.den = -a.den;
    b.num = -b.num, b.den = -b.den;
  }
  if (a.num * b.den <= b.num * a.den) {
    lo_ = std::move(a);
    hi_ = std::move(b);
  } else {
    lo_ = std::move(b);
    hi_ = std::move(a);
  }
  return true;
}

void IntervalCFStream::check_terminated() const {
  const IntegerPolynomial& f = root_.polynomial();
  auto exact_root = [&](const Integer& num, const Integer& den) {
    if (den == 0) return false;
    Rational x(num, den);
    x.canonicalize();
    return root_.lo() < x && x < root_.hi() && f.sign_at(x) == 0;
  };
  if (!tail_valid_) {
    if (exact_root(rec_.p1(), rec_.q1())) throw TerminatedFraction(emitted_);
    return;
  }
  // An integer tail n means root = (P1 n + P2) / (Q1 n + Q2).
  auto integer_tail = [&](const Integer& n) {
    return exact_root(rec_.p1() * n + rec_.p2(), rec_.q1() * n + rec_.q2());
  };
  Integer r;
  Integer n;
  mpz_fdiv_qr(n.get_mpz_t(), r.get_mpz_t(), lo_.num.get_mpz_t(),
              lo_.den.get_mpz_t());
  if (r == 0 && integer_tail(n)) throw TerminatedFraction(emitted_);
  mpz_fdiv_q(n.get_mpz_t(), hi_.num.get_mpz_t(), hi_.den.get_mpz_t());
  if (integer_tail(n)) throw TerminatedFraction(emitted_);
}

Integer IntervalCFStream::next() {
  Integer a, a_hi, r_lo, r_hi;
  for (;;) {
    if (!tail_valid_) tail_valid_ = rebuild_tail();
    if (tail_valid_) {
      mpz_fdiv_qr(a.get_mpz_t(), r_lo.get_mpz_t(), lo_.num.get_mpz_t(),
                  lo_.den.get_mpz_t());
      mpz_fdiv_qr(a_hi.get_mpz_t(), r_hi.get_mpz_t(), hi_.num.get_mpz_t(),
                  hi_.den.get_mpz_t());
      if (a == a_hi && r_lo != 0) {
        // a < lo <= hi < a + 1, so 1/(t - a) lies in [den_hi/r_hi, den_lo/r_lo].
        Endpoint next_lo{std::move(hi_.den), std::move(r_hi)};
        Endpoint next_hi{std::move(lo_.den), std::move(r_lo)};
        lo_ = std::move(next_lo);
        hi_ = std::move(next_hi);
        rec_.push(a);
        ++emitted_;
        return a;
      }
    }
    check_terminated();
    bits_ *= 2;
    tail_valid_ = false;
  }
}

CertifiedInterval IntervalCFStream::tail_enclosure() {
  while (!tail_valid_) {
    tail_valid_ = rebuild_tail();
    if (!tail_valid_) bits_ *= 2;
  }
  return {divide(lo_.num, lo_.den, bits_, Rounding::kDown),
          divide(hi_.num, hi_.den, bits_, Rounding::kUp)};
}

ExactCFStream::ExactCFStream(CubicRoot root)
    : poly_(root.polynomial()), lower_(root.lo()), upper_(root.hi()) {
  sign_after_lower_ = poly_.sign_right_of(lower_);
}

bool ExactCFStream::tail_at_least(const Integer& n) const {
  const Rational x(n);
  if (x <= lower_) return true;
  if (upper_ && x >= *upper_) return false;
  const int s = poly_.sign_at(n);
  if (s == 0) throw TerminatedFraction(emitted_);
  return s == sign_after_lower_;
}

Integer ExactCFStream::next() {
  Integer base;
  mpz_fdiv_q(base.get_mpz_t(), lower_.get_num_mpz_t(), lower_.get_den_mpz_t());
  // Exponential then binary search for the largest a with tail >= a.
  Integer below = base;
  Integer above = base + 1;
  Integer step = 1;
  while (tail_at_least(above)) {
    below = above;
    step *= 2;
    above = base + step;
  }
  while (above - below > 1) {
    Integer mid = (below + above) / 2;
    if (tail_at_least(mid)) {
      below = std::move(mid);
    } else {
      above = std::move(mid);
    }
  }
  const Integer a = below;

  // Tail lies in (max(lower, a), min(upper, a + 1)); map through 1/(t - a).
  const Rational a_rat(a);
  const Rational top = upper_ && *upper_ < a_rat + 1 ? *upper_ : a_rat + 1;
  std::optional<Rational> new_upper;
  if (lower_ > a_rat) new_upper = Rational(1 / (lower_ - a_rat));
  lower_ = Rational(1 / (top - a_rat));
  upper_ = std::move(new_upper);
  poly_ = poly_.taylor_shift(a).reversed();
  sign_after_lower_ = poly_.sign_right_of(lower_);
  ++emitted_;
  return a;
}

}  // namespace badpairs
