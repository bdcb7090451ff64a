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

#include "badpairs/real_root.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace badpairs {

namespace {

constexpr unsigned long kSeedBits = 64;
constexpr int kMaxNudges = 64;

Integer floor_scaled(const Rational& x, unsigned long scale) {
  Integer num = x.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), scale);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
  return r;
}

Integer ceil_scaled(const Rational& x, unsigned long scale) {
  Integer num = x.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), scale);
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
  return r;
}

// Sign of X/2^scale - x.
int compare_scaled(const Integer& X, unsigned long scale, const Rational& x) {
  Integer lhs = X * x.get_den();
  Integer rhs = x.get_num();
  mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), scale);
  return cmp(lhs, rhs);
}

}  // namespace

struct RealRootEnclosure::State {
  std::mutex mu;
  Integer estimate;
  unsigned long scale = 0;
};

RealRootEnclosure::RealRootEnclosure(IntegerPolynomial poly, Rational lo,
                                     Rational hi)
    : poly_(std::move(poly)),
      derivative_(poly_.derivative()),
      lo_(std::move(lo)),
      hi_(std::move(hi)),
      sign_lo_(poly_.sign_at(lo_)),
      state_(std::make_shared<State>()) {
  if (!(lo_ < hi_)) throw std::invalid_argument("isolating interval is empty");
  const int sign_hi = poly_.sign_at(hi_);
  if (sign_lo_ == 0 || sign_hi == 0 || sign_lo_ == sign_hi) {
    throw std::invalid_argument(
        "polynomial must take nonzero values of opposite sign at the ends of "
        "the isolating interval");
  }
}

bool RealRootEnclosure::root_above(const Integer& x,
                                   unsigned long scale) const {
  // Root >= x / 2^scale.
  if (compare_scaled(x, scale, lo_) <= 0) return true;
  if (compare_scaled(x, scale, hi_) >= 0) return false;
  const int s = sgn(poly_.scaled_value(x, scale));
  return s == 0 || s == sign_lo_;
}

Integer RealRootEnclosure::bisect_floor(unsigned long scale) const {
  Integer below = floor_scaled(lo_, scale);
  Integer above = ceil_scaled(hi_, scale);
  while (above - below > 1) {
    Integer mid = (below + above) / 2;
    if (root_above(mid, scale)) {
      below = std::move(mid);
    } else {
      above = std::move(mid);
    }
  }
  return below;
}

Integer RealRootEnclosure::newton_estimate(unsigned long scale) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  if (state_->scale == 0) {
    state_->estimate = bisect_floor(kSeedBits);
    state_->scale = kSeedBits;
  }
  Integer x = state_->estimate;
  unsigned long s = state_->scale;
  if (s >= scale) {
    mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), s - scale);
    return x;
  }
  auto step = [&] {
    const Integer fp = derivative_.scaled_value(x, s);
    if (fp == 0) return;
    Integer delta;
    mpz_tdiv_q(delta.get_mpz_t(), poly_.scaled_value(x, s).get_mpz_t(),
               fp.get_mpz_t());
    x -= delta;
  };
  while (s < scale) {
    const unsigned long next = std::min(2 * s, scale);
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), next - s);
    s = next;
    step();
  }
  step();
  if (compare_scaled(x, s, lo_) > 0 && compare_scaled(x, s, hi_) < 0) {
    state_->estimate = x;
    state_->scale = s;
  }
  return x;
}

CertifiedInterval RealRootEnclosure::enclose(long bits) const {
  const unsigned long scale = static_cast<unsigned long>(std::max(bits, 1L));
  Integer m = newton_estimate(scale);
  bool found = false;
  if (root_above(m, scale)) {
    for (int i = 0; i < kMaxNudges; ++i) {
      if (!root_above(m + 1, scale)) {
        found = true;
        break;
      }
      ++m;
    }
  } else {
    for (int i = 0; i < kMaxNudges; ++i) {
      --m;
      if (root_above(m, scale)) {
        found = true;
        break;
      }
    }
  }
  if (!found) m = bisect_floor(scale);
  const long e = -static_cast<long>(scale);
  return {Dyadic(m, e), Dyadic(m + 1, e)};
}

}  // namespace badpairs
