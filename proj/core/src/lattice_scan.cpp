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

// Record search by lattice enumeration. Given the current record q0 with
// scaled error E, the next record is the least q > q0 with eps(q) < E. All
// (q, p1, p2) with q <= Qb and both scaled errors <= E are the points of
//
//   L = span{(E, a Qb, b Qb), (0, -den Qb, 0), (0, 0, -den Qb)}
//
// inside the cube of radius R = Qb E. After LLL the coefficients of such
// points are bounded through the inverse basis, and the box is enumerated.

#include <array>
#include <cmath>

#include "badpairs/approx.hpp"
#include "approx_internal.hpp"

namespace badpairs {
namespace {

using Vec = std::array<Integer, 3>;
using Basis = std::array<Vec, 3>;
using RMatrix = std::array<std::array<Rational, 3>, 3>;

Rational dot(const std::array<Rational, 3>& u, const std::array<Rational, 3>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

std::array<Rational, 3> to_rational(const Vec& v) {
  return {Rational(v[0]), Rational(v[1]), Rational(v[2])};
}

struct GramSchmidt {
  std::array<std::array<Rational, 3>, 3> star;
  std::array<Rational, 3> norm;
  RMatrix mu;
};

GramSchmidt gram_schmidt(const Basis& b) {
  GramSchmidt g;
  for (int i = 0; i < 3; ++i) {
    auto v = to_rational(b[i]);
    const auto bi = v;
    for (int j = 0; j < i; ++j) {
      g.mu[i][j] = g.norm[j] == 0 ? Rational(0) : Rational(dot(bi, g.star[j]) / g.norm[j]);
      for (int t = 0; t < 3; ++t) v[t] -= g.mu[i][j] * g.star[j][t];
    }
    g.star[i] = v;
    g.norm[i] = dot(v, v);
  }
  return g;
}

Integer round_nearest(const Rational& x) {
  Integer twice_num = 2 * x.get_num() + x.get_den();
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), twice_num.get_mpz_t(), Integer(2 * x.get_den()).get_mpz_t());
  return r;
}

void lll(Basis& b) {
  const Rational delta(3, 4);
  int k = 1;
  GramSchmidt g = gram_schmidt(b);
  while (k < 3) {
    for (int j = k - 1; j >= 0; --j) {
      const Integer m = round_nearest(g.mu[k][j]);
      if (m != 0) {
        for (int t = 0; t < 3; ++t) b[k][t] -= m * b[j][t];
        g = gram_schmidt(b);
      }
    }
    const Rational lhs = g.norm[k];
    const Rational rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norm[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      g = gram_schmidt(b);
      k = std::max(k - 1, 1);
    }
  }
}

RMatrix inverse(const Basis& b) {
  RMatrix m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = Rational(b[i][j]);
  auto cof = [&](int r, int c) {
    int rows[2], cols[2];
    for (int i = 0, n = 0; i < 3; ++i) if (i != r) rows[n++] = i;
    for (int j = 0, n = 0; j < 3; ++j) if (j != c) cols[n++] = j;
    Rational v = m[rows[0]][cols[0]] * m[rows[1]][cols[1]] -
                 m[rows[0]][cols[1]] * m[rows[1]][cols[0]];
    return ((r + c) % 2 == 0) ? v : Rational(-v);
  };
  Rational det = 0;
  for (int j = 0; j < 3; ++j) det += m[0][j] * cof(0, j);
  RMatrix inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv[j][i] = cof(i, j) / det;
  return inv;
}

constexpr long kMaxBoxPoints = 20'000'000;

// Every q in [1, Qb] with both scaled errors <= E.
std::vector<Integer> box_denominators(const detail::ScaledPair& pair,
                                      const Integer& e, const Integer& qb) {
  const Integer radius = qb * e;
  Basis b = {{{e, pair.a * qb, pair.b * qb},
              {0, -pair.den * qb, 0},
              {0, 0, -pair.den * qb}}};
  lll(b);
  const RMatrix inv = inverse(b);
  std::array<long, 3> bound{};
  long volume = 1;
  for (int i = 0; i < 3; ++i) {
    Rational s = 0;
    for (int j = 0; j < 3; ++j) s += abs(inv[j][i]);
    const Integer bi = Integer(s.get_num() * radius / s.get_den()) + 1;
    if (!bi.fits_slong_p() || bi > kMaxBoxPoints) {
      throw std::logic_error("lattice enumeration box too large");
    }
    bound[i] = bi.get_si();
    volume *= 2 * bound[i] + 1;
    if (volume > kMaxBoxPoints) {
      throw std::logic_error("lattice enumeration box too large");
    }
  }
  std::vector<Integer> out;
  Vec v;
  for (long c0 = -bound[0]; c0 <= bound[0]; ++c0) {
    for (long c1 = -bound[1]; c1 <= bound[1]; ++c1) {
      for (long c2 = -bound[2]; c2 <= bound[2]; ++c2) {
        for (int t = 0; t < 3; ++t) v[t] = c0 * b[0][t] + c1 * b[1][t] + c2 * b[2][t];
        if (v[0] > 0 && abs(v[0]) <= radius && abs(v[1]) <= radius &&
            abs(v[2]) <= radius) {
          out.push_back(v[0] / e);
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<BestApproxRecord> best_approx_lattice(const FixedPointReal& alpha,
                                                  const FixedPointReal& beta,
                                                  const Integer& q_max,
                                                  const ScanProgress& progress) {
  alpha.check_denominator(q_max);
  beta.check_denominator(q_max);
  const detail::ScaledPair pair(alpha, beta);

  std::vector<BestApproxRecord> out;
  out.push_back(pair.record(1));
  Integer q = 1;
  Integer e = out.back().eps_scaled;
  while (e > 0 && q < q_max) {
    // About two box points are expected once Qb ~ den^2 / (2 E^2).
    Integer qb = pair.den * pair.den / (2 * e * e);
    qb = std::max(qb, Integer(2 * q));
    qb = std::min(qb, q_max);
    std::optional<Integer> next;
    for (;;) {
      for (const Integer& cand : box_denominators(pair, e, qb)) {
        if (cand > q && (!next || cand < *next) && pair.eps(cand) < e) {
          next = cand;
        }
      }
      if (next || qb >= q_max) break;
      qb = std::min(Integer(4 * qb), q_max);
    }
    if (!next) break;
    q = *next;
    out.push_back(pair.record(q));
    e = out.back().eps_scaled;
    if (progress) progress(q);
  }
  return out;
}

}  // namespace badpairs
