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

#include "badpairs/cusick.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace badpairs {

long IntegralBasis::max_bits() const {
  return std::max({bit_length(p), bit_length(q), bit_length(r), bit_length(s)});
}

IntegralBasis make_basis(Integer p, Integer q, Integer r, Integer s) {
  IntegralBasis b;
  b.alpha = FieldElement(0, Rational(p), Rational(q));
  b.beta = FieldElement(0, Rational(r), Rational(s));
  b.p = std::move(p);
  b.q = std::move(q);
  b.r = std::move(r);
  b.s = std::move(s);
  return b;
}

IntegralBasis build_basis(const Convergent& first, const Convergent& second) {
  const Integer det = first.p * second.q - second.p * first.q;
  if (abs(det) != 1) {
    throw std::invalid_argument(
        "convergents " + std::to_string(first.index) + " and " +
        std::to_string(second.index) + " are not consecutive (determinant " +
        det.get_str() + ")");
  }
  IntegralBasis b = make_basis(first.q, -first.p, -second.q, second.p);
  if (abs(b.determinant()) != 1) {
    throw InvariantViolation("basis matrix is not unimodular");
  }
  b.first_index = first.index;
  b.second_index = second.index;
  return b;
}

ABCTriple transform_abc(const Integer& p, const Integer& q, const Integer& r,
                        const Integer& s, const FieldElement& a,
                        const FieldElement& b, const FieldElement& c) {
  auto lin = [&](const Integer& ka, const Integer& kb, const Integer& kc) {
    return Rational(ka) * a + Rational(kb) * b + Rational(kc) * c;
  };
  return ABCTriple{
      lin(s * s, -r * s, r * r),
      lin(-2 * q * s, p * s + q * r, -2 * p * r),
      lin(q * q, -p * q, p * p),
  };
}

ABCTriple compute_abc(const IntegralBasis& basis) {
  const ConjugateConstants& k = conjugate_constants();
  ABCTriple abc =
      transform_abc(basis.p, basis.q, basis.r, basis.s, k.a, k.b, k.c);
  const FieldElement disc = abc.discriminant();
  if (!disc.is_rational() || abs(disc.x()) != 49) {
    throw InvariantViolation("B^2 - 4AC = " + disc.to_string() +
                             ", expected +-49");
  }
  return abc;
}

const char* to_string(MaxTerm term) {
  switch (term) {
    case MaxTerm::kSumPlus:
      return "A+B+C";
    case MaxTerm::kSumMinus:
      return "A-B+C";
    case MaxTerm::kFourA:
      return "49/4A";
    case MaxTerm::kFourC:
      return "49/4C";
  }
  return "?";
}

long default_start_bits(const IntegralBasis& basis) {
  return 2 * basis.max_bits() + 128;
}

namespace {

constexpr int kTieRounds = 3;

long digits_to_bits(int digits) {
  return static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 1;
}

// Field elements whose absolute values are the four max candidates.
std::array<FieldElement, 4> candidate_elements(const ABCTriple& abc) {
  const FieldElement four_a_inv = (Rational(4) * abc.A).inverse();
  const FieldElement four_c_inv = (Rational(4) * abc.C).inverse();
  return {abc.A + abc.B + abc.C, abc.A - abc.B + abc.C,
          Rational(49) * four_a_inv, Rational(49) * four_c_inv};
}

// Achieving terms among `contenders` if they are exactly equal in absolute
// value; empty otherwise.
std::vector<MaxTerm> exact_ties(const ABCTriple& abc,
                                const std::vector<MaxTerm>& contenders) {
  const auto elems = candidate_elements(abc);
  const FieldElement& first = elems[static_cast<std::size_t>(contenders[0])];
  for (MaxTerm t : contenders) {
    const FieldElement& u = elems[static_cast<std::size_t>(t)];
    if (u != first && u != -first) return {};
  }
  return contenders;
}

}  // namespace

CStarCertificate cstar(const IntegralBasis& basis, int digits,
                       long start_bits) {
  if (digits < 1) throw std::invalid_argument("digits must be at least 1");
  CStarCertificate cert;
  cert.basis = basis;
  cert.abc = compute_abc(basis);
  cert.det = basis.determinant();
  cert.disc = cert.abc.discriminant().x();
  if (abs(cert.det) != 1) {
    throw InvariantViolation("basis matrix is not unimodular");
  }

  const auto ud = static_cast<unsigned long>(digits);
  long bits = start_bits > 0 ? start_bits : default_start_bits(basis);
  int tie_rounds = 0;
  for (;;) {
    const long work = bits + digits_to_bits(digits);
    const CertifiedInterval a =
        evaluate_with_root_bits(cert.abc.A, Embedding::kRoot0, bits);
    const CertifiedInterval b =
        evaluate_with_root_bits(cert.abc.B, Embedding::kRoot0, bits);
    const CertifiedInterval c =
        evaluate_with_root_bits(cert.abc.C, Embedding::kRoot0, bits);
    if (a.contains_zero() || c.contains_zero()) {
      bits *= 2;
      continue;
    }
    const Integer four(4), forty_nine(49);
    const std::array<CertifiedInterval, 4> cand = {
        (a + b + c).abs(),
        (a - b + c).abs(),
        (a.abs() * four).reciprocal(work) * forty_nine,
        (c.abs() * four).reciprocal(work) * forty_nine,
    };
    Dyadic max_lo = cand[0].lo();
    Dyadic max_hi = cand[0].hi();
    for (const auto& iv : cand) {
      max_lo = std::max(max_lo, iv.lo());
      max_hi = std::max(max_hi, iv.hi());
    }
    if (max_lo.sign() <= 0) {
      bits *= 2;
      continue;
    }
    const CertifiedInterval value =
        CertifiedInterval(max_lo, max_hi).reciprocal(work);
    std::vector<MaxTerm> contenders;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (cand[i].hi() >= max_lo) contenders.push_back(static_cast<MaxTerm>(i));
    }
    auto text = certified_digits(value, ud);
    if (text && contenders.size() == 1) {
      cert.cstar = *text;
      cert.achieving = contenders;
      cert.root_bits = bits;
      break;
    }
    if (text && ++tie_rounds > kTieRounds) {
      auto ties = exact_ties(cert.abc, contenders);
      if (!ties.empty()) {
        cert.cstar = *text;
        cert.achieving = std::move(ties);
        cert.root_bits = bits;
        break;
      }
    }
    bits *= 2;
  }

  FracParts fp = frac_parts(basis, digits);
  cert.alpha_frac = std::move(fp.alpha);
  cert.beta_frac = std::move(fp.beta);
  return cert;
}

std::string fractional_digits(const FieldElement& u, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be at least 1");
  long bits = u.coefficient_bits() + digits_to_bits(digits) + 64;
  for (;;) {
    const CertifiedInterval v =
        evaluate_with_root_bits(u, Embedding::kRoot0, bits);
    const Integer whole = v.lo().floor();
    if (whole == v.hi().floor()) {
      const CertifiedInterval frac = v - CertifiedInterval::point(Dyadic(whole));
      if (auto text = certified_digits(frac, static_cast<unsigned long>(digits))) {
        return *text;
      }
    }
    bits *= 2;
  }
}

FracParts frac_parts(const IntegralBasis& basis, int digits) {
  return {fractional_digits(basis.alpha, digits),
          fractional_digits(basis.beta, digits)};
}

namespace {

// Orders nonnegative decimal strings with the same number of fraction digits.
int compare_decimal(const std::string& a, const std::string& b) {
  const auto ia = a.find('.');
  const auto ib = b.find('.');
  if (ia != ib) return ia < ib ? -1 : 1;
  return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
}

}  // namespace

TruncationChoice select_best_truncation(const PatternHit& hit,
                                        std::span<const Integer> quotients,
                                        int digits) {
  const std::size_t len = pattern_length(hit.kind);
  const std::size_t n = quotients.size();
  if (hit.start_index + len > n) {
    throw std::invalid_argument("pattern at index " +
                                std::to_string(hit.start_index) +
                                " extends past the available quotients");
  }
  const std::size_t k_lo = hit.start_index > 0 ? hit.start_index - 1 : 0;
  const std::size_t k_hi = std::min(hit.start_index + len - 1, n - 2);

  std::vector<Convergent> window;
  ConvergentRecurrence rec;
  for (std::size_t i = 0; i <= k_hi + 1; ++i) {
    const Convergent& c = rec.push(quotients[i]);
    if (i >= k_lo) window.push_back(c);
  }

  TruncationChoice choice;
  bool have_best = false;
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    const IntegralBasis basis =
        build_basis(window[k - k_lo], window[k - k_lo + 1]);
    CStarCertificate cert = cstar(basis, digits);
    choice.candidates.push_back({k, cert.cstar, cert.achieving});
    if (!have_best || compare_decimal(cert.cstar, choice.certificate.cstar) > 0) {
      choice.best_k = k;
      choice.certificate = std::move(cert);
      have_best = true;
    }
  }
  return choice;
}

}  // namespace badpairs
