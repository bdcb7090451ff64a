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

#include "badpairs/approx.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <limits>

#include "badpairs/cusick.hpp"
#include "approx_internal.hpp"

namespace badpairs {

FixedPointReal::FixedPointReal(Integer mantissa, long scale, bool exact)
    : mantissa_(std::move(mantissa)),
      scale_(scale),
      exact_(exact),
      error_digits_(scale) {
  if (scale < 0) throw std::invalid_argument("negative fixed-point scale");
}

FixedPointReal FixedPointReal::parse(std::string_view text, bool exact) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
      if (seen_point) ++scale;
    } else {
      throw std::invalid_argument("malformed decimal '" + std::string(text) +
                                  "'");
    }
  }
  if (digits.empty()) {
    throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
  }
  Integer m(digits, 10);
  if (negative) m = -m;
  return FixedPointReal(std::move(m), scale, exact);
}

FixedPointReal FixedPointReal::fractional_part_of(const FieldElement& u,
                                                  long digits) {
  return parse(fractional_digits(u, static_cast<int>(digits)), false);
}

FixedPointReal FixedPointReal::rescaled(long scale) const {
  if (scale < scale_) throw std::invalid_argument("rescale would drop digits");
  FixedPointReal r(mantissa_ * pow10(static_cast<unsigned long>(scale - scale_)),
                   scale, exact_);
  r.error_digits_ = error_digits_;
  return r;
}

std::optional<Integer> FixedPointReal::max_denominator() const {
  if (exact_) return std::nullopt;
  const long shifted = error_digits_ - 10;
  const long k = (shifted >= 0 ? shifted / 2 : -((-shifted + 1) / 2)) + 1;
  if (k <= 0) return Integer(0);
  return pow10(static_cast<unsigned long>(k)) - 1;
}

void FixedPointReal::check_denominator(const Integer& q) const {
  if (q < 1) throw std::invalid_argument("denominator must be positive");
  const auto limit = max_denominator();
  if (limit && q > *limit) {
    throw ResolutionExceeded("q = " + q.get_str() + " exceeds " +
                             limit->get_str() + ", the largest denominator " +
                             "resolved by " + std::to_string(error_digits_) +
                             " decimal digits");
  }
}

Rational FixedPointReal::value() const {
  Rational v(mantissa_, pow10(static_cast<unsigned long>(scale_)));
  v.canonicalize();
  return v;
}

Rational FixedPointReal::error_bound() const {
  if (exact_) return 0;
  return Rational(1, pow10(static_cast<unsigned long>(error_digits_)));
}

std::string FixedPointReal::to_string() const {
  if (scale_ == 0) return mantissa_.get_str();
  std::string s = Integer(abs(mantissa_)).get_str();
  const auto us = static_cast<std::size_t>(scale_);
  if (s.size() <= us) s.insert(0, us + 1 - s.size(), '0');
  s.insert(s.size() - us, ".");
  return (mantissa_ < 0 ? "-" : "") + s;
}

namespace detail {

ScaledPair::ScaledPair(const FixedPointReal& alpha, const FixedPointReal& beta)
    : scale(std::max(alpha.scale(), beta.scale())),
      den(pow10(static_cast<unsigned long>(scale))) {
  a_full = alpha.rescaled(scale).mantissa();
  b_full = beta.rescaled(scale).mantissa();
  a = a_full;
  b = b_full;
  mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), den.get_mpz_t());
  mpz_fdiv_r(b.get_mpz_t(), b.get_mpz_t(), den.get_mpz_t());
}

Nearest nearest(const Integer& q, const Integer& m, const Integer& den) {
  const Integer qm = q * m;
  Nearest n;
  Integer r;
  mpz_fdiv_qr(n.p.get_mpz_t(), r.get_mpz_t(), qm.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) {
    n.p += 1;
    n.distance = den - r;
  } else {
    n.distance = r;
  }
  return n;
}

BestApproxRecord ScaledPair::record(const Integer& q) const {
  Nearest na = nearest(q, a_full, den);
  Nearest nb = nearest(q, b_full, den);
  BestApproxRecord rec;
  rec.q = q;
  rec.p1 = std::move(na.p);
  rec.p2 = std::move(nb.p);
  rec.eps_scaled = std::max(na.distance, nb.distance);
  rec.scale = scale;
  return rec;
}

Integer ScaledPair::eps(const Integer& q) const {
  return std::max(nearest(q, a, den).distance, nearest(q, b, den).distance);
}

}  // namespace detail

Measure1D c_measure_1d(const FixedPointReal& alpha, const Integer& q) {
  alpha.check_denominator(q);
  const Integer den = pow10(static_cast<unsigned long>(alpha.scale()));
  detail::Nearest n = detail::nearest(q, alpha.mantissa(), den);
  Measure1D m;
  m.p = std::move(n.p);
  m.distance = Rational(n.distance, den);
  m.distance.canonicalize();
  m.c = Rational(q) * m.distance;
  m.error_bound = Rational(q * q) * alpha.error_bound();
  return m;
}

Measure2D c_measure_2d(const FixedPointReal& alpha, const FixedPointReal& beta,
                       const Integer& q) {
  alpha.check_denominator(q);
  beta.check_denominator(q);
  const detail::ScaledPair pair(alpha, beta);
  const BestApproxRecord rec = pair.record(q);
  Measure2D m;
  m.p1 = rec.p1;
  m.p2 = rec.p2;
  m.eps = rec.eps();
  m.c = rec.c();
  const Rational delta =
      Rational(q) * std::max(alpha.error_bound(), beta.error_bound());
  m.error_bound = Rational(q) * (2 * m.eps * delta + delta * delta);
  return m;
}

Rational BestApproxRecord::eps() const {
  Rational e(eps_scaled, pow10(static_cast<unsigned long>(scale)));
  e.canonicalize();
  return e;
}

Rational BestApproxRecord::c() const {
  Rational c(q * eps_scaled * eps_scaled,
             pow10(2 * static_cast<unsigned long>(scale)));
  c.canonicalize();
  return c;
}

double BestApproxRecord::eps_double() const { return eps().get_d(); }
double BestApproxRecord::c_double() const { return c().get_d(); }

std::vector<BestApproxRecord> best_approx_scan(const FixedPointReal& alpha,
                                               const FixedPointReal& beta,
                                               const Integer& q_max,
                                               const ScanProgress& progress) {
  alpha.check_denominator(q_max);
  beta.check_denominator(q_max);
  if (!q_max.fits_ulong_p()) {
    throw std::invalid_argument("q_max too large for an exhaustive scan");
  }
  const unsigned long last = q_max.get_ui();
  const detail::ScaledPair pair(alpha, beta);

  std::vector<BestApproxRecord> out;
  Integer ra, rb, da, db, e, best;
  bool have_best = false;
  for (unsigned long q = 1; q <= last; ++q) {
    ra += pair.a;
    if (ra >= pair.den) ra -= pair.den;
    rb += pair.b;
    if (rb >= pair.den) rb -= pair.den;
    mpz_sub(da.get_mpz_t(), pair.den.get_mpz_t(), ra.get_mpz_t());
    mpz_sub(db.get_mpz_t(), pair.den.get_mpz_t(), rb.get_mpz_t());
    const Integer& ea = ra < da ? ra : da;
    const Integer& eb = rb < db ? rb : db;
    const Integer& eq = ea < eb ? eb : ea;
    if (!have_best || eq < best) {
      best = eq;
      have_best = true;
      out.push_back(pair.record(Integer(q)));
    }
    if (progress && (q & 0xFFFF) == 0) progress(Integer(q));
  }
  return out;
}

TransientReport transient_report(const std::vector<BestApproxRecord>& records,
                                 const Rational& threshold) {
  if (records.empty()) throw std::invalid_argument("no records");
  if (threshold < 0) throw std::invalid_argument("negative threshold");
  TransientReport rep;
  rep.records = records.size();
  bool ended = false;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Rational c = records[i].c();
    if (i == 0 || c < rep.min_c) {
      rep.min_c = c;
      rep.argmin_q = records[i].q;
    }
    if (c <= threshold) {
      if (!ended) {
        rep.transient_end = records[i].q - 1;
        ended = true;
      }
      rep.last_below = records[i].q;
    }
  }
  if (!ended) rep.transient_end = records.back().q;
  return rep;
}

std::string format_record_csv(const BestApproxRecord& record) {
  char eps[40], c[40];
  std::snprintf(eps, sizeof eps, "%.12g", record.eps_double());
  std::snprintf(c, sizeof c, "%.12g", record.c_double());
  return record.q.get_str() + "," + record.p1.get_str() + "," +
         record.p2.get_str() + "," + eps + "," + c;
}

void write_records_csv(std::ostream& out,
                       const std::vector<BestApproxRecord>& records) {
  out << kRecordCsvHeader << '\n';
  for (const auto& r : records) out << format_record_csv(r) << '\n';
}

}  // namespace badpairs
