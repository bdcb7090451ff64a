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

// Sup-norm simultaneous approximation of a pair (alpha, beta) given as
// decimal fixed-point numbers: the measure c = q * eps^2 with
// eps = max(|q alpha - p1|, |q beta - p2|), and enumeration of best
// approximations (denominators whose eps beats every smaller one).

#ifndef BADPAIRS_APPROX_HPP_
#define BADPAIRS_APPROX_HPP_

#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "badpairs/dyadic.hpp"
#include "badpairs/field.hpp"

namespace badpairs {

class ResolutionExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// value = mantissa / 10^scale. Unless exact, the real it stands for lies
// within 10^-error_digits of value.
class FixedPointReal {
 public:
  FixedPointReal(Integer mantissa, long scale, bool exact);

  // Plain decimal such as "0.2851877" or "-3.5"; no exponent.
  static FixedPointReal parse(std::string_view text, bool exact = false);

  // Truncated fractional part of u under theta, correct to 10^-digits.
  static FixedPointReal fractional_part_of(const FieldElement& u, long digits);

  const Integer& mantissa() const { return mantissa_; }
  long scale() const { return scale_; }
  bool exact() const { return exact_; }
  long error_digits() const { return error_digits_; }

  // Same value with a larger scale; the error bound is unchanged.
  FixedPointReal rescaled(long scale) const;

  // Largest q allowed by scale >= 2 floor(log10 q) + 10, i.e.
  // 10^(floor((error_digits - 10) / 2) + 1) - 1. Unbounded when exact.
  std::optional<Integer> max_denominator() const;
  void check_denominator(const Integer& q) const;

  Rational value() const;
  // Bound on |true value - value()|: 0 when exact.
  Rational error_bound() const;
  std::string to_string() const;

 private:
  Integer mantissa_;
  long scale_;
  bool exact_;
  long error_digits_;
};

struct Measure1D {
  Integer p;          // nearest integer to q alpha
  Rational distance;  // |q alpha - p| for the represented alpha
  Rational c;         // q * distance
  Rational error_bound;  // |c - true c|
};

// q * ||q alpha||. Throws ResolutionExceeded if q is too large for alpha.
Measure1D c_measure_1d(const FixedPointReal& alpha, const Integer& q);

struct Measure2D {
  Integer p1, p2;
  Rational eps;
  Rational c;  // q eps^2
  Rational error_bound;
};

Measure2D c_measure_2d(const FixedPointReal& alpha, const FixedPointReal& beta,
                       const Integer& q);

struct BestApproxRecord {
  Integer q, p1, p2;
  Integer eps_scaled;  // eps * 10^scale, exact for the represented inputs
  long scale = 0;

  Rational eps() const;
  Rational c() const;
  double eps_double() const;
  double c_double() const;

  friend bool operator==(const BestApproxRecord&,
                         const BestApproxRecord&) = default;
};

using ScanProgress = std::function<void(const Integer& q)>;

// Running-minimum scan over q = 1..q_max with strict improvement.
std::vector<BestApproxRecord> best_approx_scan(const FixedPointReal& alpha,
                                               const FixedPointReal& beta,
                                               const Integer& q_max,
                                               const ScanProgress& progress = {});

// Same records as best_approx_scan, found by lattice reduction instead of
// visiting every q. Cost grows with the number of records, not with q_max.
std::vector<BestApproxRecord> best_approx_lattice(
    const FixedPointReal& alpha, const FixedPointReal& beta,
    const Integer& q_max, const ScanProgress& progress = {});

struct TransientReport {
  // Largest q such that every record with denominator <= q has c > threshold.
  Integer transient_end;
  Rational min_c;
  Integer argmin_q;
  std::optional<Integer> last_below;  // last record with c <= threshold
  std::size_t records = 0;
};

// Throws std::invalid_argument for an empty record list or a negative
// threshold.
TransientReport transient_report(const std::vector<BestApproxRecord>& records,
                                 const Rational& threshold);

// CSV with header "q,p1,p2,eps,c"; eps and c with 12 significant digits.
void write_records_csv(std::ostream& out,
                       const std::vector<BestApproxRecord>& records);
std::string format_record_csv(const BestApproxRecord& record);
constexpr const char* kRecordCsvHeader = "q,p1,p2,eps,c";

}  // namespace badpairs

#endif  // BADPAIRS_APPROX_HPP_
