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

// Acceptance checks. Run with one criterion id; prints a single line
//   PASS <id>: <detail>   or   FAIL <id>: <detail>
// and exits 0 or 1. With no argument, lists the ids.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <unistd.h>

#include "badpairs/approx.hpp"
#include "badpairs/cfrac.hpp"
#include "badpairs/cusick.hpp"
#include "badpairs/field.hpp"
#include "badpairs/patterns.hpp"
#include "badpairs_tools/jobs.hpp"
#include "oracle.hpp"
#include "published.hpp"

namespace {

using namespace badpairs;
namespace fs = std::filesystem;

const Rational kTolerance(5, 100000000);

class Verdict {
 public:
  void check(bool ok, const std::string& what) {
    (ok ? passed_ : failed_).push_back(what);
  }
  bool ok() const { return failed_.empty(); }
  std::string detail() const {
    const auto& list = ok() ? passed_ : failed_;
    std::string s;
    for (const auto& item : list) s += (s.empty() ? "" : "; ") + item;
    return s;
  }

 private:
  std::vector<std::string> passed_, failed_;
};

std::vector<Integer> theta_quotients(std::size_t n) {
  IntervalCFStream s(CubicRoot::theta());
  std::vector<Integer> q;
  q.reserve(n);
  while (q.size() < n) q.push_back(s.next());
  return q;
}

Rational decimal(const std::string& text) {
  return FixedPointReal::parse(text, true).value();
}

std::string to_fixed(const Rational& r, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, r.get_d());
  return buf;
}

std::string range(const std::vector<std::size_t>& pos) {
  return std::to_string(pos.front()) + "-" + std::to_string(pos.back());
}

// Locates the published window by its quotients, then certifies it through
// the same path as the `cstar` command.
void check_case(Verdict& v, const published::Case& pub,
                const std::vector<Integer>& q, bool check_digits) {
  const std::string name = std::string("(") + pub.label + ")";
  const Integer lo = std::min(pub.n1, pub.n2);
  const PatternHit* hit = nullptr;
  const auto hits = find_patterns(q, lo);
  for (const auto& h : hits) {
    if (h.kind == PatternKind::kOneOne && h.n1 == pub.n1 && h.n2 == pub.n2) {
      hit = &h;
      break;
    }
  }
  if (hit == nullptr) {
    v.check(false, name + " window [" + std::to_string(pub.n1) + ",1,1," +
                       std::to_string(pub.n2) + "] not found");
    return;
  }
  const auto pos = hit->positions();
  v.check(pos.front() == pub.first_position && pos.back() == pub.last_position,
          name + " positions " + range(pos) + ", expected " +
              std::to_string(pub.first_position) + "-" +
              std::to_string(pub.last_position));

  const jobs::CStarResult r = jobs::run_cstar(q, hit->start_index, kDefaultDigits);
  const CStarCertificate& cert = r.choice.certificate;
  const Rational diff = abs(decimal(cert.cstar) - decimal(pub.cstar));
  v.check(diff <= kTolerance, name + " c* " + cert.cstar.substr(0, 14) +
                                  " vs " + pub.cstar + ", |diff| " +
                                  to_fixed(diff, 3));
  if (check_digits) {
    v.check(cert.alpha_frac == pub.alpha, name + " alpha 61 digits");
    v.check(cert.beta_frac == pub.beta, name + " beta 61 digits");
  }
}

Verdict case_a() {
  Verdict v;
  check_case(v, published::kCases[0], theta_quotients(100), true);
  return v;
}

Verdict cases_b_c() {
  Verdict v;
  const auto q = theta_quotients(4000);
  check_case(v, published::kCases[1], q, false);
  check_case(v, published::kCases[2], q, false);
  return v;
}

Verdict case_d() {
  Verdict v;
  check_case(v, published::kCases[3], theta_quotients(34000), true);
  return v;
}

Verdict exactness() {
  Verdict v;
  const auto q = theta_quotients(34000);
  std::size_t bases = 0;
  for (const auto& known : jobs::known_cases()) {
    const auto hits = patterns_at(q, known.start_index);
    if (hits.empty()) {
      v.check(false, std::string("(") + known.label + ") no window");
      continue;
    }
    const TruncationChoice choice = select_best_truncation(hits.front(), q);
    for (const auto& cand : choice.candidates) {
      const auto c = convergents(std::span<const Integer>(q).first(cand.k + 2));
      const IntegralBasis b = build_basis(c[cand.k], c[cand.k + 1]);
      const ABCTriple abc = compute_abc(b);
      const FieldElement d = abc.discriminant();
      ++bases;
      const std::string where = std::string("(") + known.label + ") k=" +
                                std::to_string(cand.k);
      if (abs(b.determinant()) != 1) v.check(false, where + " det " + b.determinant().get_str());
      if (!d.is_rational() || abs(d.x()) != 49) v.check(false, where + " disc " + d.to_string());
    }
    const auto& a = choice.certificate.achieving;
    const bool ok = !a.empty() && std::all_of(a.begin(), a.end(), [](MaxTerm t) {
      return t == MaxTerm::kFourA || t == MaxTerm::kFourC;
    });
    std::string names;
    for (MaxTerm t : a) names += std::string(names.empty() ? "" : "=") + to_string(t);
    v.check(ok, std::string("(") + known.label + ") achieved by " + names);
  }
  v.check(bases > 0, std::to_string(bases) + " bases with det +-1, disc +-49");
  return v;
}

Verdict cf_crossval() {
  Verdict v;
  constexpr std::size_t n = 10000;
  const auto a = theta_quotients(n);
  ExactCFStream exact(CubicRoot::theta());
  std::size_t agree = 0;
  for (; agree < n; ++agree) {
    if (exact.next() != a[agree]) break;
  }
  v.check(agree == n, "interval and exact methods agree on " +
                          std::to_string(agree) + "/" + std::to_string(n));

  const auto c = convergents(a);
  const long bits = 2 * bit_length(c.back().q) + 64;
  const CertifiedInterval t = CubicRoot::theta().enclosure().enclose(bits);
  std::size_t bad = 0;
  for (const Convergent& k : c) {
    const CertifiedInterval err =
        ((t * k.q) - CertifiedInterval::point(Dyadic(k.p))).abs() * k.q;
    if (!(err.hi() < Dyadic(1L))) ++bad;
  }
  v.check(bad == 0, std::to_string(c.size() - bad) + "/" +
                        std::to_string(c.size()) +
                        " convergents within 1/Q^2");
  return v;
}

Verdict calibration_1d() {
  Verdict v;
  const FixedPointReal g(oracle::golden_fraction_scaled(40), 40, false);
  const auto records = best_approx_scan(g, g, Integer(1000000));
  std::optional<Rational> best;
  std::size_t used = 0;
  for (const auto& r : records) {
    if (r.q < 100) continue;
    const Measure1D m = c_measure_1d(g, r.q);
    if (!best || m.c < *best) best = m.c;
    ++used;
  }
  const double target = 1.0 / std::sqrt(5.0);
  const bool ok = best && std::abs(best->get_d() - target) <= 0.001;
  v.check(ok, "min c over " + std::to_string(used) + " approximants " +
                  (best ? to_fixed(*best) : "n/a") + " vs 1/sqrt5 " +
                  to_fixed(Rational(target)));
  return v;
}

Verdict verification_path() {
  Verdict v;
  const auto& pub = published::kCases[0];
  const auto records = best_approx_scan(FixedPointReal::parse(pub.alpha),
                                        FixedPointReal::parse(pub.beta),
                                        Integer(1000000));
  const TransientReport rep = transient_report(records, Rational(2, 7));
  v.check(rep.min_c >= Rational(28, 100),
          "min c " + to_fixed(rep.min_c) + " at q=" + rep.argmin_q.get_str() +
              " (floor 0.28)");
  v.check(rep.transient_end > 1000,
          "all c > 2/7 up to q=" + rep.transient_end.get_str() + " (need > 1000)");
  const Rational gap = abs(rep.min_c - decimal(published::kCaseALimit));
  v.check(gap <= Rational(5, 1000), "|min c - " + std::string(published::kCaseALimit) +
                                        "| = " + to_fixed(gap) + " over " +
                                        std::to_string(rep.records) +
                                        " records up to 1e6");
  return v;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict property_suites() {
  Verdict v;
  std::mt19937_64 rng(20261015);

  // Field.
  {
    std::uniform_int_distribution<long> num(-60, 60), den(1, 12);
    auto r = [&] { return Rational(num(rng), den(rng)); };
    auto elem = [&] { return FieldElement(r(), r(), r()); };
    int fails = 0;
    for (int i = 0; i < 300; ++i) {
      const FieldElement a = elem(), b = elem(), c = elem();
      if (a + b != b + a || a * b != b * a) ++fails;
      if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c)) ++fails;
      if (a * (b + c) != a * b + a * c) ++fails;
      if (!a.is_zero() && a * a.inverse() != FieldElement(1L)) ++fails;
      for (Embedding e : {Embedding::kRoot0, Embedding::kRoot1, Embedding::kRoot2}) {
        if (!evaluate(a * b, e, 64).overlaps(evaluate(a, e, 64) * evaluate(b, e, 64)) ||
            !evaluate(a + b, e, 64).overlaps(evaluate(a, e, 64) + evaluate(b, e, 64))) {
          ++fails;
        }
      }
    }
    v.check(fails == 0, "field axioms, inverses, embeddings on 300 triples (" +
                            std::to_string(fails) + " failures)");
  }

  // Pattern scan against a window-by-window rescan.
  {
    const auto q = theta_quotients(100000);
    const std::vector<mpz_class> ref(q.begin(), q.end());
    bool same = true;
    std::size_t total = 0;
    for (long min_n : {1L, 5L, 20L, 100L}) {
      const auto got = find_patterns(q, Integer(min_n));
      const auto want = oracle::naive_patterns(ref, mpz_class(min_n));
      std::set<std::tuple<std::size_t, int, std::string, std::string>> a, b;
      for (const auto& h : got) {
        a.emplace(h.start_index, h.kind == PatternKind::kOneOne ? 11 : 2,
                  h.n1.get_str(), h.n2.get_str());
      }
      for (const auto& h : want) b.emplace(h.start, h.kind, h.n1.get_str(), h.n2.get_str());
      same = same && a == b && got.size() == want.size();
      total += got.size();
    }
    v.check(same, "pattern scan matches rescan on 1e5 terms (" +
                      std::to_string(total) + " hits)");
  }

  // Best approximations against a rational rescan.
  {
    std::uniform_int_distribution<long> digits(0, 99999999);
    bool same = true;
    for (int t = 0; t < 10 && same; ++t) {
      const FixedPointReal a(Integer(digits(rng)), 8, true), b(Integer(digits(rng)), 8, true);
      const auto got = best_approx_scan(a, b, Integer(10000));
      const auto want = oracle::naive_best_approx(a.value(), b.value(), 10000);
      same = got.size() == want.size();
      for (std::size_t i = 0; same && i < got.size(); ++i) {
        same = got[i].q == want[i].q && got[i].p1 == want[i].p1 &&
               got[i].p2 == want[i].p2 && got[i].eps() == want[i].eps;
      }
    }
    v.check(same, "best approximations match rescan at q_max 1e4 on 10 pairs");
  }

  // CF job.
  {
    const fs::path dir = fs::temp_directory_path() /
                         ("badpairs-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    jobs::run_cf(3000, dir / "a.tsv");
    jobs::run_cf(3000, dir / "b.tsv");
    jobs::CfOptions opt;
    opt.checkpoint_every = 700;
    opt.stop_after = 1500;
    jobs::run_cf(3000, dir / "c.tsv", opt);
    { std::ofstream(dir / "c.tsv", std::ios::app) << "1500\t"; }
    jobs::run_cf(3000, dir / "c.tsv");
    const std::string a = slurp(dir / "a.tsv");
    v.check(a == slurp(dir / "b.tsv"), "cf job deterministic");
    v.check(a == slurp(dir / "c.tsv"), "cf job resume identical after kill");
    fs::remove_all(dir);
  }
  return v;
}

const std::map<std::string, std::function<Verdict()>>& criteria() {
  static const std::map<std::string, std::function<Verdict()>> m = {
      {"case_A", case_a},
      {"cases_B_C", cases_b_c},
      {"case_D", case_d},
      {"exactness", exactness},
      {"cf_crossval", cf_crossval},
      {"calibration_1d", calibration_1d},
      {"verification_path", verification_path},
      {"property_suites", property_suites},
  };
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2 || criteria().count(argv[1]) == 0) {
    std::cerr << "usage: badpairs_acceptance <id>\nids:";
    for (const auto& [id, fn] : criteria()) std::cerr << ' ' << id;
    std::cerr << '\n';
    return 2;
  }
  const std::string id = argv[1];
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = criteria().at(id)();
  } catch (const std::exception& e) {
    v.check(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start).count();
  char t[32];
  std::snprintf(t, sizeof t, " [%.1fs]", secs);
  std::cout << (v.ok() ? "PASS " : "FAIL ") << id << ": " << v.detail() << t
            << std::endl;
  return v.ok() ? 0 : 1;
}
