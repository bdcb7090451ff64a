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

#include "badpairs_tools/jobs.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "badpairs/cfrac.hpp"
#include "badpairs/quotient_file.hpp"

namespace badpairs::jobs {

ProgressReporter::ProgressReporter(std::ostream* err,
                                   std::chrono::milliseconds interval)
    : err_(err), interval_(interval), last_(std::chrono::steady_clock::now()) {}

void ProgressReporter::tick(const std::function<std::string()>& message) {
  if (err_ == nullptr) return;
  const auto now = std::chrono::steady_clock::now();
  if (now - last_ < interval_) return;
  last_ = now;
  *err_ << message() << std::endl;
}

// ---- cf -------------------------------------------------------------------

namespace {

constexpr const char* kCheckpointMagic = "badpairs-cf-checkpoint 1";

struct Checkpoint {
  std::size_t emitted = 0;
  long bits = IntervalCFStream::kDefaultInitialBits;
  Dyadic tail_lo, tail_hi;  // enclosure of the tail at index `emitted`
};

std::optional<Checkpoint> read_checkpoint(const fs::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string magic, key_emitted, key_bits, key_lo, lo, key_hi, hi;
  Checkpoint c;
  if (!std::getline(in, magic) || magic != kCheckpointMagic ||
      !(in >> key_emitted >> c.emitted >> key_bits >> c.bits >> key_lo >> lo >>
        key_hi >> hi) ||
      key_emitted != "emitted" || key_bits != "bits" || key_lo != "tail_lo" ||
      key_hi != "tail_hi" || c.bits < 8) {
    throw JobError("corrupt checkpoint " + path.string());
  }
  try {
    c.tail_lo = Dyadic::parse(lo);
    c.tail_hi = Dyadic::parse(hi);
  } catch (const std::invalid_argument&) {
    throw JobError("corrupt checkpoint " + path.string());
  }
  return c;
}

void write_checkpoint(const fs::path& path, const Checkpoint& c) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << kCheckpointMagic << "\nemitted " << c.emitted << "\nbits " << c.bits
        << "\ntail_lo " << c.tail_lo.to_string() << "\ntail_hi "
        << c.tail_hi.to_string() << "\n";
    if (!out) throw JobError("cannot write checkpoint " + tmp.string());
  }
  fs::rename(tmp, path);
}

// Complete lines of an existing quotient file, with the byte offset where
// each line ends. Partial trailing data is not included.
struct ExistingFile {
  std::vector<Integer> quotients;
  std::vector<std::uintmax_t> line_end;
  std::uintmax_t size = 0;
};

ExistingFile read_existing(const fs::path& path) {
  ExistingFile f;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw JobError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  f.size = text.size();
  const std::size_t cut = text.rfind('\n');
  if (cut == std::string::npos) return f;
  std::istringstream lines(text.substr(0, cut + 1));
  try {
    f.quotients = read_quotients(lines);
  } catch (const QuotientFileError& e) {
    throw JobError(path.string() + ": " + e.what());
  }
  std::uintmax_t pos = 0;
  for (std::size_t i = 0; i < f.quotients.size(); ++i) {
    pos = text.find('\n', pos) + 1;
    f.line_end.push_back(pos);
  }
  return f;
}

}  // namespace

fs::path checkpoint_path(const fs::path& out, const CfOptions& options) {
  fs::path name = out.filename();
  name += ".ckpt";
  if (options.checkpoint_dir) return *options.checkpoint_dir / name;
  if (const char* env = std::getenv("BADPAIRS_CHECKPOINT_DIR");
      env != nullptr && *env != '\0') {
    return fs::path(env) / name;
  }
  fs::path p = out;
  p += ".ckpt";
  return p;
}

CfResult run_cf(std::size_t n_terms, const fs::path& out,
                const CfOptions& options) {
  if (n_terms < 1) throw JobError("--terms must be at least 1");
  const fs::path ckpt_path = checkpoint_path(out, options);
  const std::size_t every = std::max<std::size_t>(options.checkpoint_every, 1);

  ExistingFile existing;
  if (fs::exists(out)) {
    existing = read_existing(out);
    const std::uintmax_t keep =
        existing.line_end.empty() ? 0 : existing.line_end.back();
    if (keep != existing.size) fs::resize_file(out, keep);
  }
  Checkpoint ckpt;
  if (auto c = read_checkpoint(ckpt_path)) {
    ckpt = *c;
    if (ckpt.emitted > existing.quotients.size()) {
      throw JobError("checkpoint " + ckpt_path.string() + " records " +
                     std::to_string(ckpt.emitted) + " terms but " +
                     out.string() + " holds only " +
                     std::to_string(existing.quotients.size()));
    }
    if (ckpt.emitted < existing.quotients.size()) {
      const Integer& a = existing.quotients[ckpt.emitted];
      if (ckpt.tail_lo.floor() > a || ckpt.tail_hi.floor() < a) {
        throw JobError("checkpoint corruption: tail enclosure at term " +
                       std::to_string(ckpt.emitted) + " excludes " +
                       a.get_str());
      }
    }
  }

  CfResult result;
  const std::size_t have = existing.quotients.size();
  result.resumed_from = have;

  // Re-derive the last three terms on disk before trusting the file.
  const std::size_t check = std::min<std::size_t>(3, have);
  const std::span<const Integer> known(existing.quotients);
  IntervalCFStream stream = IntervalCFStream::resume(
      CubicRoot::theta(), known.first(have - check), ckpt.bits);
  for (std::size_t i = have - check; i < have; ++i) {
    const Integer a = stream.next();
    if (a != existing.quotients[i]) {
      throw JobError("checkpoint corruption: term " + std::to_string(i) +
                     " recomputes as " + a.get_str() + " but " + out.string() +
                     " has " + existing.quotients[i].get_str());
    }
  }

  if (have >= n_terms) {
    if (have > n_terms) fs::resize_file(out, existing.line_end[n_terms - 1]);
    fs::remove(ckpt_path);
    result.terms = n_terms;
    result.complete = true;
    return result;
  }
  existing = {};

  std::ofstream file(out, std::ios::app | std::ios::binary);
  if (!file) throw JobError("cannot write " + out.string());
  for (std::size_t i = have; i < n_terms; ++i) {
    file << format_quotient(i, stream.next());
    const std::size_t done = i + 1;
    if (done % every == 0) {
      file.flush();
      if (!file) throw JobError("write failed for " + out.string());
      const CertifiedInterval tail = stream.tail_enclosure();
      write_checkpoint(ckpt_path,
                       {done, stream.working_bits(), tail.lo(), tail.hi()});
    }
    if (options.stop_after && done == *options.stop_after && done < n_terms) {
      file.flush();
      result.terms = done;
      return result;
    }
    if (options.progress != nullptr) {
      options.progress->tick([&] {
        return "cf: " + std::to_string(done) + "/" + std::to_string(n_terms) +
               " terms, " + std::to_string(stream.working_bits()) + " bits";
      });
    }
  }
  file.close();
  if (!file) throw JobError("write failed for " + out.string());
  fs::remove(ckpt_path);
  result.terms = n_terms;
  result.complete = true;
  return result;
}

// ---- scan / cstar ---------------------------------------------------------

std::vector<Integer> load_quotients(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw JobError("cannot open " + path.string());
  try {
    return read_quotients(in);
  } catch (const QuotientFileError& e) {
    throw JobError(path.string() + ": " + e.what());
  }
}

std::vector<PatternHit> run_scan(const fs::path& quotients,
                                 const Integer& min_n) {
  if (min_n < 1) throw JobError("--min-n must be at least 1");
  std::ifstream in(quotients);
  if (!in) throw JobError("cannot open " + quotients.string());
  try {
    return rank_hits(find_patterns(in, min_n));
  } catch (const QuotientFileError& e) {
    throw JobError(quotients.string() + ": " + e.what());
  }
}

namespace {

std::string pattern_string(const PatternHit& hit) {
  const std::string mid = hit.kind == PatternKind::kOneOne ? "1,1" : "2";
  return "[" + hit.n1.get_str() + "," + mid + "," + hit.n2.get_str() + "]";
}

std::string achieving_string(const std::vector<MaxTerm>& terms) {
  std::string s;
  for (MaxTerm t : terms) {
    if (!s.empty()) s += "=";
    s += to_string(t);
  }
  return s;
}

}  // namespace

nlohmann::ordered_json certificate_json(const PatternHit& hit,
                                        const TruncationChoice& choice,
                                        int digits) {
  const CStarCertificate& c = choice.certificate;
  const auto pos = hit.positions();
  nlohmann::ordered_json j;
  j["positions"] = {pos.front(), pos.back()};
  j["start_index"] = hit.start_index;
  j["pattern"] = {{"kind", hit.kind == PatternKind::kOneOne ? "11" : "2"},
                  {"n1", hit.n1.get_str()},
                  {"n2", hit.n2.get_str()},
                  {"window", pattern_string(hit)}};
  j["truncation_index"] = choice.best_k;
  j["p"] = c.basis.p.get_str();
  j["q"] = c.basis.q.get_str();
  j["r"] = c.basis.r.get_str();
  j["s"] = c.basis.s.get_str();
  j["cstar"] = c.cstar;
  j["alpha"] = c.alpha_frac;
  j["beta"] = c.beta_frac;
  j["achieving_term"] = achieving_string(c.achieving);
  j["digits"] = digits;
  j["root_bits"] = c.root_bits;
  j["checks"] = {{"det", c.det.get_si()}, {"disc", c.disc.get_str()}};
  nlohmann::ordered_json cands = nlohmann::ordered_json::array();
  for (const auto& cand : choice.candidates) {
    cands.push_back({{"k", cand.k},
                     {"cstar", cand.cstar},
                     {"achieving_term", achieving_string(cand.achieving)}});
  }
  j["candidates"] = std::move(cands);
  return j;
}

CStarResult run_cstar(std::span<const Integer> quotients,
                      std::size_t hit_index, int digits) {
  if (digits < 1) throw JobError("--digits must be at least 1");
  const auto hits = patterns_at(quotients, hit_index);
  if (hits.empty()) {
    throw JobError("no [n1,1,1,n2] or [n1,2,n2] window at index " +
                   std::to_string(hit_index));
  }
  CStarResult r{hits.front(), {}, {}};
  try {
    r.choice = select_best_truncation(r.hit, quotients, digits);
  } catch (const std::invalid_argument& e) {
    throw JobError(e.what());
  }
  r.json = certificate_json(r.hit, r.choice, digits);
  return r;
}

// ---- verify / figure-data -------------------------------------------------

FixedPointReal read_decimal_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw JobError("cannot open " + path.string());
  std::string text, extra;
  if (!(in >> text)) throw JobError(path.string() + " is empty");
  if (in >> extra) throw JobError(path.string() + ": trailing data");
  try {
    return FixedPointReal::parse(text);
  } catch (const std::invalid_argument& e) {
    throw JobError(path.string() + ": " + e.what());
  }
}

std::vector<BestApproxRecord> run_verify(const FixedPointReal& alpha,
                                         const FixedPointReal& beta,
                                         const Integer& q_max,
                                         ScanMethod method,
                                         ProgressReporter* progress) {
  if (q_max < 1) throw JobError("--qmax must be at least 1");
  ScanProgress cb;
  if (progress != nullptr) {
    cb = [progress, &q_max](const Integer& q) {
      progress->tick([&] {
        return "verify: q = " + q.get_str() + " of " + q_max.get_str();
      });
    };
  }
  if (method == ScanMethod::kLattice) {
    return best_approx_lattice(alpha, beta, q_max, cb);
  }
  return best_approx_scan(alpha, beta, q_max, cb);
}

long required_scale(const Integer& q_max) {
  const long log10_floor = static_cast<long>(q_max.get_str().size()) - 1;
  return 2 * log10_floor + 20;
}

const std::vector<KnownCase>& known_cases() {
  static const std::vector<KnownCase> cases = {
      {'A', 56, PatternKind::kOneOne, "[60,1,1,50]"},
      {'B', 2923, PatternKind::kOneOne, "[22,1,1,22]"},
      {'C', 3625, PatternKind::kOneOne, "[272,1,1,215]"},
      {'D', 33876, PatternKind::kOneOne, "[81,1,1,78]"},
  };
  return cases;
}

const KnownCase& known_case(char label) {
  for (const auto& c : known_cases()) {
    if (c.label == label) return c;
  }
  throw JobError(std::string("unknown case '") + label + "'");
}

FigureData run_figure_data(char label, const Integer& q_max, ScanMethod method,
                           ProgressReporter* progress) {
  const KnownCase& kc = known_case(label);
  const std::size_t n = kc.start_index + pattern_length(kc.kind) + 1;
  IntervalCFStream stream(CubicRoot::theta());
  std::vector<Integer> quotients;
  quotients.reserve(n);
  while (quotients.size() < n) quotients.push_back(stream.next());

  CStarResult cs = run_cstar(quotients, kc.start_index, kDefaultDigits);
  if (cs.hit.kind != kc.kind || pattern_string(cs.hit) != kc.pattern) {
    throw InvariantViolation("case " + std::string(1, label) + " expects " +
                             kc.pattern + ", found " + pattern_string(cs.hit));
  }
  const long scale = std::max<long>(kDefaultDigits, required_scale(q_max));
  const IntegralBasis& basis = cs.choice.certificate.basis;
  FixedPointReal alpha = FixedPointReal::fractional_part_of(basis.alpha, scale);
  FixedPointReal beta = FixedPointReal::fractional_part_of(basis.beta, scale);
  auto records = run_verify(alpha, beta, q_max, method, progress);
  return {std::move(cs), std::move(alpha), std::move(beta), std::move(records)};
}

void write_csv_file(const fs::path& path,
                    const std::vector<BestApproxRecord>& records) {
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  if (!out) throw JobError("cannot write " + path.string());
  write_records_csv(out, records);
  if (!out) throw JobError("write failed for " + path.string());
}

nlohmann::ordered_json transient_json(const TransientReport& report) {
  nlohmann::ordered_json j;
  j["records"] = report.records;
  j["transient_end"] = report.transient_end.get_str();
  j["min_c"] = report.min_c.get_d();
  j["argmin_q"] = report.argmin_q.get_str();
  j["last_below"] = report.last_below ? nlohmann::ordered_json(report.last_below->get_str())
                                      : nlohmann::ordered_json(nullptr);
  return j;
}

// ---- pipeline -------------------------------------------------------------

std::vector<PipelineRow> run_pipeline(const PipelineConfig& config) {
  if (config.min_n < 1) throw JobError("--min-n must be at least 1");
  if (config.digits < 1) throw JobError("--digits must be at least 1");
  fs::create_directories(config.out_dir);
  CfOptions cf_options;
  cf_options.progress = config.progress;
  const fs::path qpath = config.out_dir / "quotients.tsv";
  run_cf(config.terms, qpath, cf_options);
  const std::vector<Integer> quotients = load_quotients(qpath);

  std::vector<PipelineRow> rows;
  for (const PatternHit& hit :
       rank_hits(find_patterns(quotients, config.min_n))) {
    CStarResult cs = run_cstar(quotients, hit.start_index, config.digits);
    const auto pos = hit.positions();
    const std::string tag = std::to_string(pos.front());
    PipelineRow row;
    row.first_position = pos.front();
    row.last_position = pos.back();
    row.pattern = pattern_string(hit);
    row.cstar = cs.choice.certificate.cstar;
    row.achieving = achieving_string(cs.choice.certificate.achieving);
    row.certificate_file = "cert-" + tag + ".json";
    row.csv_file = "approx-" + tag + ".csv";
    {
      std::ofstream out(config.out_dir / row.certificate_file, std::ios::trunc);
      out << cs.json.dump(2) << "\n";
      if (!out) throw JobError("cannot write " + row.certificate_file);
    }
    const long scale = std::max<long>(config.digits, required_scale(config.q_max));
    const IntegralBasis& basis = cs.choice.certificate.basis;
    const auto records = run_verify(
        FixedPointReal::fractional_part_of(basis.alpha, scale),
        FixedPointReal::fractional_part_of(basis.beta, scale), config.q_max,
        config.method, config.progress);
    write_csv_file(config.out_dir / row.csv_file, records);
    row.min_c = transient_report(records, Rational(2, 7)).min_c;
    rows.push_back(std::move(row));
  }
  std::ofstream summary(config.out_dir / "summary.tsv", std::ios::trunc);
  write_summary(summary, rows);
  if (!summary) throw JobError("cannot write summary.tsv");
  return rows;
}

void write_summary(std::ostream& out, const std::vector<PipelineRow>& rows) {
  out << "positions\tpattern\tcstar\tachieving_term\tmin_c\tcertificate\tcsv\n";
  for (const auto& r : rows) {
    char min_c[40];
    std::snprintf(min_c, sizeof min_c, "%.12g", r.min_c.get_d());
    out << r.first_position << "-" << r.last_position << "\t" << r.pattern
        << "\t" << r.cstar << "\t" << r.achieving << "\t" << min_c << "\t"
        << r.certificate_file << "\t" << r.csv_file << "\n";
  }
}

}  // namespace badpairs::jobs
