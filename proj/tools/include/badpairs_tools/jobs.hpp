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

// Long-running jobs behind the badpairs command line. Each job is a plain
// function so tests can drive it without a process boundary.

#ifndef BADPAIRS_TOOLS_JOBS_HPP_
#define BADPAIRS_TOOLS_JOBS_HPP_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "badpairs/approx.hpp"
#include "badpairs/cusick.hpp"
#include "badpairs/patterns.hpp"
#include "json.hpp"

namespace badpairs::jobs {

namespace fs = std::filesystem;

// Bad user input or unreadable/unwritable files. Maps to exit code 1.
class JobError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes a line to `err` at most once per interval.
class ProgressReporter {
 public:
  explicit ProgressReporter(std::ostream* err,
                            std::chrono::milliseconds interval =
                                std::chrono::seconds(10));
  void tick(const std::function<std::string()>& message);

 private:
  std::ostream* err_;
  std::chrono::milliseconds interval_;
  std::chrono::steady_clock::time_point last_;
};

// ---- cf -------------------------------------------------------------------

struct CfOptions {
  std::size_t checkpoint_every = 10000;
  // Overrides BADPAIRS_CHECKPOINT_DIR and the default (next to the output).
  std::optional<fs::path> checkpoint_dir;
  // Testing hook: return as if killed once this many terms are on disk.
  std::optional<std::size_t> stop_after;
  ProgressReporter* progress = nullptr;
};

struct CfResult {
  std::size_t terms = 0;
  std::size_t resumed_from = 0;  // terms found on disk at start
  bool complete = false;
};

// "<out>.ckpt", placed in checkpoint_dir or BADPAIRS_CHECKPOINT_DIR if set.
fs::path checkpoint_path(const fs::path& out, const CfOptions& options = {});

// Writes the first n_terms partial quotients of theta to `out`, one
// "index<TAB>quotient" line each. An existing file is resumed: partial
// trailing lines are dropped and the last three terms are re-derived and
// compared before appending.
CfResult run_cf(std::size_t n_terms, const fs::path& out,
                const CfOptions& options = {});

// ---- scan / cstar ---------------------------------------------------------

std::vector<Integer> load_quotients(const fs::path& path);

// Ranked hits with both large quotients >= min_n.
std::vector<PatternHit> run_scan(const fs::path& quotients,
                                 const Integer& min_n);

nlohmann::ordered_json certificate_json(const PatternHit& hit,
                                        const TruncationChoice& choice,
                                        int digits);

struct CStarResult {
  PatternHit hit;
  TruncationChoice choice;
  nlohmann::ordered_json json;
};

// The hit starting at 0-based quotient index `hit_index`.
CStarResult run_cstar(std::span<const Integer> quotients,
                      std::size_t hit_index, int digits);

// ---- verify / figure-data -------------------------------------------------

enum class ScanMethod { kBrute, kLattice };

// Reads a decimal number from a text file (surrounding whitespace allowed).
FixedPointReal read_decimal_file(const fs::path& path);

std::vector<BestApproxRecord> run_verify(const FixedPointReal& alpha,
                                         const FixedPointReal& beta,
                                         const Integer& q_max,
                                         ScanMethod method,
                                         ProgressReporter* progress = nullptr);

// Decimal digits of alpha, beta needed for denominators up to q_max.
long required_scale(const Integer& q_max);

struct KnownCase {
  char label;
  std::size_t start_index;  // 0-based index of n1
  PatternKind kind;
  const char* pattern;
};

const std::vector<KnownCase>& known_cases();
const KnownCase& known_case(char label);

struct FigureData {
  CStarResult cstar;
  FixedPointReal alpha;
  FixedPointReal beta;
  std::vector<BestApproxRecord> records;
};

// Expands theta, certifies the case and scans its pair up to q_max.
FigureData run_figure_data(char label, const Integer& q_max, ScanMethod method,
                           ProgressReporter* progress = nullptr);

void write_csv_file(const fs::path& path,
                    const std::vector<BestApproxRecord>& records);

nlohmann::ordered_json transient_json(const TransientReport& report);

// ---- pipeline -------------------------------------------------------------

struct PipelineConfig {
  std::size_t terms = 4000;
  Integer min_n = 20;
  int digits = kDefaultDigits;
  Integer q_max = 1000000;
  ScanMethod method = ScanMethod::kBrute;
  fs::path out_dir;
  ProgressReporter* progress = nullptr;
};

struct PipelineRow {
  std::size_t first_position = 0;  // 1-based
  std::size_t last_position = 0;
  std::string pattern;
  std::string cstar;
  std::string achieving;
  std::string certificate_file;
  std::string csv_file;
  Rational min_c;
};

// Writes quotients.tsv, one cert-<pos>.json and approx-<pos>.csv per hit and
// summary.tsv into out_dir.
std::vector<PipelineRow> run_pipeline(const PipelineConfig& config);

void write_summary(std::ostream& out, const std::vector<PipelineRow>& rows);

}  // namespace badpairs::jobs

#endif  // BADPAIRS_TOOLS_JOBS_HPP_
