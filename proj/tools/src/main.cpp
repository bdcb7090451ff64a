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

#include <iostream>
#include <regex>
#include <string>

#include "CLI11.hpp"
#include "badpairs/quotient_file.hpp"
#include "badpairs_tools/jobs.hpp"

namespace {

using badpairs::Integer;
using badpairs::Rational;
namespace jobs = badpairs::jobs;

// Accepts "1000000", "1e6" and "10^6".
Integer parse_count(const std::string& text, const std::string& flag) {
  static const std::regex plain(R"(\d+)");
  static const std::regex power(R"((\d+)(?:e|E|\*10\^)(\d+)|10\^(\d+))");
  std::smatch m;
  if (std::regex_match(text, plain)) return Integer(text, 10);
  if (std::regex_match(text, m, power)) {
    if (m[3].matched) return badpairs::pow10(std::stoul(m[3]));
    return Integer(m[1].str(), 10) * badpairs::pow10(std::stoul(m[2]));
  }
  throw jobs::JobError(flag + ": expected a positive integer, got '" + text +
                       "'");
}

Rational parse_rational(const std::string& text, const std::string& flag) {
  Rational r;
  if (text.find('.') != std::string::npos) {
    return badpairs::FixedPointReal::parse(text, true).value();
  }
  if (r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw jobs::JobError(flag + ": expected a rational such as 2/7, got '" +
                         text + "'");
  }
  r.canonicalize();
  return r;
}

jobs::ScanMethod parse_method(const std::string& name, const Integer& q_max) {
  if (name == "brute") return jobs::ScanMethod::kBrute;
  if (name == "lattice") return jobs::ScanMethod::kLattice;
  // auto: exhaustive up to 10^7, lattice beyond.
  return q_max <= 10000000 ? jobs::ScanMethod::kBrute
                           : jobs::ScanMethod::kLattice;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, certify and verify badly approximable pairs in "
               "Q(2cos(2pi/7))"};
  app.require_subcommand(1);
  jobs::ProgressReporter progress(&std::cerr);

  std::size_t cf_terms = 0;
  std::string cf_out;
  auto* cf = app.add_subcommand("cf", "Expand theta into partial quotients");
  cf->add_option("--terms", cf_terms, "Number of partial quotients")->required();
  cf->add_option("--out", cf_out, "Quotient file (resumed if present)")->required();

  std::string scan_quotients, scan_min_n = "20";
  auto* scan = app.add_subcommand("scan", "List [n1,1,1,n2] and [n1,2,n2] windows");
  scan->add_option("--quotients", scan_quotients, "Quotient file")->required();
  scan->add_option("--min-n", scan_min_n, "Lower bound for n1 and n2")->capture_default_str();

  std::string cs_quotients;
  std::size_t cs_hit = 0;
  int cs_digits = badpairs::kDefaultDigits;
  auto* cstar = app.add_subcommand("cstar", "Certify c* for one window");
  cstar->add_option("--quotients", cs_quotients, "Quotient file")->required();
  cstar->add_option("--hit", cs_hit, "0-based index of n1 (start_index from scan)")
      ->required();
  cstar->add_option("--digits", cs_digits, "Decimal digits")->capture_default_str();

  std::string v_alpha, v_beta, v_qmax = "1000000", v_out, v_method = "brute",
              v_threshold = "2/7";
  auto* verify = app.add_subcommand("verify", "Best simultaneous approximations");
  verify->add_option("--alpha-file", v_alpha, "File holding alpha")->required();
  verify->add_option("--beta-file", v_beta, "File holding beta")->required();
  verify->add_option("--qmax", v_qmax, "Largest denominator")->capture_default_str();
  verify->add_option("--out", v_out, "CSV output")->required();
  verify->add_option("--method", v_method, "brute, lattice or auto")->capture_default_str()
      ->check(CLI::IsMember({"brute", "lattice", "auto"}));
  verify->add_option("--threshold", v_threshold, "Transient threshold")->capture_default_str();

  std::string f_case, f_qmax = "1000000", f_out, f_method = "auto";
  auto* figure = app.add_subcommand("figure-data", "c at best approximants for a known case");
  figure->add_option("--case", f_case, "A, B, C or D")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C", "D"}));
  figure->add_option("--qmax", f_qmax, "Largest denominator")->capture_default_str();
  figure->add_option("--out", f_out, "CSV output")->required();
  figure->add_option("--method", f_method, "brute, lattice or auto")->capture_default_str()
      ->check(CLI::IsMember({"brute", "lattice", "auto"}));

  std::size_t p_terms = 4000;
  std::string p_min_n = "20", p_qmax = "1000000", p_out, p_method = "auto";
  int p_digits = badpairs::kDefaultDigits;
  auto* pipeline = app.add_subcommand("pipeline", "cf, scan, cstar and verify in one run");
  pipeline->add_option("--terms", p_terms, "Number of partial quotients")->capture_default_str();
  pipeline->add_option("--min-n", p_min_n, "Lower bound for n1 and n2")->capture_default_str();
  pipeline->add_option("--digits", p_digits, "Decimal digits")->capture_default_str();
  pipeline->add_option("--qmax", p_qmax, "Largest denominator")->capture_default_str();
  pipeline->add_option("--out-dir", p_out, "Output directory")->required();
  pipeline->add_option("--method", p_method, "brute, lattice or auto")->capture_default_str()
      ->check(CLI::IsMember({"brute", "lattice", "auto"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*cf) {
      jobs::CfOptions options;
      options.progress = &progress;
      jobs::run_cf(cf_terms, cf_out, options);
    } else if (*scan) {
      for (const auto& hit :
           jobs::run_scan(scan_quotients, parse_count(scan_min_n, "--min-n"))) {
        std::cout << badpairs::to_json_line(hit) << "\n";
      }
    } else if (*cstar) {
      const auto quotients = jobs::load_quotients(cs_quotients);
      std::cout << jobs::run_cstar(quotients, cs_hit, cs_digits).json.dump(2)
                << "\n";
    } else if (*verify) {
      const Integer q_max = parse_count(v_qmax, "--qmax");
      const auto records = jobs::run_verify(
          jobs::read_decimal_file(v_alpha), jobs::read_decimal_file(v_beta),
          q_max, parse_method(v_method, q_max), &progress);
      jobs::write_csv_file(v_out, records);
      std::cout << jobs::transient_json(badpairs::transient_report(
                       records, parse_rational(v_threshold, "--threshold")))
                       .dump()
                << "\n";
    } else if (*figure) {
      const Integer q_max = parse_count(f_qmax, "--qmax");
      const auto data = jobs::run_figure_data(
          f_case[0], q_max, parse_method(f_method, q_max), &progress);
      jobs::write_csv_file(f_out, data.records);
      auto summary = jobs::transient_json(
          badpairs::transient_report(data.records, Rational(2, 7)));
      summary["case"] = f_case;
      summary["cstar"] = data.cstar.choice.certificate.cstar;
      std::cout << summary.dump() << "\n";
    } else if (*pipeline) {
      jobs::PipelineConfig config;
      config.terms = p_terms;
      config.min_n = parse_count(p_min_n, "--min-n");
      config.digits = p_digits;
      config.q_max = parse_count(p_qmax, "--qmax");
      config.method = parse_method(p_method, config.q_max);
      config.out_dir = p_out;
      config.progress = &progress;
      jobs::write_summary(std::cout, jobs::run_pipeline(config));
    }
  } catch (const badpairs::InvariantViolation& e) {
    std::cerr << "badpairs: invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "badpairs: error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "badpairs: internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "badpairs: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
