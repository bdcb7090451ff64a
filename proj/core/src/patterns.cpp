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

#include "badpairs/patterns.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <stdexcept>

#include "badpairs/quotient_file.hpp"

namespace badpairs {

std::size_t pattern_length(PatternKind kind) {
  return kind == PatternKind::kOneOne ? 4 : 3;
}

std::vector<std::size_t> PatternHit::positions() const {
  std::vector<std::size_t> out(pattern_length(kind));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = start_index + i + 1;
  return out;
}

namespace {

// Sliding window over the last four quotients; emits hits ending at the
// newest one. A [n1,1,1,n2] hit ending at i starts at i-3 and a [n1,2,n2] hit
// ending at i starts at i-2, so emitting in that order keeps start_index
// increasing.
class Scanner {
 public:
  Scanner(const Integer& min_n, std::vector<PatternHit>& out)
      : min_n_(min_n), out_(out) {}

  void push(const Integer& a) {
    window_[count_ % 4] = a;
    ++count_;
    if (count_ >= 4) {
      const Integer& n1 = at(3);
      if (at(2) == 1 && at(1) == 1 && n1 >= min_n_ && at(0) >= min_n_) {
        out_.push_back({count_ - 4, PatternKind::kOneOne, n1, at(0)});
      }
    }
    if (count_ >= 3) {
      const Integer& n1 = at(2);
      if (at(1) == 2 && n1 >= min_n_ && at(0) >= min_n_) {
        out_.push_back({count_ - 3, PatternKind::kTwo, n1, at(0)});
      }
    }
  }

 private:
  // back = 0 is the newest quotient.
  const Integer& at(std::size_t back) const {
    return window_[(count_ - 1 - back) % 4];
  }

  Integer min_n_;
  std::vector<PatternHit>& out_;
  std::array<Integer, 4> window_;
  std::size_t count_ = 0;
};

void check_min_n(const Integer& min_n) {
  if (min_n < 1) throw std::invalid_argument("min_n must be at least 1");
}

}  // namespace

std::vector<PatternHit> find_patterns(std::span<const Integer> quotients,
                                      const Integer& min_n) {
  check_min_n(min_n);
  std::vector<PatternHit> hits;
  Scanner scanner(min_n, hits);
  for (const Integer& a : quotients) scanner.push(a);
  return hits;
}

std::vector<PatternHit> find_patterns(std::istream& quotient_file,
                                      const Integer& min_n) {
  check_min_n(min_n);
  std::vector<PatternHit> hits;
  Scanner scanner(min_n, hits);
  QuotientReader reader(quotient_file);
  Integer a;
  while (reader.next(a)) scanner.push(a);
  return hits;
}

std::vector<PatternHit> patterns_at(std::span<const Integer> quotients,
                                    std::size_t index) {
  std::vector<PatternHit> out;
  const auto n = quotients.size();
  if (index + 3 < n && quotients[index + 1] == 1 &&
      quotients[index + 2] == 1 && quotients[index] >= 1 &&
      quotients[index + 3] >= 1) {
    out.push_back({index, PatternKind::kOneOne, quotients[index],
                   quotients[index + 3]});
  }
  if (index + 2 < n && quotients[index + 1] == 2 && quotients[index] >= 1 &&
      quotients[index + 2] >= 1) {
    out.push_back(
        {index, PatternKind::kTwo, quotients[index], quotients[index + 2]});
  }
  return out;
}

std::vector<PatternHit> rank_hits(std::vector<PatternHit> hits) {
  std::stable_sort(hits.begin(), hits.end(),
                   [](const PatternHit& a, const PatternHit& b) {
                     const int c = cmp(a.min_n(), b.min_n());
                     if (c != 0) return c > 0;
                     return a.start_index < b.start_index;
                   });
  return hits;
}

std::string to_json_line(const PatternHit& hit) {
  return "{\"start_index\":" + std::to_string(hit.start_index) +
         ",\"kind\":\"" + (hit.kind == PatternKind::kOneOne ? "11" : "2") +
         "\",\"n1\":\"" + hit.n1.get_str() + "\",\"n2\":\"" +
         hit.n2.get_str() + "\"}";
}

}  // namespace badpairs
