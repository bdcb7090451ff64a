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

// Scanning partial-quotient sequences for the windows [n1, 1, 1, n2] and
// [n1, 2, n2] with both n1 and n2 large.

#ifndef BADPAIRS_PATTERNS_HPP_
#define BADPAIRS_PATTERNS_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "badpairs/dyadic.hpp"

namespace badpairs {

enum class PatternKind { kOneOne, kTwo };

// Number of quotients the window covers: 4 for [n1,1,1,n2], 3 for [n1,2,n2].
std::size_t pattern_length(PatternKind kind);

struct PatternHit {
  std::size_t start_index = 0;  // 0-based index of n1
  PatternKind kind = PatternKind::kOneOne;
  Integer n1;
  Integer n2;

  Integer min_n() const { return n1 < n2 ? n1 : n2; }
  // 1-based positions of the window, the convention of published tables.
  std::vector<std::size_t> positions() const;

  friend bool operator==(const PatternHit& a, const PatternHit& b) {
    return a.start_index == b.start_index && a.kind == b.kind &&
           a.n1 == b.n1 && a.n2 == b.n2;
  }
};

// Every hit with min(n1, n2) >= min_n, both kinds, ordered by start_index.
// Overlapping windows are all reported.
std::vector<PatternHit> find_patterns(std::span<const Integer> quotients,
                                      const Integer& min_n);
// Single pass over a quotient file stream. Throws QuotientFileError.
std::vector<PatternHit> find_patterns(std::istream& quotient_file,
                                      const Integer& min_n);

// The hit of either kind starting at `index`, if the window there matches
// with any n1, n2 >= 1.
std::vector<PatternHit> patterns_at(std::span<const Integer> quotients,
                                    std::size_t index);

// Stable sort by decreasing min(n1, n2), then increasing start_index.
[[nodiscard]] std::vector<PatternHit> rank_hits(std::vector<PatternHit> hits);

// {"start_index":..,"kind":"11"|"2","n1":"..","n2":".."}
std::string to_json_line(const PatternHit& hit);

}  // namespace badpairs

#endif  // BADPAIRS_PATTERNS_HPP_
