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

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "badpairs/cfrac.hpp"
#include "badpairs/quotient_file.hpp"
#include "oracle.hpp"

namespace badpairs {
namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  return {v.begin(), v.end()};
}

const std::vector<Integer>& theta_prefix() {
  static const std::vector<Integer> q = [] {
    IntervalCFStream s(CubicRoot::theta());
    std::vector<Integer> out;
    for (int i = 0; i < 4000; ++i) out.push_back(s.next());
    return out;
  }();
  return q;
}

void expect_same_as_oracle(const std::vector<Integer>& q, long min_n) {
  const auto got = find_patterns(q, Integer(min_n));
  const auto want = oracle::naive_patterns(q, min_n);
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_EQ(got[i].start_index, want[i].start);
    EXPECT_EQ(got[i].kind == PatternKind::kOneOne ? 11 : 2, want[i].kind);
    EXPECT_EQ(got[i].n1, want[i].n1);
    EXPECT_EQ(got[i].n2, want[i].n2);
  }
}

TEST(Patterns, OneOneExample) {
  const auto hits = find_patterns(ints({7, 60, 1, 1, 50, 3}), Integer(50));
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].start_index, 1u);
  EXPECT_EQ(hits[0].kind, PatternKind::kOneOne);
  EXPECT_EQ(hits[0].n1, 60);
  EXPECT_EQ(hits[0].n2, 50);
  EXPECT_EQ(hits[0].positions(), (std::vector<std::size_t>{2, 3, 4, 5}));
}

TEST(Patterns, TwoExample) {
  const auto hits = find_patterns(ints({5, 9, 2, 8, 1}), Integer(8));
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].kind, PatternKind::kTwo);
  EXPECT_EQ(hits[0].n1, 9);
  EXPECT_EQ(hits[0].n2, 8);
}

TEST(Patterns, OverlappingWindowsAllReported) {
  const auto hits = find_patterns(ints({9, 2, 8, 2, 9}), Integer(1));
  ASSERT_EQ(hits.size(), 2u);
  EXPECT_EQ(hits[0].start_index, 0u);
  EXPECT_EQ(hits[1].start_index, 2u);
}

TEST(Patterns, RejectsNonPositiveThreshold) {
  EXPECT_THROW(find_patterns(ints({1, 2, 3}), Integer(0)), std::invalid_argument);
}

TEST(Patterns, ThetaHits) {
  const auto hits = find_patterns(theta_prefix(), Integer(22));
  auto has = [&](long n1, long n2, std::size_t first_position) {
    for (const auto& h : hits) {
      if (h.n1 == n1 && h.n2 == n2 && h.kind == PatternKind::kOneOne &&
          h.positions().front() == first_position) {
        return true;
      }
    }
    return false;
  };
  EXPECT_TRUE(has(60, 50, 57));
  EXPECT_TRUE(has(22, 22, 2924));
  EXPECT_TRUE(has(272, 215, 3626));
}

TEST(Patterns, StreamMatchesSpan) {
  std::ostringstream out;
  write_quotients(out, theta_prefix());
  std::istringstream in(out.str());
  EXPECT_EQ(find_patterns(in, Integer(5)), find_patterns(theta_prefix(), Integer(5)));
}

TEST(Patterns, StreamReportsMalformedLine) {
  std::istringstream in("0\t1\n1\t4\n2\tbad\n");
  try {
    find_patterns(in, Integer(1));
    FAIL();
  } catch (const QuotientFileError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Patterns, MatchesBruteForceOnTheta) {
  for (long min_n : {1L, 2L, 5L, 22L}) expect_same_as_oracle(theta_prefix(), min_n);
}

TEST(Patterns, MatchesBruteForceOnRandomSequences) {
  std::mt19937_64 rng(3);
  std::discrete_distribution<int> pick({6, 4, 1, 1, 1});
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Integer> q;
    for (int i = 0; i < 500; ++i) {
      const int k = pick(rng);
      q.emplace_back(k < 3 ? k + 1 : 5 * k);
    }
    for (long min_n : {1L, 3L, 15L}) expect_same_as_oracle(q, min_n);
  }
}

TEST(Patterns, RaisingThresholdOnlyRemovesHits) {
  auto prev = find_patterns(theta_prefix(), Integer(1));
  for (long min_n : {2L, 4L, 10L, 30L, 100L}) {
    const auto cur = find_patterns(theta_prefix(), Integer(min_n));
    EXPECT_LE(cur.size(), prev.size());
    for (const auto& h : cur) {
      EXPECT_NE(std::find(prev.begin(), prev.end(), h), prev.end());
    }
    prev = cur;
  }
}

TEST(Patterns, PatternsAt) {
  const auto q = ints({3, 60, 1, 1, 50, 2, 7});
  ASSERT_EQ(patterns_at(q, 1).size(), 1u);
  EXPECT_EQ(patterns_at(q, 4).front().kind, PatternKind::kTwo);
  EXPECT_TRUE(patterns_at(q, 0).empty());
  EXPECT_TRUE(patterns_at(q, 5).empty());
}

TEST(RankHits, OrdersByMinimumThenPosition) {
  auto hit = [](std::size_t start, long n1, long n2) {
    return PatternHit{start, PatternKind::kOneOne, Integer(n1), Integer(n2)};
  };
  const auto ranked =
      rank_hits({hit(10, 60, 50), hit(20, 22, 30), hit(30, 272, 215), hit(5, 22, 22)});
  ASSERT_EQ(ranked.size(), 4u);
  EXPECT_EQ(ranked[0].start_index, 30u);
  EXPECT_EQ(ranked[1].start_index, 10u);
  EXPECT_EQ(ranked[2].start_index, 5u);
  EXPECT_EQ(ranked[3].start_index, 20u);
  EXPECT_TRUE(rank_hits({}).empty());
}

TEST(Patterns, JsonLine) {
  const PatternHit h{56, PatternKind::kOneOne, Integer(60), Integer(50)};
  EXPECT_EQ(to_json_line(h),
            R"({"start_index":56,"kind":"11","n1":"60","n2":"50"})");
}

}  // namespace
}  // namespace badpairs
