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

#include <benchmark/benchmark.h>

#include "badpairs/cfrac.hpp"
#include "badpairs/cusick.hpp"
#include "badpairs/field.hpp"

namespace {

using namespace badpairs;

void BM_FieldMultiply(benchmark::State& state) {
  const FieldElement u(Rational(3, 7), Rational(-11, 5), Rational(2, 9));
  FieldElement v = u;
  for (auto _ : state) {
    v = v * u;
    if (v.coefficient_bits() > 4096) v = u;
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_FieldMultiply);

void BM_Evaluate(benchmark::State& state) {
  const FieldElement u(Rational(3, 7), Rational(-11, 5), Rational(2, 9));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(u, Embedding::kRoot0, state.range(0)));
  }
}
BENCHMARK(BM_Evaluate)->Arg(256)->Arg(4096);

void BM_CStar(benchmark::State& state) {
  IntervalCFStream s(CubicRoot::theta());
  std::vector<Integer> q;
  for (int i = 0; i < 4000; ++i) q.push_back(s.next());
  const auto c = convergents(q);
  const auto k = static_cast<std::size_t>(state.range(0));
  const IntegralBasis b = build_basis(c[k], c[k + 1]);
  for (auto _ : state) benchmark::DoNotOptimize(cstar(b));
}
BENCHMARK(BM_CStar)->Arg(56)->Arg(3625)->Unit(benchmark::kMillisecond);

}  // namespace
