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

#include "badpairs/approx.hpp"

namespace {

using namespace badpairs;

const char* kAlpha =
    "0.4563286858107963651609830446124431560745665647128596153008802";
const char* kBeta =
    "0.4781573193903170892895817415258772866671562381178937772663665";

void BM_BruteScan(benchmark::State& state) {
  const auto a = FixedPointReal::parse(kAlpha);
  const auto b = FixedPointReal::parse(kBeta);
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_approx_scan(a, b, Integer(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BruteScan)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_LatticeScan(benchmark::State& state) {
  const auto a = FixedPointReal::parse(kAlpha);
  const auto b = FixedPointReal::parse(kBeta);
  const Integer q_max = pow10(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(best_approx_lattice(a, b, q_max));
}
BENCHMARK(BM_LatticeScan)->Arg(6)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
