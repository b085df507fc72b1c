// Copyright 2026 The bfcurve Authors.
//
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

// Micro-benchmarks for the hot paths: field multiplication, the Walsh
// transform, the alpha-sweep and differential uniformity.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "bfcurve/apn.h"
#include "bfcurve/boolfn.h"
#include "bfcurve/gf2m.h"
#include "bfcurve/xalpha.h"

namespace bfcurve {
namespace {

void BM_FieldMul(benchmark::State& state) {
  const Field f(static_cast<int>(state.range(0)));
  const uint64_t mask = f.q() - 1;
  FieldElement acc{1};
  uint64_t x = 0x9e3779b97f4a7c15ULL;
  for (auto _ : state) {
    x = x * 6364136223846793005ULL + 1442695040888963407ULL;
    acc = f.mul(acc, FieldElement{(x >> 20) & mask | 1});
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(13)->Arg(20)->Arg(31);

void BM_WalshTransform(benchmark::State& state) {
  const Field f(static_cast<int>(state.range(0)));
  const FamilyPolynomial g(f, FieldElement{3}, {{1, FieldElement{5}}});
  const auto tt = from_trace_poly(f, g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(walsh_transform(f, tt));
  }
}
BENCHMARK(BM_WalshTransform)->DenseRange(9, 17, 2)->Unit(benchmark::kMicrosecond);

void BM_Survey(benchmark::State& state) {
  const Field f(static_cast<int>(state.range(0)));
  const FamilyPolynomial g(f, FieldElement{3}, {{1, FieldElement{5}}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(survey(f, g, SurveyOptions{1, false}));
  }
}
BENCHMARK(BM_Survey)->Arg(7)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_DifferentialUniformity(benchmark::State& state) {
  const Field f(static_cast<int>(state.range(0)));
  const auto g = FamilyPolynomial(f, FieldElement{3}, {}).to_sparse();
  for (auto _ : state) {
    benchmark::DoNotOptimize(differential_uniformity(f, g, 1));
  }
}
BENCHMARK(BM_DifferentialUniformity)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace bfcurve

BENCHMARK_MAIN();
