//
// Copyright 2026 The lipfilter Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <random>

#include <benchmark/benchmark.h>

#include "lipfilter/bench.hpp"
#include "lipfilter/filter_l0.hpp"
#include "lipfilter/filter_l1.hpp"
#include "lipfilter/hard_instances.hpp"
#include "lipfilter/privacy.hpp"
#include "lipfilter/tester.hpp"

namespace lipfilter {
namespace {

HardInstance Instance(int d, int r) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(d) * 131 + r);
  return SampleHardInstance(d, r, 1, 8, rng, false);
}

// One fresh l0 session per query at an anchor, the expensive case.
void BM_L0AnchorQuery(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const HardInstance inst = Instance(d, 2);
  const OraclePtr f = inst.Oracle();
  const std::vector<Vertex> support = inst.Support();
  std::uint64_t i = 0;
  for (auto _ : state) {
    LocalFilterL0 filter(f, Seed::FromInteger(i));
    benchmark::DoNotOptimize(filter.Query(support[i % support.size()]));
    ++i;
  }
  state.counters["lookups/query"] = benchmark::Counter(
      static_cast<double>(f->lookups()) / static_cast<double>(i));
}
BENCHMARK(BM_L0AnchorQuery)->DenseRange(8, 20, 4);

void BM_L1AnchorQuery(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  const HardInstance inst = Instance(d, r);
  const OraclePtr f = inst.Oracle();
  const std::vector<Vertex> support = inst.Support();
  std::uint64_t i = 0;
  for (auto _ : state) {
    LocalFilterL1 filter(f, Rational(1, 100), Seed::FromInteger(i));
    benchmark::DoNotOptimize(filter.Query(support[i % support.size()]));
    ++i;
  }
  state.counters["lookups/query"] = benchmark::Counter(
      static_cast<double>(f->lookups()) / static_cast<double>(i));
}
BENCHMARK(BM_L1AnchorQuery)->Args({8, 2})->Args({12, 2})->Args({8, 4})
    ->Unit(benchmark::kMillisecond);

void BM_LookupSweep(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        MeasureHardInstanceLookups(FilterKind::kL0, d, 2, 100, Seed::FromInteger(7)));
  }
}
BENCHMARK(BM_LookupSweep)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_BinarySearchMechanism(benchmark::State& state) {
  const HardInstance inst = Instance(16, 4);
  const OraclePtr f = inst.Oracle();
  LaplaceNoise noise(1);
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(BinarySearchMechanism(
        f, Vertex{i * 2654435761u & 0xFFFF}, std::nullopt, 1.0, 0.001,
        Seed::FromInteger(i), noise));
    ++i;
  }
}
BENCHMARK(BM_BinarySearchMechanism);

void BM_TesterRun(benchmark::State& state) {
  const HardInstance inst = Instance(32, 2);
  const OraclePtr f = inst.Oracle();
  TesterParams params;
  params.samples = static_cast<std::uint64_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(TolerantTestOnce(f, params, rng, Seed::FromInteger(i++)));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          state.range(0));
}
BENCHMARK(BM_TesterRun)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace lipfilter

BENCHMARK_MAIN();
