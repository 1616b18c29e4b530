// Copyright 2026 The Authors.
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
#include <benchmark/benchmark.h>

#include "stanley/catalog.hpp"
#include "stanley/enumerate.hpp"
#include "stanley/hvector.hpp"
#include "stanley/multicomplex.hpp"
#include "stanley/search.hpp"
#include "stanley/witnesses.hpp"

namespace stanley {
namespace {

void BM_OSequenceOf(benchmark::State& state) {
  SearchRng rng(1);
  const GeneratorSet gens = SampleGenerators(5, static_cast<int>(state.range(0)), 30, rng);
  for (auto _ : state) benchmark::DoNotOptimize(OSequenceOf(gens));
}
BENCHMARK(BM_OSequenceOf)->Arg(4)->Arg(6)->Arg(8);

void BM_Closure(benchmark::State& state) {
  SearchRng rng(1);
  const GeneratorSet gens = SampleGenerators(5, static_cast<int>(state.range(0)), 30, rng);
  for (auto _ : state) benchmark::DoNotOptimize(Closure(gens));
}
BENCHMARK(BM_Closure)->Arg(4)->Arg(6)->Arg(8);

void BM_Mutate(benchmark::State& state) {
  SearchRng rng(1);
  GeneratorSet gens = SampleGenerators(5, 4, 35, rng);
  for (auto _ : state) {
    gens = Mutate(gens, rng);
    benchmark::DoNotOptimize(gens);
  }
}
BENCHMARK(BM_Mutate);

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    ForEachMatroid(n, std::nullopt, [&](const Matroid&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_HVectorOf(benchmark::State& state) {
  const Matroid m = Uniform(4, 9);
  for (auto _ : state) benchmark::DoNotOptimize(HVectorOf(m));
}
BENCHMARK(BM_HVectorOf);

void BM_InternalPassivity(benchmark::State& state) {
  const Matroid m = Uniform(4, 9);
  const GroundOrdering order = GroundOrdering::Natural(9);
  for (auto _ : state) benchmark::DoNotOptimize(HViaInternalPassivity(m, order));
}
BENCHMARK(BM_InternalPassivity);

void BM_RankThreeWitnessFano(benchmark::State& state) {
  const Matroid fano = Fano();
  for (auto _ : state) benchmark::DoNotOptimize(RankThreeWitnessOf(fano));
}
BENCHMARK(BM_RankThreeWitnessFano);

void BM_Anneal(benchmark::State& state) {
  const HVector target = HVector::Parse("1,5,15,27,35");
  for (auto _ : state) benchmark::DoNotOptimize(Anneal(target, SearchParams{}));
}
BENCHMARK(BM_Anneal)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace stanley

BENCHMARK_MAIN();
