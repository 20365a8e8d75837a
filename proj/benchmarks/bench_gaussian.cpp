// Copyright 2026 the sss authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "sss/hilbert.hpp"
#include "sss/wrapped_normal.hpp"

namespace {

using namespace sss;

void bench_hilbert_build(benchmark::State& state) {
    const GDeltaWitness witness =
        builtin_all_infinite(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(hilbert_from_witness(witness, 3));
}

void bench_decompose(benchmark::State& state) {
    const GDeltaWitness witness = builtin_all_infinite(5, 3);
    const HilbertProgram program = hilbert_from_witness(witness, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(orthogonal_decompose(program, {1, 2}));
}

void bench_simulate(benchmark::State& state) {
    const GDeltaWitness witness = normalize_witness({{{1, 2}}, {{1, 2}}});
    const HilbertProgram program = hilbert_from_witness(witness, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate(program, state.range(0), 1, true));
}

void bench_wrapped_bound(benchmark::State& state) {
    const double sigma = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(wrapped_density_ratio_bound(sigma));
}

}  // namespace

BENCHMARK(bench_hilbert_build)->Arg(4)->Arg(6);
BENCHMARK(bench_decompose);
BENCHMARK(bench_simulate)->Arg(1000)->Arg(10000);
BENCHMARK(bench_wrapped_bound)->Arg(10)->Arg(50)->Arg(150);
