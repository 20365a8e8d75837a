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

#include "sss/span_program.hpp"

namespace {

using namespace sss;

// 2-of-n threshold family
Family threshold_family(int n) {
    Family family;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) family.push_back({i, j});
    return family;
}

void bench_from_generators(benchmark::State& state) {
    const Family family = threshold_family(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(from_generators(family, 5));
}

void bench_realized_structure(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SpanProgram program = from_generators(threshold_family(n), 5);
    PidSet universe;
    for (int i = 1; i <= n; ++i) universe.push_back(i);
    for (auto _ : state)
        benchmark::DoNotOptimize(realized_structure(program, universe));
}

void bench_realizes(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SpanProgram program = from_generators(threshold_family(n), 5);
    PidSet half;
    for (int i = 1; i <= n / 2; ++i) half.push_back(i);
    for (auto _ : state) benchmark::DoNotOptimize(realizes(program, half));
}

}  // namespace

BENCHMARK(bench_from_generators)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(bench_realized_structure)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(bench_realizes)->Arg(6)->Arg(10);
