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

#include "sss/tail_threshold.hpp"

namespace {

using namespace sss;

void bench_tail_sample(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(tail_sample(state.range(0), ++seed));
}

void bench_tail_posterior(benchmark::State& state) {
    const std::map<std::int64_t, std::int64_t> observed{{3, 3}, {5, 2}, {8, 1}};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            conditional_secret_distribution(observed, state.range(0)));
}

}  // namespace

BENCHMARK(bench_tail_sample)->Arg(16)->Arg(64);
BENCHMARK(bench_tail_posterior)->Arg(8)->Arg(16)->Arg(32);
