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

#include "sss/classifier.hpp"
#include "sss/linear_scheme.hpp"

namespace {

using namespace sss;

void bench_joint_distribution(benchmark::State& state) {
    const SpanProgram program =
        from_generators({{1, 2}, {1, 3}, {2, 3}}, state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(joint_distribution(program, {1, 2, 3}));
}

void bench_joint_distribution_workers(benchmark::State& state) {
    const SpanProgram program = from_generators({{1, 2}, {1, 3}, {2, 3}}, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            joint_distribution(program, {1, 2, 3}, 10'000'000, static_cast<int>(state.range(0))));
}

void bench_classify(benchmark::State& state) {
    const SpanProgram program = from_generators({{1, 2}, {1, 3}, {2, 3}}, 3);
    const auto table = joint_distribution(program, {1, 2, 3});
    const auto structure = MonotoneStructure::from_generators({{1, 2}, {1, 3}, {2, 3}});
    for (auto _ : state) benchmark::DoNotOptimize(classify(table, structure));
}

}  // namespace

BENCHMARK(bench_joint_distribution)->Arg(2)->Arg(3)->Arg(5);
BENCHMARK(bench_joint_distribution_workers)->Arg(1)->Arg(2)->Arg(4);
BENCHMARK(bench_classify);
