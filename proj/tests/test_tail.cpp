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
#include <map>
#include <vector>

#include "sss/errors.hpp"
#include "sss/rational.hpp"
#include "sss/tail_threshold.hpp"

using namespace sss;

namespace {

// Brute-force (s, t) lattice oracle: explicit double loop with per-pair
// likelihood, truncated at t <= t_max and s <= s_max. Exact rationals; the
// omitted mass is certified by delta_w (per-secret) and delta_z (total).
struct LatticeOracle {
    std::vector<Rat> weight;  // weight[s-1], s = 1..s_max
    Rat total = 0;
    Rat delta_w;  // bound on per-secret truncation
    Rat delta_z;  // bound on total truncation
};

LatticeOracle lattice_oracle(const std::map<std::int64_t, std::int64_t>& observed,
                             std::int64_t s_max, std::int64_t t_max) {
    LatticeOracle oracle;
    for (std::int64_t s = 1; s <= s_max; ++s) {
        Rat w = 0;
        for (std::int64_t t = s + 1; t <= t_max; ++t) {
            Rat like = Rat(BigInt(1), BigInt(1) << t);
            for (const auto& [idx, value] : observed) {
                if (idx <= t) {
                    if (value < 1 || value > idx) {
                        like = 0;
                        break;
                    }
                    like /= idx;
                } else if (value != s) {
                    like = 0;
                    break;
                }
            }
            w += like;
        }
        oracle.weight.push_back(w);
        oracle.total += w;
    }
    oracle.delta_w = Rat(BigInt(1), BigInt(1) << t_max);
    oracle.delta_z = oracle.delta_w * s_max + Rat(BigInt(1), BigInt(1) << s_max);
    return oracle;
}

}  // namespace

TEST_CASE("tail_sample constraints and determinism") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const TailDealing dealing = tail_sample(12, seed);
        CHECK(dealing.secret >= 1);
        CHECK(dealing.threshold >= dealing.secret + 1);
        CHECK(dealing.shares[0] == 1);  // uniform on {1..1}
        CHECK(dealing.shares[1] >= 1);
        CHECK(dealing.shares[1] <= 2);
        for (std::int64_t i = 1; i <= 12; ++i) {
            const std::int64_t share = dealing.shares[static_cast<size_t>(i - 1)];
            if (i <= dealing.threshold) {
                CHECK(share >= 1);
                CHECK(share <= i);
            } else {
                CHECK(share == dealing.secret);
            }
        }
    }
    const TailDealing a = tail_sample(8, 1234);
    const TailDealing b = tail_sample(8, 1234);
    CHECK(a.secret == b.secret);
    CHECK(a.threshold == b.threshold);
    CHECK(a.shares == b.shares);
}

TEST_CASE("posterior of an uninformative observation is the prior") {
    // share_1 is constantly 1: carries no information
    const TailPosterior posterior = conditional_secret_distribution({{1, 1}}, 8);
    for (std::int64_t s = 1; s <= 8; ++s)
        CHECK(posterior.probability[static_cast<size_t>(s - 1)] ==
              Rat(BigInt(1), BigInt(1) << s));
    CHECK(posterior.tail_probability == Rat(BigInt(1), BigInt(1) << 8));
}

TEST_CASE("posterior of the {3 -> 3} observation") {
    const TailPosterior posterior = conditional_secret_distribution({{3, 3}}, 6);
    CHECK(posterior.probability[0] == Rat(1, 3));
    CHECK(posterior.probability[1] == Rat(1, 3));
    CHECK(posterior.probability[2] == Rat(1, 6));   // constant branch impossible: t >= 4
    CHECK(posterior.probability[3] == Rat(1, 12));  // 4 * 2^-s / 3 from here on
    CHECK(posterior.probability[4] == Rat(1, 24));
    CHECK(posterior.probability[5] == Rat(1, 48));
    CHECK(posterior.tail_probability == Rat(1, 48));
    CHECK(posterior.omitted_bound == Rat(1, 64));
}

TEST_CASE("posterior matches the truncated lattice oracle within its certificate") {
    const std::vector<std::map<std::int64_t, std::int64_t>> observations = {
        {{3, 3}}, {{1, 1}}, {{2, 2}, {3, 1}}, {{2, 1}, {5, 4}}, {{4, 2}, {6, 2}, {7, 2}}};
    for (const auto& observed : observations) {
        const std::int64_t cap = 6;
        const TailPosterior posterior = conditional_secret_distribution(observed, cap);
        const LatticeOracle oracle = lattice_oracle(observed, cap + 40, 70);
        REQUIRE(oracle.total > 0);
        for (std::int64_t s = 1; s <= cap; ++s) {
            const Rat mine = posterior.probability[static_cast<size_t>(s - 1)];
            const Rat theirs = oracle.weight[static_cast<size_t>(s - 1)] / oracle.total;
            // |a/b - c/d| <= (dw*d + c_num*dz)/d^2 with b >= d (exact bound)
            const Rat bound = (oracle.delta_w * oracle.total +
                               oracle.weight[static_cast<size_t>(s - 1)] * oracle.delta_z) /
                              (oracle.total * oracle.total);
            const Rat diff = mine >= theirs ? mine - theirs : theirs - mine;
            CHECK(diff <= bound);
        }
    }
}

TEST_CASE("every consistent secret keeps positive posterior mass") {
    const std::vector<std::map<std::int64_t, std::int64_t>> observations = {
        {{2, 2}, {3, 1}}, {{3, 3}}, {{1, 1}, {4, 4}}, {{5, 2}, {6, 2}}};
    for (const auto& observed : observations) {
        const TailPosterior posterior = conditional_secret_distribution(observed, 9);
        for (const Rat& p : posterior.probability) CHECK(p > 0);
        CHECK(posterior.tail_probability > 0);
    }
}

TEST_CASE("impossible observations are rejected") {
    // share value above its index can never occur
    CHECK_THROWS_AS(conditional_secret_distribution({{2, 5}}, 8), Error);
    CHECK_THROWS_AS(conditional_secret_distribution({{3, 7}}, 8), Error);
    CHECK_THROWS_AS(conditional_secret_distribution({{2, 0}}, 8), Error);
    CHECK_THROWS_AS(conditional_secret_distribution({{0, 1}}, 8), Error);
    // cap below an observed value
    CHECK_THROWS_AS(conditional_secret_distribution({{5, 4}}, 3), Error);
}

TEST_CASE("monte carlo frequencies match the exact posterior") {
    const std::map<std::int64_t, std::int64_t> observed{{3, 3}};
    const std::int64_t cap = 5;
    const TailPosterior posterior = conditional_secret_distribution(observed, cap);

    const std::int64_t total = 200000;
    std::int64_t accepted = 0;
    std::vector<std::int64_t> bins(static_cast<size_t>(cap) + 1, 0);
    for (std::int64_t i = 0; i < total; ++i) {
        const TailDealing dealing = tail_sample(3, 900000 + static_cast<std::uint64_t>(i));
        bool match = true;
        for (const auto& [idx, value] : observed)
            if (dealing.shares[static_cast<size_t>(idx - 1)] != value) match = false;
        if (!match) continue;
        ++accepted;
        const size_t bin = dealing.secret <= cap ? static_cast<size_t>(dealing.secret - 1)
                                                 : static_cast<size_t>(cap);
        ++bins[bin];
    }
    REQUIRE(accepted > 10000);
    for (std::int64_t s = 1; s <= cap + 1; ++s) {
        const double expected =
            s <= cap ? to_double(posterior.probability[static_cast<size_t>(s - 1)])
                     : to_double(posterior.tail_probability);
        const double freq =
            static_cast<double>(bins[static_cast<size_t>(s - 1)]) / static_cast<double>(accepted);
        const double se = std::sqrt(expected * (1 - expected) / static_cast<double>(accepted));
        CHECK(std::fabs(freq - expected) <= 5 * se + 1e-12);
    }
}

TEST_CASE("eventual value recovery") {
    CHECK(eventual_value_recover({1, 1, 3, 2, 2, 2, 2, 2}, 4) == 2);
    CHECK_FALSE(eventual_value_recover({1, 2, 1}, 3).has_value());
    CHECK_FALSE(eventual_value_recover({1, 1}, 3).has_value());
    CHECK_THROWS_AS(eventual_value_recover({1}, 0), Error);
}

TEST_CASE("recovery consistency on sampled dealings") {
    for (std::uint64_t seed = 100; seed < 200; ++seed) {
        const std::int64_t prefix = 24;
        const TailDealing dealing = tail_sample(prefix, seed);
        if (dealing.threshold >= prefix) continue;  // no tail visible yet
        const std::int64_t run = prefix - dealing.threshold;
        CHECK(eventual_value_recover(dealing.shares, run) == dealing.secret);
    }
}
