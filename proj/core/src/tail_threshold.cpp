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

#include "sss/tail_threshold.hpp"

#include <algorithm>

#include "sss/errors.hpp"
#include "sss/rng.hpp"

namespace sss {

TailDealing tail_sample(std::int64_t prefix_length, std::uint64_t seed) {
    if (prefix_length < 1) throw Error("tail_sample: prefix length must be positive");
    RandomStream stream(seed);
    TailDealing dealing;
    dealing.secret = stream.geometric_half();
    dealing.threshold = dealing.secret + stream.geometric_half();
    dealing.shares.reserve(static_cast<size_t>(prefix_length));
    for (std::int64_t i = 1; i <= prefix_length; ++i)
        dealing.shares.push_back(i <= dealing.threshold ? stream.uniform_range(1, i)
                                                        : dealing.secret);
    return dealing;
}

namespace {

Rat two_pow_neg(std::int64_t e) { return Rat(BigInt(1), BigInt(1) << e); }

// Unnormalized posterior weight of a single secret value:
//   w(s) = sum_{t > s} 2^-t * prod_i P(share_i = v_i | s, t)
// Indices i <= t contribute 1/i when v_i is in {1..i} (0 otherwise); indices
// i > t contribute [v_i == s]. For t >= max(I_max, s+1) the likelihood is the
// constant prod 1/i, so that part of the sum is a closed-form geometric tail;
// only t in [s+1, I_max-1] needs explicit terms.
Rat weight_of_secret(const std::map<std::int64_t, std::int64_t>& observed, std::int64_t s) {
    std::int64_t max_index = 0;
    for (const auto& [idx, value] : observed) max_index = std::max(max_index, idx);

    Rat uniform_likelihood = 1;
    bool uniform_possible = true;
    for (const auto& [idx, value] : observed) {
        if (value >= 1 && value <= idx)
            uniform_likelihood /= idx;
        else
            uniform_possible = false;
    }

    Rat w = 0;
    for (std::int64_t t = s + 1; t < max_index; ++t) {
        Rat like = 1;
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
        if (like != 0) w += two_pow_neg(t) * like;
    }
    if (uniform_possible) {
        const std::int64_t t0 = std::max(max_index, s + 1);
        w += uniform_likelihood * two_pow_neg(t0 - 1);  // sum_{t >= t0} 2^-t
    }
    return w;
}

}  // namespace

TailPosterior conditional_secret_distribution(
    const std::map<std::int64_t, std::int64_t>& observed, std::int64_t cap) {
    if (cap < 1) throw Error("posterior: secret cap must be positive");
    if (cap > 4096) throw Error("posterior: cap above 4096 is not supported");
    std::int64_t max_index = 0, max_value = 0;
    for (const auto& [idx, value] : observed) {
        if (idx < 1) throw Error("posterior: share indices start at 1");
        if (idx > 4096) throw Error("posterior: share indices above 4096 are not supported");
        if (value < 1)
            throw Error("posterior: share values are positive integers; observation impossible");
        max_index = std::max(max_index, idx);
        max_value = std::max(max_value, value);
    }
    if (cap < max_value)
        throw Error("posterior: cap must cover the largest observed share value");

    // beyond s_star every weight is exactly uniform_likelihood * 2^-s
    const std::int64_t s_star = std::max({cap, max_index, max_value});
    std::vector<Rat> weights;
    weights.reserve(static_cast<size_t>(s_star));
    Rat total = 0;
    for (std::int64_t s = 1; s <= s_star; ++s) {
        weights.push_back(weight_of_secret(observed, s));
        total += weights.back();
    }
    // weight(s) = L_u * 2^-s for every s > s_star, so the remaining mass is
    // the geometric sum 2 * weight(s_star + 1)
    total += weight_of_secret(observed, s_star + 1) * 2;

    if (total == 0) throw Error("posterior: observation impossible under the scheme");

    TailPosterior posterior;
    posterior.cap = cap;
    posterior.omitted_bound = two_pow_neg(cap);
    Rat head = 0;
    for (std::int64_t s = 1; s <= cap; ++s) {
        posterior.probability.push_back(weights[static_cast<size_t>(s - 1)] / total);
        head += posterior.probability.back();
    }
    posterior.tail_probability = Rat(1) - head;
    return posterior;
}

std::optional<std::int64_t> eventual_value_recover(const std::vector<std::int64_t>& shares,
                                                   std::int64_t run_length) {
    if (run_length < 1) throw Error("eventual_value_recover: run length must be positive");
    if (static_cast<std::int64_t>(shares.size()) < run_length) return std::nullopt;
    const std::int64_t value = shares.back();
    for (size_t i = shares.size() - static_cast<size_t>(run_length); i < shares.size(); ++i)
        if (shares[i] != value) return std::nullopt;
    return value;
}

}  // namespace sss
