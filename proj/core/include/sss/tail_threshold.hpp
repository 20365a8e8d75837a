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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sss/rational.hpp"

namespace sss {

// Infinitely many secrets, finite share domains: the dealer draws the secret
// s with probability 2^-s, a threshold t > s with probability 2^-(t-s);
// participant i <= t gets a uniform value from {1..i}, participant i > t gets
// the secret itself. Any infinite set reads the secret off the eventual
// value of its shares, while finite sets can never exclude a secret.

/// One dealt prefix. share_1 is always 1 (uniform on {1..1}); shares beyond
/// the threshold equal the secret.
struct TailDealing {
    std::int64_t secret = 0;
    std::int64_t threshold = 0;
    std::vector<std::int64_t> shares;  // shares[i] is participant i+1's value
};

/// Draw order on the documented stream: secret (fair bits), threshold offset
/// (fair bits), then shares 1..prefix_length (uniform words).
TailDealing tail_sample(std::int64_t prefix_length, std::uint64_t seed);

/// Exact posterior of the secret given finitely many observed shares.
/// The (s, t) lattice sums in closed form: for each secret the likelihood is
/// a finite sum plus a geometric tail, so masses are exact rationals. The
/// posterior is reported for secrets 1..cap together with the exact mass
/// above cap; the unnormalized mass above cap is certified <= 2^-cap.
struct TailPosterior {
    std::int64_t cap = 0;
    std::vector<Rat> probability;  // probability[s-1] = P(secret = s | obs)
    Rat tail_probability = 0;      // P(secret > cap | obs), exact
    Rat omitted_bound = 0;         // 2^-cap, bound on unnormalized omitted mass
};

/// Throws when the observation is impossible under the scheme (in
/// particular any share value outside {1..index} can never occur: the
/// constant branch would force threshold < index <= value < threshold).
TailPosterior conditional_secret_distribution(
    const std::map<std::int64_t, std::int64_t>& observed, std::int64_t cap);

/// Heuristic eventual-value read-out: the common value of the trailing
/// run_length shares, if they agree; Undetermined (nullopt) otherwise. Exact
/// recovery is an infinite-limit notion; any finite run length can err with
/// probability about 2^-run_length.
std::optional<std::int64_t> eventual_value_recover(const std::vector<std::int64_t>& shares,
                                                   std::int64_t run_length);

}  // namespace sss
