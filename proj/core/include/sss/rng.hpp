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

namespace sss {

// Every random draw in this project comes from one documented stream so that
// results are reproducible across runs, platforms, and reimplementations:
//
//   * core stream: SplitMix64 (Steele, Lea, Flood 2014). State advances by
//     0x9E3779B97F4A7C15; output is the standard 30/27/31 xor-shift mix.
//   * uniform mod m: two consecutive outputs form a 128-bit integer (first
//     output = high word) reduced mod m. This is the low base-m digit of the
//     chunk; the bias is below 2^-64 for every m used here.
//   * uniform (0,1): ((next >> 11) + 0.5) * 2^-53.
//   * standard normal: inverse CDF (Wichura's AS241 PPND16) applied to a
//     uniform (0,1) draw.
//   * fair bits: consecutive outputs consumed most-significant-bit first.
//   * geometric(1/2) on {1,2,...}: one plus the number of leading 1-bits
//     before the first 0-bit of the fair-bit stream.
//
// Worker substream k of a stream seeded with s is seeded with
// mix64(s + 1 + k) where mix64 is the SplitMix64 output function.

constexpr std::uint64_t kDefaultSeed = 0x73737331;  // "sss1"

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// The output function alone; used for substream seeding.
    static std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : core_(seed) {}

    static RandomStream substream(std::uint64_t seed, std::uint64_t worker) {
        return RandomStream(SplitMix64::mix64(seed + 1 + worker));
    }

    std::uint64_t next_u64() { return core_.next(); }

    /// Uniform on {0, ..., m-1}; m must be positive.
    std::int64_t uniform_mod(std::int64_t m);

    /// Uniform on {lo, ..., hi} inclusive.
    std::int64_t uniform_range(std::int64_t lo, std::int64_t hi);

    /// Uniform on the open interval (0, 1).
    double uniform01();

    /// Standard normal via the inverse CDF.
    double normal();

    /// Next fair bit (MSB-first from buffered words).
    int bit();

    /// Geometric on {1, 2, ...} with ratio 1/2: P(k) = 2^-k.
    std::int64_t geometric_half();

  private:
    SplitMix64 core_;
    std::uint64_t bit_buffer_ = 0;
    int bits_left_ = 0;
};

/// Inverse standard normal CDF, Wichura's algorithm AS241 (PPND16). Accurate
/// to about 1e-15 on (0, 1).
double inverse_normal_cdf(double u);

}  // namespace sss
