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
#include <optional>
#include <vector>

namespace sss {

using FpVec = std::vector<std::int64_t>;

bool is_prime(std::int64_t n);

/// Arithmetic context for the prime field GF(p). Elements are canonical
/// representatives in [0, p).
class PrimeField {
  public:
    explicit PrimeField(std::int64_t p);

    std::int64_t p() const { return p_; }

    std::int64_t reduce(std::int64_t x) const {
        std::int64_t r = x % p_;
        return r < 0 ? r + p_ : r;
    }
    std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % p_; }
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p_);
    }
    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::int64_t inv(std::int64_t a) const;
    std::int64_t dot(const FpVec& a, const FpVec& b) const;

  private:
    std::int64_t p_;
};

/// Canonical solution of sum_i x_i * columns_i = target, if one exists:
/// reduced echelon form with left-to-right pivoting and free variables pinned
/// to zero. All vectors must share the target's length.
std::optional<FpVec> solve_linear(const PrimeField& field, const std::vector<FpVec>& columns,
                                  const FpVec& target);

/// Rank of the span of the given vectors.
int fp_rank(const PrimeField& field, std::vector<FpVec> rows);

/// True iff target lies in the linear span of the vectors.
bool in_span(const PrimeField& field, const std::vector<FpVec>& vectors, const FpVec& target);

}  // namespace sss
