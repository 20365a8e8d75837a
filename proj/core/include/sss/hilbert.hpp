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
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sss/access_structure.hpp"
#include "sss/rational.hpp"
#include "sss/sets.hpp"

namespace sss {

using RatVec = std::vector<Rat>;

/// Finite-dimensional truncation of a Hilbert-space program. At finite
/// dimension the closure of a linear span is the span itself, so
/// qualification is plain span membership, decidable exactly because every
/// coefficient is rational.
struct HilbertProgram {
    int dim = 0;
    RatVec target;
    std::vector<RatVec> level_targets;  // partial-sum targets v_1..v_L (construction only)
    std::map<ParticipantId, std::vector<RatVec>> assignment;

    PidSet participants() const;
    void validate() const;
    std::vector<RatVec> vectors_of(const PidSet& a) const;
};

/// The witness construction at a given truncation depth. Coordinates
/// 0..levels-1 carry the orthonormal base e_1..e_levels with partial sums
/// v_n = sum_{i<=n} e_i / i (exact rationals); the remaining coordinates are
/// the fresh base elements, one per generator member except the last. For
/// each level-n generator the first |B|-1 members (ascending id) take fresh
/// base vectors and the largest id takes v_n minus their sum. The program
/// target is v_levels.
HilbertProgram hilbert_from_witness(const GDeltaWitness& witness, int levels);

/// Exact span membership of the target in a's vectors (rational elimination,
/// no tolerance).
bool realizes_exact(const HilbertProgram& program, const PidSet& a);

/// Least-squares split target = v1 + v2 with v2 the projection onto the span
/// of b's vectors and v1 the residual. v1_norm_sq is clamped to exactly zero
/// when the residual norm falls below tau_rank * |target|.
struct Decomposition {
    double v1_norm_sq = 0.0;
    double projection_norm_sq = 0.0;
    double target_norm_sq = 0.0;
    std::vector<double> projection_coeffs;
};

constexpr double kRankTolerance = 1e-9;

Decomposition orthogonal_decompose(const HilbertProgram& program, const PidSet& b,
                                   double tau_rank = kRankTolerance);

/// One simulated dealing: every base coordinate gets an independent standard
/// normal (drawn in coordinate order, one record at a time, off the seeded
/// stream); shares and secret are the programmed linear forms. Share values
/// are listed participant-by-participant (ascending id, vector order); the
/// secret is xi_v, or its fractional part in [0,1) when wrap is set.
struct SimRecord {
    std::vector<double> shares;
    double secret = 0.0;
};

std::vector<SimRecord> simulate(const HilbertProgram& program, std::int64_t samples,
                                std::uint64_t seed, bool wrap);

/// Monte Carlo check of the conditional law of the secret given the shares
/// of an unqualified set: regresses xi_v on b's share values and compares the
/// residual variance against the analytic v1 norm; in wrap mode additionally
/// checks 20-bin histograms of the wrapped secret (marginal and residual
/// frame) against the [1/c, c] uniform band with c = c(|v1|) * c(|v|).
struct ConditionalReport {
    PidSet b;
    std::int64_t samples = 0;
    double v1_norm_sq = 0.0;        // analytic target
    double residual_variance = 0.0; // regression estimate
    double stderr_variance = 0.0;
    int regression_rank = 0;
    bool variance_pass = false;

    bool wrap = false;
    double band_c = 0.0;            // c(|v1|) * c(|v|)
    double marginal_min_ratio = 0.0, marginal_max_ratio = 0.0;
    double residual_min_ratio = 0.0, residual_max_ratio = 0.0;
    bool band_pass = true;

    bool pass() const { return variance_pass && band_pass; }
};

struct ConditionalCheckOptions {
    bool wrap = false;
    double variance_sigmas = 4.0;
    double band_sigmas = 5.0;
    int bins = 20;
    double tau_rank = kRankTolerance;
};

ConditionalReport conditional_check(const HilbertProgram& program, const PidSet& b,
                                    std::int64_t samples, std::uint64_t seed,
                                    const ConditionalCheckOptions& options = {});

// Text format:
//   hilbert v1
//   dim <d>
//   target <d entries>
//   vec <participant-id> <d entries>
// Entries are integers, decimals, or rationals a/b; all parse exactly.
HilbertProgram read_hilbert_program(std::istream& in, const std::string& source = "<input>");
void write_hilbert_program(std::ostream& out, const HilbertProgram& program);
HilbertProgram read_hilbert_program_file(const std::string& path);

}  // namespace sss
