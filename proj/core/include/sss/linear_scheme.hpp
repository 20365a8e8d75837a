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
#include <utility>
#include <vector>

#include "sss/rng.hpp"
#include "sss/span_program.hpp"
#include "sss/table.hpp"

namespace sss {

/// One dealt instance of the linear scheme: the dealer draws one uniform
/// field element per basis coordinate; the secret is the target's linear form
/// of the randomness, each share the assigned vector's linear form.
struct Dealing {
    FpVec randomness;    // dealer-private
    std::int64_t secret = 0;
    // (pid, vector index within the program's list) -> share value
    std::map<std::pair<ParticipantId, int>, std::int64_t> shares;
};

using ShareMap = std::map<std::pair<ParticipantId, int>, std::int64_t>;

/// Draws the randomness from the documented stream (dim draws of
/// uniform_mod(p), coordinate 0 first) and evaluates all linear forms.
Dealing deal(const SpanProgram& program, std::uint64_t seed);

/// Test hook: evaluates the scheme on explicit randomness.
Dealing deal_with_randomness(const SpanProgram& program, const FpVec& randomness);

/// Recovers the secret of a dealing from the shares of `a`: solves for the
/// target in the span of a's vectors and combines the matching shares.
/// Throws NotQualifiedError when the target is outside the span and
/// MissingShareError when a needed share is absent.
std::int64_t recover(const SpanProgram& program, const PidSet& a, const ShareMap& shares);

/// Exhaustive joint distribution of (shares of observed, secret): enumerates
/// all p^dim randomness vectors with exact weight 1/p^dim. A participant's
/// share atom packs its share tuple in mixed radix, first vector most
/// significant. Workers may split the enumeration; counts merge exactly, so
/// the result is identical for any worker count.
JointDistributionTable joint_distribution(const SpanProgram& program, const PidSet& observed,
                                          std::uint64_t max_enumeration = 10'000'000,
                                          int workers = 1);

// Text format:
//   dealing v1
//   secret <int>
//   share <participant-id> <vector-index> <int>
void write_dealing(std::ostream& out, const Dealing& dealing);
Dealing read_dealing(std::istream& in, const std::string& source = "<input>");
Dealing read_dealing_file(const std::string& path);

}  // namespace sss
