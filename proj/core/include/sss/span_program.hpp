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
#include <optional>
#include <string>
#include <vector>

#include "sss/gf.hpp"
#include "sss/sets.hpp"

namespace sss {

/// Monotone span program over GF(p): a target vector and per-participant
/// vector lists. A set is qualified when the union of its vectors spans the
/// target.
struct SpanProgram {
    std::int64_t p = 2;
    int dim = 0;
    FpVec target;
    std::map<ParticipantId, std::vector<FpVec>> assignment;

    PrimeField field() const { return PrimeField(p); }
    PidSet participants() const;

    /// Checks all structural invariants (prime modulus, consistent lengths,
    /// nonzero target, nonempty vector lists). Throws on violation.
    void validate() const;

    /// Vectors of the participants in `a`, in (pid, vector index) order.
    std::vector<FpVec> vectors_of(const PidSet& a) const;
};

/// Canonical coefficients with sum_i c_i * vectors_i = target, or nullopt if
/// the target is outside the span (reduced echelon, free variables zero).
std::optional<FpVec> span_membership(const PrimeField& field, const std::vector<FpVec>& vectors,
                                     const FpVec& target);

/// True iff the target lies in the span of the union of a's vectors. Every
/// member of `a` must be assigned by the program.
bool realizes(const SpanProgram& program, const PidSet& a);

/// The generator-family construction: dimension 1 + sum(|B|-1), target e_0;
/// each generator's first |B|-1 members (ascending id) take fresh standard
/// basis vectors and the largest id takes target minus their sum. Generators
/// are processed in canonical order; a participant occurring in several
/// generators accumulates all its vectors.
SpanProgram from_generators(const Family& generators, std::int64_t p);

/// Minimal qualified subsets of `universe` under realizes(), as a canonical
/// antichain. Brute force: |universe| must stay within max_universe.
Family realized_structure(const SpanProgram& program, const PidSet& universe,
                          int max_universe = 12);

// Text format:
//   span v1
//   p <prime>
//   dim <d>
//   target <d ints>
//   vec <participant-id> <d ints>   (repeated; one line per assigned vector)
SpanProgram read_span_program(std::istream& in, const std::string& source = "<input>");
void write_span_program(std::ostream& out, const SpanProgram& program);
SpanProgram read_span_program_file(const std::string& path);

}  // namespace sss
