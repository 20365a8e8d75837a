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

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sss/rational.hpp"
#include "sss/sets.hpp"

namespace sss {

/// Exact joint distribution of (shares, secret) over finite atom spaces.
/// Atoms are integers; an atom tuple lists one share atom per participant
/// (in participants order) followed by the secret atom. Masses are exact
/// rationals summing to one; zero-mass atoms need not be listed.
struct JointDistributionTable {
    std::vector<ParticipantId> participants;
    std::vector<std::vector<int>> share_domains;  // per participant, sorted
    std::vector<int> secret_domain;               // at least two atoms
    std::vector<std::pair<std::vector<int>, Rat>> mass;  // sorted by atom tuple

    void validate() const;

    /// Position of pid in participants; throws on unknown id.
    size_t index_of(ParticipantId pid) const;

    /// Sorts atoms, merges duplicates, drops zero masses.
    void canonicalize();
};

/// Exact marginal onto the participant positions in `coords` (subset of
/// column indices), optionally keeping the secret coordinate last.
std::map<std::vector<int>, Rat> marginal(const JointDistributionTable& table,
                                         const std::vector<size_t>& coords, bool keep_secret);

// Text format:
//   table v1
//   participants <ids>
//   secretdomain <atoms>
//   domain <id> <atoms>            (one per participant)
//   p <share atoms...> <secret atom> <num>/<den>
JointDistributionTable read_table(std::istream& in, const std::string& source = "<input>");
void write_table(std::ostream& out, const JointDistributionTable& table);
JointDistributionTable read_table_file(const std::string& path);

}  // namespace sss
