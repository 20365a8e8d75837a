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

#include <string>
#include <vector>

namespace sss {

// Participants are identified with non-negative integers. A PidSet is kept
// sorted and duplicate-free; every function below assumes and preserves that.
using ParticipantId = int;
using PidSet = std::vector<ParticipantId>;
using Family = std::vector<PidSet>;

/// Sorts, deduplicates, and rejects negative ids.
PidSet make_set(std::vector<ParticipantId> ids);

bool contains(const PidSet& s, ParticipantId p);
bool is_subset(const PidSet& a, const PidSet& b);
PidSet set_union(const PidSet& a, const PidSet& b);
PidSet set_difference(const PidSet& a, const PidSet& b);
PidSet set_intersection(const PidSet& a, const PidSet& b);

/// Canonical order used for all tie-breaking: by size, then lexicographic.
bool canonical_less(const PidSet& a, const PidSet& b);

/// Canonically sorted, duplicate-free copy of a family.
Family canonicalize_family(Family f);

std::string format_set(const PidSet& s);
PidSet parse_set(const std::string& text);

/// All subsets of `universe`, in canonical order.
std::vector<PidSet> subsets_of(const PidSet& universe);

}  // namespace sss
