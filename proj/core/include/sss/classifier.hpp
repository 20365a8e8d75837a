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

#include <optional>
#include <string>
#include <vector>

#include "sss/access_structure.hpp"
#include "sss/rational.hpp"
#include "sss/table.hpp"

namespace sss {

// Secrecy conditions are checked atom by atom. This suffices for rectangles:
// if (1/c) * mB(u) * ms(e) <= q(u,e) <= c * mB(u) * ms(e) holds for every
// atom pair (u, e), then summing over u in U and e in E gives the same two
// inequalities for every rectangle U x E, because the product measure of the
// rectangle is the sum of the atom products. Atom bounds are therefore
// equivalent to rectangle bounds on finite spaces.

/// Smallest c >= 1 with atomwise two-sided ratio bound for the unqualified
/// set B, or infinite when some atom with positive product has zero joint
/// mass (a positivity violation).
struct RatioBound {
    bool infinite = false;
    Rat c = 1;  // meaningful when finite

    bool operator==(const RatioBound&) const = default;
};

/// Atom at which a positivity violation (or ratio extremum) was found.
struct ViolationWitness {
    PidSet b;
    std::vector<int> share_atom;
    int secret_atom = 0;
};

enum class SchemeLabel { perfect, almost_perfect, ramp, almost_ramp, none };

std::string to_string(SchemeLabel label);

struct Classification {
    SchemeLabel label = SchemeLabel::none;
    std::optional<Rat> c;  // global constant; 1 exactly for perfect
    std::vector<std::pair<PidSet, RatioBound>> c_by_set;  // every unqualified set, canonical order
    std::vector<ViolationWitness> violations;
    bool recovery_ok = false;
};

/// True iff the shares of `a` determine the secret on every positive-mass
/// atom: each share tuple with positive marginal admits exactly one secret.
bool recovery_check(const JointDistributionTable& table, const PidSet& a);

/// min_c over all share/secret atom pairs for the set B; atoms where the
/// product marginal vanishes are vacuous and skipped.
RatioBound min_c(const JointDistributionTable& table, const PidSet& b);

/// Full classification against a monotone structure: recovery on every
/// minimal qualified set, ratio bounds on every unqualified subset of the
/// table's participants (marginal bounds for subsets do not follow from
/// maximal sets, so all of them are checked). On finite tables the almost
/// perfect, ramp, and almost ramp conditions coincide; the classifier
/// asserts that collapse and reports the strongest true label.
Classification classify(const JointDistributionTable& table, const MonotoneStructure& structure);

/// Participants p with an unqualified B (within `universe`) such that
/// B + {p} is qualified.
PidSet important_participants(const MonotoneStructure& structure, const PidSet& universe);

/// Witness overload: a set counts as qualified only when it lies in every
/// level of the witness, i.e. in the truncated shadow of the full
/// intersection structure.
PidSet important_participants(const GDeltaWitness& witness, const PidSet& universe);

}  // namespace sss
