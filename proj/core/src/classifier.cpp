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

#include "sss/classifier.hpp"

#include <algorithm>
#include <map>

#include "sss/errors.hpp"

namespace sss {

std::string to_string(SchemeLabel label) {
    switch (label) {
        case SchemeLabel::perfect: return "perfect";
        case SchemeLabel::almost_perfect: return "almost_perfect";
        case SchemeLabel::ramp: return "ramp";
        case SchemeLabel::almost_ramp: return "almost_ramp";
        case SchemeLabel::none: return "none";
    }
    return "none";
}

namespace {

std::vector<size_t> coords_of(const JointDistributionTable& table, const PidSet& s) {
    std::vector<size_t> coords;
    coords.reserve(s.size());
    for (ParticipantId pid : s) coords.push_back(table.index_of(pid));
    return coords;
}

}  // namespace

bool recovery_check(const JointDistributionTable& table, const PidSet& a) {
    const auto coords = coords_of(table, a);
    std::map<std::vector<int>, int> secret_seen;
    std::vector<int> key;
    for (const auto& [atom, m] : table.mass) {
        if (m == 0) continue;
        key.clear();
        for (size_t c : coords) key.push_back(atom[c]);
        auto [it, inserted] = secret_seen.try_emplace(key, atom.back());
        if (!inserted && it->second != atom.back()) return false;
    }
    return true;
}

namespace {

RatioBound min_c_with_secret(const JointDistributionTable& table, const PidSet& b,
                             const std::map<std::vector<int>, Rat>& secret_marginal) {
    const auto coords = coords_of(table, b);
    const auto joint = marginal(table, coords, true);
    const auto share_marginal = marginal(table, coords, false);

    RatioBound bound;
    for (const auto& [u, mu] : share_marginal) {
        if (mu == 0) continue;
        for (const auto& [e, ms] : secret_marginal) {
            if (ms == 0) continue;
            std::vector<int> key = u;
            key.push_back(e[0]);
            auto it = joint.find(key);
            const Rat q = it == joint.end() ? Rat(0) : it->second;
            if (q == 0) {
                bound.infinite = true;
                return bound;
            }
            const Rat ratio = q / (mu * ms);
            const Rat c_atom = ratio >= 1 ? ratio : Rat(1) / ratio;
            if (c_atom > bound.c) bound.c = c_atom;
        }
    }
    return bound;
}

}  // namespace

RatioBound min_c(const JointDistributionTable& table, const PidSet& b) {
    return min_c_with_secret(table, b, marginal(table, {}, true));
}

Classification classify(const JointDistributionTable& table, const MonotoneStructure& structure) {
    for (const PidSet& g : structure.generators())
        for (ParticipantId pid : g) table.index_of(pid);  // throws on unknown ids

    PidSet universe = table.participants;
    Classification result;

    result.recovery_ok = true;
    for (const PidSet& g : structure.generators())
        if (!recovery_check(table, g)) result.recovery_ok = false;

    bool all_one = true;
    bool all_finite = true;
    Rat c_max = 1;
    const auto secret_marginal = marginal(table, {}, true);  // shared across all B
    for (const PidSet& b : subsets_of(universe)) {
        if (structure.member(b)) continue;
        RatioBound bound = min_c_with_secret(table, b, secret_marginal);
        if (bound.infinite) {
            all_finite = false;
            all_one = false;
            // locate one violating atom for the report
            const auto coords = coords_of(table, b);
            const auto joint = marginal(table, coords, true);
            const auto share_marginal = marginal(table, coords, false);
            auto first_violation = [&]() -> std::optional<ViolationWitness> {
                for (const auto& [u, mu] : share_marginal) {
                    if (mu == 0) continue;
                    for (const auto& [e, ms] : secret_marginal) {
                        if (ms == 0) continue;
                        std::vector<int> key = u;
                        key.push_back(e[0]);
                        auto it = joint.find(key);
                        if (it == joint.end() || it->second == 0)
                            return ViolationWitness{b, u, e[0]};
                    }
                }
                return std::nullopt;
            };
            if (auto violation = first_violation()) result.violations.push_back(*violation);
        } else {
            if (bound.c != 1) all_one = false;
            if (bound.c > c_max) c_max = bound.c;
        }
        result.c_by_set.emplace_back(b, std::move(bound));
    }

    // finite collapse: with finitely many unqualified sets and atoms, either
    // some positive-product atom has zero joint mass (not even almost ramp)
    // or every per-set constant is finite and so is their maximum
    if (!result.recovery_ok || !all_finite) {
        result.label = SchemeLabel::none;
        return result;
    }
    result.c = c_max;
    result.label = all_one ? SchemeLabel::perfect : SchemeLabel::almost_perfect;
    return result;
}

PidSet important_participants(const MonotoneStructure& structure, const PidSet& universe) {
    PidSet important;
    const auto all = subsets_of(universe);
    for (ParticipantId p : universe) {
        bool found = false;
        for (const PidSet& b : all) {
            if (contains(b, p) || structure.member(b)) continue;
            if (structure.member(set_union(b, {p}))) {
                found = true;
                break;
            }
        }
        if (found) important.push_back(p);
    }
    return important;
}

PidSet important_participants(const GDeltaWitness& witness, const PidSet& universe) {
    if (!witness.normalized) throw Error("important_participants: witness is not normalized");
    const int depth = witness.depth();
    auto qualified = [&](const PidSet& a) {
        return depth > 0 && gdelta_membership(witness, a, depth);
    };
    PidSet important;
    const auto all = subsets_of(universe);
    for (ParticipantId p : universe) {
        bool found = false;
        for (const PidSet& b : all) {
            if (contains(b, p) || qualified(b)) continue;
            if (qualified(set_union(b, {p}))) {
                found = true;
                break;
            }
        }
        if (found) important.push_back(p);
    }
    return important;
}

}  // namespace sss
