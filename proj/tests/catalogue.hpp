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
#include <vector>

#include "sss/access_structure.hpp"
#include "sss/hilbert.hpp"
#include "sss/sets.hpp"

namespace sss::testing {

// Catalogued generator families on <= 4 participants with generators of size
// 2..3. Some entries are deliberately redundant (absorbable supersets) to
// exercise minimization through the whole pipeline.
inline const std::vector<Family>& catalogued_families() {
    static const std::vector<Family> families = {
        {{1, 2}},
        {{1, 2}, {3, 4}},
        {{1, 2}, {1, 3}},
        {{1, 2}, {1, 3}, {1, 4}},
        {{1, 2}, {1, 3}, {2, 3}},
        {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
        {{1, 2, 3}},
        {{1, 2, 3}, {1, 4}},
        {{1, 2, 3}, {2, 3, 4}},
        {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}},
        {{1, 2}, {2, 3}, {3, 4}},
        {{1, 2}, {2, 3}, {3, 4}, {1, 4}},
        {{1, 2}, {3, 4}, {1, 3}},
        {{1, 2, 3}, {3, 4}},
        {{1, 2}, {1, 3}, {2, 4}},
        {{1, 3}, {2, 4}},
        {{1, 2}, {1, 2, 3}},
        {{1, 3}, {2, 4}, {1, 3, 4}},
        {{2, 3}},
        {{1, 2, 3}, {1, 2, 4}},
        {{1, 4}, {2, 4}, {3, 4}},
        {{1, 2}, {3, 4}, {2, 3}},
    };
    return families;
}

inline const std::vector<std::int64_t>& catalogued_primes() {
    static const std::vector<std::int64_t> primes = {2, 3, 5};
    return primes;
}

inline int construction_dim(const Family& family) {
    int dim = 1;
    for (const PidSet& g : canonicalize_family(family)) dim += static_cast<int>(g.size()) - 1;
    return dim;
}

inline bool enumerable(const Family& family, std::int64_t p, std::uint64_t bound) {
    std::uint64_t total = 1;
    for (int i = 0; i < construction_dim(family); ++i) {
        if (total > bound / static_cast<std::uint64_t>(p)) return false;
        total *= static_cast<std::uint64_t>(p);
    }
    return true;
}

/// Hilbert program catalogue for the Monte Carlo criteria: name, program.
struct HilbertCase {
    const char* name;
    HilbertProgram program;
    GDeltaWitness witness;  // witness it was built from (empty for direct programs)
    int levels = 0;
};

inline std::vector<HilbertCase> catalogued_hilbert_cases() {
    std::vector<HilbertCase> cases;
    {
        HilbertCase c{"repeat-pair", {}, normalize_witness({{{1, 2}}, {{1, 2}}}), 2};
        c.program = hilbert_from_witness(c.witness, c.levels);
        cases.push_back(std::move(c));
    }
    {
        HilbertCase c{"all-infinite-4", {}, builtin_all_infinite(4, 3), 3};
        c.program = hilbert_from_witness(c.witness, c.levels);
        cases.push_back(std::move(c));
    }
    {
        GDeltaWitness w;
        w.levels = {{{1}}, {{1, 2}}};
        w.normalized = true;
        HilbertCase c{"grow-chain", {}, w, 2};
        c.program = hilbert_from_witness(c.witness, c.levels);
        cases.push_back(std::move(c));
    }
    {
        HilbertCase c{"transversal", {}, normalize_witness({{{1}, {2}}, {{3}}}), 2};
        c.program = hilbert_from_witness(c.witness, c.levels);
        cases.push_back(std::move(c));
    }
    {
        HilbertCase c{"all-infinite-5", {}, builtin_all_infinite(5, 2), 2};
        c.program = hilbert_from_witness(c.witness, c.levels);
        cases.push_back(std::move(c));
    }
    {
        // direct program: L = span{e1}, v = e1 + e2/2
        HilbertCase c{"axis-split", {}, {}, 0};
        c.program.dim = 2;
        c.program.target = {Rat(1), Rat(1, 2)};
        c.program.assignment[1] = {{Rat(1), Rat(0)}};
        c.program.assignment[2] = {{Rat(1), Rat(1)}};
        cases.push_back(std::move(c));
    }
    return cases;
}

}  // namespace sss::testing
