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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sss/sets.hpp"

namespace sss {

/// True iff some generator is a subset of `a`. An empty family generates the
/// empty structure, so the answer is false for every `a`.
bool gen_membership(const Family& generators, const PidSet& a);

/// Antichain generating the same upward-closed family: supersets of other
/// generators are absorbed, the survivors sorted canonically (size, then lex).
Family minimize_generators(Family generators);

/// A monotone access structure, held by a canonical generator antichain.
/// The public constructor rejects empty and singleton generators; intermediate
/// machinery that legitimately produces singleton generators uses the
/// permissive constructor instead.
class MonotoneStructure {
  public:
    static MonotoneStructure from_generators(Family generators,
                                             std::optional<int> universe_hint = std::nullopt);
    static MonotoneStructure permissive(Family generators,
                                        std::optional<int> universe_hint = std::nullopt);

    const Family& generators() const { return generators_; }
    std::optional<int> universe_hint() const { return universe_hint_; }
    bool member(const PidSet& a) const { return gen_membership(generators_, a); }

  private:
    MonotoneStructure(Family gens, std::optional<int> hint)
        : generators_(std::move(gens)), universe_hint_(hint) {}

    Family generators_;
    std::optional<int> universe_hint_;
};

/// Witness for an intersection of countably many finitely generated
/// structures, truncated to finitely many levels. Normalized means the levels
/// form a decreasing chain: every level-(i+1) generator already lies in the
/// family generated by level i.
struct GDeltaWitness {
    std::vector<Family> levels;
    bool normalized = false;

    int depth() const { return static_cast<int>(levels.size()); }
};

/// Rewrites arbitrary layers into a normalized witness: level i generates the
/// intersection of the first i layer structures. Intersections are computed as
/// minimal transversal unions (one generator per layer, absorbed afterwards),
/// never by subset enumeration.
GDeltaWitness normalize_witness(const std::vector<Family>& layers);

/// True iff `a` lies in the family generated by every level <= up_to_level.
/// Levels are 1-based; requires a normalized witness.
bool gdelta_membership(const GDeltaWitness& witness, const PidSet& a, int up_to_level);

/// Verifies the decreasing-chain condition directly.
bool is_normalized_witness(const GDeltaWitness& witness);

// ---------------------------------------------------------------------------
// Built-in example structures. Infinite participant universes are modeled by
// explicit truncation bounds.

/// Level i generated by the i-element subsets of {1..max_index}. Levels
/// beyond max_index have empty generator families (no finite set qualifies).
GDeltaWitness builtin_all_infinite(int max_index, int levels);

/// Sets not covered by any forbidden set: level n is generated by the minimal
/// <=n-element sets hitting the complements of the first n forbidden sets,
/// inside the universe {1..max_index}.
GDeltaWitness builtin_forbidden(const Family& forbidden, int max_index, int levels);

/// m x m grid whose minimal qualified sets are the rows; cell (r, c) is
/// flattened row-major to id (r-1)*m + c with 1-based r, c.
MonotoneStructure builtin_grid_rows(int m);

/// m disjoint truncated arithmetic progressions A_i = {n in [1, max_index] :
/// n = i mod m}, listed for i = 0..m-1. The generated structure is
/// gen({A_0,...,A_{m-1}}).
std::vector<PidSet> builtin_disjoint_progressions(int m, int max_index);

using BuiltinStructure = std::variant<MonotoneStructure, GDeltaWitness>;

/// Name dispatcher used by the CLI. Names: all_infinite, forbidden,
/// grid_rows, disjoint.
BuiltinStructure builtin_structure(const std::string& name, int max_index, int levels, int m,
                                   const Family& forbidden);

/// The diagonal argument: picks, for each level i, the canonically smallest
/// level-i generator contained in disjoint_sets[i], and returns their union B.
/// Checks and guarantees: B is in every level's generated family, and meets
/// each disjoint set in a strict subset — so B witnesses that no structure
/// containing the disjoint sets as minimal qualified sets matches this
/// witness prefix. The witness need not be normalized; the guarantees are
/// checked level by level. Throws if some level has no generator inside its
/// set, or if a pick exhausts its set (deepen the truncation).
PidSet diagonal_refutation(const std::vector<PidSet>& disjoint_sets, const GDeltaWitness& witness);

// ---------------------------------------------------------------------------
// Text formats.
//
//   structure v1          gdelta v1
//   <ids...>              <ids...>
//   <ids...>              ---
//                         <ids...>
//
// '#' starts a comment. A gdelta file is a list of generator families
// separated by "---" lines; it is read back as raw layers.

Family read_structure(std::istream& in, const std::string& source = "<input>");
void write_structure(std::ostream& out, const Family& generators);

std::vector<Family> read_gdelta_layers(std::istream& in, const std::string& source = "<input>");
void write_gdelta_layers(std::ostream& out, const std::vector<Family>& layers);

Family read_structure_file(const std::string& path);
std::vector<Family> read_gdelta_file(const std::string& path);

}  // namespace sss
