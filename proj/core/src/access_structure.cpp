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

#include "sss/access_structure.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "sss/errors.hpp"
#include "sss/line_reader.hpp"

namespace sss {

bool gen_membership(const Family& generators, const PidSet& a) {
    for (const PidSet& g : generators)
        if (is_subset(g, a)) return true;
    return false;
}

Family minimize_generators(Family generators) {
    generators = canonicalize_family(std::move(generators));
    Family out;
    for (const PidSet& g : generators) {
        bool absorbed = false;
        for (const PidSet& kept : out) {
            if (is_subset(kept, g)) {  // kept is smaller or equal in canonical order
                absorbed = true;
                break;
            }
        }
        if (!absorbed) out.push_back(g);
    }
    return out;
}

MonotoneStructure MonotoneStructure::from_generators(Family generators,
                                                     std::optional<int> universe_hint) {
    for (const PidSet& g : generators) {
        if (g.empty()) throw Error("structure generator must not be empty");
        if (g.size() == 1)
            throw Error("structure generator must not be a singleton (id " +
                        std::to_string(g[0]) + ")");
    }
    return MonotoneStructure(minimize_generators(std::move(generators)), universe_hint);
}

MonotoneStructure MonotoneStructure::permissive(Family generators,
                                                std::optional<int> universe_hint) {
    return MonotoneStructure(minimize_generators(std::move(generators)), universe_hint);
}

GDeltaWitness normalize_witness(const std::vector<Family>& layers) {
    GDeltaWitness witness;
    witness.levels.reserve(layers.size());
    Family current;
    for (size_t i = 0; i < layers.size(); ++i) {
        Family layer = canonicalize_family(layers[i]);
        if (i == 0) {
            current = minimize_generators(layer);
        } else {
            Family unions;
            unions.reserve(current.size() * layer.size());
            for (const PidSet& f : current)
                for (const PidSet& g : layer) unions.push_back(set_union(f, g));
            current = minimize_generators(std::move(unions));
        }
        witness.levels.push_back(current);
    }
    witness.normalized = true;
    return witness;
}

bool is_normalized_witness(const GDeltaWitness& witness) {
    for (size_t i = 0; i + 1 < witness.levels.size(); ++i)
        for (const PidSet& g : witness.levels[i + 1])
            if (!gen_membership(witness.levels[i], g)) return false;
    return true;
}

bool gdelta_membership(const GDeltaWitness& witness, const PidSet& a, int up_to_level) {
    if (!witness.normalized) throw Error("gdelta_membership: witness is not normalized");
    if (up_to_level < 1 || up_to_level > witness.depth())
        throw Error("gdelta_membership: level " + std::to_string(up_to_level) +
                    " out of range 1.." + std::to_string(witness.depth()));
    for (int i = 0; i < up_to_level; ++i)
        if (!gen_membership(witness.levels[static_cast<size_t>(i)], a)) return false;
    return true;
}

GDeltaWitness builtin_all_infinite(int max_index, int levels) {
    if (max_index <= 0 || levels <= 0)
        throw Error("all_infinite: truncation bounds must be positive");
    PidSet universe;
    for (int i = 1; i <= max_index; ++i) universe.push_back(i);

    GDeltaWitness witness;
    witness.levels.resize(static_cast<size_t>(levels));
    for (int k = 1; k <= levels; ++k) {
        Family& fam = witness.levels[static_cast<size_t>(k - 1)];
        if (k > max_index) continue;  // no k-element subsets: empty family
        // enumerate k-subsets of {1..max_index}
        std::vector<int> idx(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
        while (true) {
            PidSet s;
            for (int i : idx) s.push_back(universe[static_cast<size_t>(i)]);
            fam.push_back(std::move(s));
            int pos = k - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == max_index - k + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (int j = pos + 1; j < k; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
        fam = canonicalize_family(std::move(fam));
    }
    witness.normalized = true;
    return witness;
}

GDeltaWitness builtin_forbidden(const Family& forbidden, int max_index, int levels) {
    if (max_index <= 0 || levels <= 0)
        throw Error("forbidden: truncation bounds must be positive");
    if (levels > static_cast<int>(forbidden.size()))
        throw Error("forbidden: more levels requested than forbidden sets given");
    std::vector<Family> layers;
    for (int n = 0; n < levels; ++n) {
        Family layer;
        for (int x = 1; x <= max_index; ++x)
            if (!contains(forbidden[static_cast<size_t>(n)], x)) layer.push_back({x});
        layers.push_back(std::move(layer));
    }
    return normalize_witness(layers);
}

MonotoneStructure builtin_grid_rows(int m) {
    if (m <= 1) throw Error("grid_rows: grid size must be at least 2");
    Family rows;
    for (int r = 1; r <= m; ++r) {
        PidSet row;
        for (int c = 1; c <= m; ++c) row.push_back((r - 1) * m + c);
        rows.push_back(std::move(row));
    }
    return MonotoneStructure::from_generators(std::move(rows));
}

std::vector<PidSet> builtin_disjoint_progressions(int m, int max_index) {
    if (m <= 0 || max_index <= 0)
        throw Error("disjoint: parameters must be positive");
    std::vector<PidSet> sets(static_cast<size_t>(m));
    for (int n = 1; n <= max_index; ++n) sets[static_cast<size_t>(n % m)].push_back(n);
    return sets;
}

BuiltinStructure builtin_structure(const std::string& name, int max_index, int levels, int m,
                                   const Family& forbidden) {
    if (name == "all_infinite") return builtin_all_infinite(max_index, levels);
    if (name == "forbidden") return builtin_forbidden(forbidden, max_index, levels);
    if (name == "grid_rows") return builtin_grid_rows(m);
    if (name == "disjoint")
        return MonotoneStructure::from_generators(builtin_disjoint_progressions(m, max_index));
    throw Error("unknown builtin structure '" + name + "'");
}

PidSet diagonal_refutation(const std::vector<PidSet>& disjoint_sets, const GDeltaWitness& witness) {
    // normalization is irrelevant here: the construction only needs one
    // covered generator per level, and the guarantees are checked per level
    const size_t depth = std::min(disjoint_sets.size(), witness.levels.size());
    if (depth == 0) throw Error("diagonal_refutation: nothing to refute");

    for (size_t i = 0; i < disjoint_sets.size(); ++i)
        for (size_t j = i + 1; j < disjoint_sets.size(); ++j)
            if (!set_intersection(disjoint_sets[i], disjoint_sets[j]).empty())
                throw Error("diagonal_refutation: candidate sets are not disjoint");

    PidSet diagonal;
    std::vector<PidSet> picks(depth);
    for (size_t i = 0; i < depth; ++i) {
        bool found = false;
        for (const PidSet& g : witness.levels[i]) {
            if (!is_subset(g, disjoint_sets[i])) continue;
            if (!found || canonical_less(g, picks[i])) picks[i] = g;
            found = true;
        }
        if (found) diagonal = set_union(diagonal, picks[i]);
        if (!found)
            throw Error("diagonal_refutation: level " + std::to_string(i + 1) +
                        " has no generator inside candidate set " + std::to_string(i + 1) +
                        " (witness does not cover the candidates)");
    }

    for (size_t i = 0; i < depth; ++i) {
        if (!gen_membership(witness.levels[i], diagonal))
            throw Error("diagonal_refutation: union escaped level " + std::to_string(i + 1));
        // disjointness makes B's trace on set i exactly the level-i pick
        if (set_intersection(diagonal, disjoint_sets[i]) == disjoint_sets[i])
            throw Error("diagonal_refutation: union covers candidate set " + std::to_string(i + 1) +
                        "; refutation needs a strict subset (deepen the truncation)");
    }
    return diagonal;
}

// ---------------------------------------------------------------------------
// Text formats

Family read_structure(std::istream& in, const std::string& source) {
    LineReader reader(in, source);
    reader.expect_header("structure v1");
    Family generators;
    std::string line;
    while (reader.next(line)) generators.push_back(parse_set(line));
    return generators;
}

void write_structure(std::ostream& out, const Family& generators) {
    out << "structure v1\n";
    for (const PidSet& g : generators) out << format_set(g) << "\n";
}

std::vector<Family> read_gdelta_layers(std::istream& in, const std::string& source) {
    LineReader reader(in, source);
    reader.expect_header("gdelta v1");
    std::vector<Family> layers(1);
    std::string line;
    while (reader.next(line)) {
        if (line == "---") {
            layers.emplace_back();
            continue;
        }
        layers.back().push_back(parse_set(line));
    }
    if (layers.size() == 1 && layers.back().empty())
        throw FormatError(source + ": gdelta file has no levels");
    return layers;
}

void write_gdelta_layers(std::ostream& out, const std::vector<Family>& layers) {
    out << "gdelta v1\n";
    for (size_t i = 0; i < layers.size(); ++i) {
        if (i) out << "---\n";
        for (const PidSet& g : layers[i]) out << format_set(g) << "\n";
    }
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    return in;
}

}  // namespace

Family read_structure_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_structure(in, path);
}

std::vector<Family> read_gdelta_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_gdelta_layers(in, path);
}

}  // namespace sss
