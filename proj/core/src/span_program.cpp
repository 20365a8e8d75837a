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

#include "sss/span_program.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "sss/access_structure.hpp"
#include "sss/errors.hpp"
#include "sss/line_reader.hpp"

namespace sss {

PidSet SpanProgram::participants() const {
    PidSet out;
    out.reserve(assignment.size());
    for (const auto& [pid, vecs] : assignment) out.push_back(pid);
    return out;  // map iteration is already sorted
}

void SpanProgram::validate() const {
    PrimeField field(p);
    if (dim <= 0) throw Error("span program dimension must be positive");
    if (static_cast<int>(target.size()) != dim)
        throw Error("span program target has wrong length");
    bool target_nonzero = false;
    for (std::int64_t x : target)
        if (field.reduce(x) != 0) target_nonzero = true;
    if (!target_nonzero) throw Error("span program target must be nonzero");
    for (const auto& [pid, vecs] : assignment) {
        if (pid < 0) throw Error("negative participant id in span program");
        if (vecs.empty())
            throw Error("participant " + std::to_string(pid) + " has an empty vector list");
        for (const FpVec& v : vecs)
            if (static_cast<int>(v.size()) != dim)
                throw Error("vector of participant " + std::to_string(pid) +
                            " has wrong length");
    }
}

std::vector<FpVec> SpanProgram::vectors_of(const PidSet& a) const {
    std::vector<FpVec> out;
    for (ParticipantId pid : a) {
        auto it = assignment.find(pid);
        if (it == assignment.end())
            throw Error("unknown participant id " + std::to_string(pid));
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
    return out;
}

std::optional<FpVec> span_membership(const PrimeField& field, const std::vector<FpVec>& vectors,
                                     const FpVec& target) {
    return solve_linear(field, vectors, target);
}

bool realizes(const SpanProgram& program, const PidSet& a) {
    return span_membership(program.field(), program.vectors_of(a), program.target).has_value();
}

SpanProgram from_generators(const Family& generators, std::int64_t p) {
    Family gens = canonicalize_family(generators);
    if (gens.empty()) throw Error("from_generators: empty generator family");
    for (const PidSet& g : gens)
        if (g.empty()) throw Error("from_generators: empty generator");

    int dim = 1;
    for (const PidSet& g : gens) dim += static_cast<int>(g.size()) - 1;

    SpanProgram program;
    program.p = p;
    program.dim = dim;
    program.target = FpVec(static_cast<size_t>(dim), 0);
    program.target[0] = 1;

    PrimeField field(p);
    int next_fresh = 1;
    for (const PidSet& g : gens) {
        FpVec completing = program.target;
        for (size_t i = 0; i + 1 < g.size(); ++i) {
            FpVec fresh(static_cast<size_t>(dim), 0);
            fresh[static_cast<size_t>(next_fresh)] = 1;
            completing[static_cast<size_t>(next_fresh)] = field.neg(1);
            ++next_fresh;
            program.assignment[g[i]].push_back(std::move(fresh));
        }
        program.assignment[g.back()].push_back(std::move(completing));
    }
    program.validate();
    return program;
}

Family realized_structure(const SpanProgram& program, const PidSet& universe, int max_universe) {
    if (static_cast<int>(universe.size()) > max_universe)
        throw Error("realized_structure: universe exceeds brute-force bound of " +
                    std::to_string(max_universe));
    const PrimeField field = program.field();
    Family qualified;
    for (const PidSet& a : subsets_of(universe)) {
        if (a.empty()) continue;
        // universe members without assignments contribute no vectors
        std::vector<FpVec> vectors;
        for (ParticipantId pid : a) {
            auto it = program.assignment.find(pid);
            if (it == program.assignment.end()) continue;
            vectors.insert(vectors.end(), it->second.begin(), it->second.end());
        }
        if (span_membership(field, vectors, program.target)) qualified.push_back(a);
    }
    return minimize_generators(std::move(qualified));
}

SpanProgram read_span_program(std::istream& in, const std::string& source) {
    LineReader reader(in, source);
    reader.expect_header("span v1");
    SpanProgram program;
    bool have_p = false, have_dim = false, have_target = false;
    std::string line;
    while (reader.next(line)) {
        auto tokens = split_tokens(line);
        if (tokens[0] == "p" && tokens.size() == 2) {
            program.p = parse_int(tokens[1], "prime");
            have_p = true;
        } else if (tokens[0] == "dim" && tokens.size() == 2) {
            program.dim = static_cast<int>(parse_int(tokens[1], "dimension"));
            have_dim = true;
        } else if (tokens[0] == "target") {
            if (!have_dim) reader.fail("target before dim");
            if (static_cast<int>(tokens.size()) != program.dim + 1)
                reader.fail("target needs exactly dim entries");
            for (size_t i = 1; i < tokens.size(); ++i)
                program.target.push_back(parse_int(tokens[i], "field element"));
            have_target = true;
        } else if (tokens[0] == "vec") {
            if (!have_dim) reader.fail("vec before dim");
            if (static_cast<int>(tokens.size()) != program.dim + 2)
                reader.fail("vec needs a participant id and dim entries");
            const long long pid = parse_int(tokens[1], "participant id");
            if (pid < 0) reader.fail("negative participant id");
            FpVec v;
            for (size_t i = 2; i < tokens.size(); ++i)
                v.push_back(parse_int(tokens[i], "field element"));
            program.assignment[static_cast<ParticipantId>(pid)].push_back(std::move(v));
        } else {
            reader.fail("unrecognized line '" + line + "'");
        }
    }
    if (!have_p || !have_dim || !have_target)
        throw FormatError(source + ": span file missing p, dim, or target");
    PrimeField field(program.p);
    for (auto& x : program.target) x = field.reduce(x);
    for (auto& [pid, vecs] : program.assignment)
        for (auto& v : vecs)
            for (auto& x : v) x = field.reduce(x);
    program.validate();
    return program;
}

void write_span_program(std::ostream& out, const SpanProgram& program) {
    out << "span v1\n";
    out << "p " << program.p << "\n";
    out << "dim " << program.dim << "\n";
    out << "target";
    for (std::int64_t x : program.target) out << ' ' << x;
    out << "\n";
    for (const auto& [pid, vecs] : program.assignment)
        for (const FpVec& v : vecs) {
            out << "vec " << pid;
            for (std::int64_t x : v) out << ' ' << x;
            out << "\n";
        }
}

SpanProgram read_span_program_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    return read_span_program(in, path);
}

}  // namespace sss
