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

#include "sss/linear_scheme.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <thread>

#include "sss/errors.hpp"
#include "sss/line_reader.hpp"

namespace sss {

namespace {

Dealing evaluate(const SpanProgram& program, FpVec randomness) {
    const PrimeField field = program.field();
    Dealing dealing;
    dealing.secret = field.dot(program.target, randomness);
    for (const auto& [pid, vecs] : program.assignment)
        for (size_t i = 0; i < vecs.size(); ++i)
            dealing.shares[{pid, static_cast<int>(i)}] = field.dot(vecs[i], randomness);
    dealing.randomness = std::move(randomness);
    return dealing;
}

}  // namespace

Dealing deal(const SpanProgram& program, std::uint64_t seed) {
    RandomStream stream(seed);
    FpVec r(static_cast<size_t>(program.dim));
    for (auto& x : r) x = stream.uniform_mod(program.p);
    return evaluate(program, std::move(r));
}

Dealing deal_with_randomness(const SpanProgram& program, const FpVec& randomness) {
    if (static_cast<int>(randomness.size()) != program.dim)
        throw Error("deal_with_randomness: randomness length != dim");
    const PrimeField field = program.field();
    FpVec r = randomness;
    for (auto& x : r) x = field.reduce(x);
    return evaluate(program, std::move(r));
}

std::int64_t recover(const SpanProgram& program, const PidSet& a, const ShareMap& shares) {
    const PrimeField field = program.field();
    auto coefficients = span_membership(field, program.vectors_of(a), program.target);
    if (!coefficients)
        throw NotQualifiedError("recover: set {" + format_set(a) + "} is not qualified");

    std::int64_t secret = 0;
    size_t k = 0;
    for (ParticipantId pid : a) {
        const auto& vecs = program.assignment.at(pid);
        for (size_t i = 0; i < vecs.size(); ++i, ++k) {
            const std::int64_t lambda = (*coefficients)[k];
            if (lambda == 0) continue;
            auto it = shares.find({pid, static_cast<int>(i)});
            if (it == shares.end())
                throw MissingShareError("recover: missing share " + std::to_string(pid) + "/" +
                                        std::to_string(i));
            secret = field.add(secret, field.mul(lambda, field.reduce(it->second)));
        }
    }
    return secret;
}

namespace {

// Enumeration state shared by the workers: each worker walks its own slice of
// the r-space [begin, end) in plain odometer order and tallies atom counts.
struct Slice {
    std::map<std::vector<int>, std::uint64_t> counts;
};

void enumerate_slice(const SpanProgram& program, const std::vector<const FpVec*>& observed_vectors,
                     const std::vector<size_t>& tuple_offsets, std::uint64_t begin,
                     std::uint64_t end, Slice& slice) {
    const PrimeField field = program.field();
    const auto dim = static_cast<size_t>(program.dim);
    const auto p = static_cast<std::uint64_t>(program.p);

    FpVec r(dim, 0);
    std::uint64_t index = begin;
    for (size_t c = 0; c < dim; ++c) {
        r[c] = static_cast<std::int64_t>(index % p);
        index /= p;
    }

    std::vector<int> atom(tuple_offsets.size(), 0);  // one entry per participant + secret
    for (std::uint64_t it = begin; it < end; ++it) {
        for (size_t j = 0; j + 1 < tuple_offsets.size(); ++j) {
            std::int64_t packed = 0;
            for (size_t v = tuple_offsets[j]; v < tuple_offsets[j + 1]; ++v)
                packed = packed * program.p + field.dot(*observed_vectors[v], r);
            atom[j] = static_cast<int>(packed);
        }
        atom.back() = static_cast<int>(field.dot(program.target, r));
        ++slice.counts[atom];

        // odometer step (coordinate 0 least significant)
        for (size_t c = 0; c < dim; ++c) {
            if (++r[c] < program.p) break;
            r[c] = 0;
        }
    }
}

}  // namespace

JointDistributionTable joint_distribution(const SpanProgram& program, const PidSet& observed,
                                          std::uint64_t max_enumeration, int workers) {
    program.validate();
    std::uint64_t total = 1;
    for (int i = 0; i < program.dim; ++i) {
        if (total > max_enumeration / static_cast<std::uint64_t>(program.p))
            throw Error("joint_distribution: p^dim exceeds enumeration bound " +
                        std::to_string(max_enumeration));
        total *= static_cast<std::uint64_t>(program.p);
    }

    // flattened list of observed vectors and the packing boundaries
    std::vector<const FpVec*> observed_vectors;
    std::vector<size_t> tuple_offsets{0};
    for (ParticipantId pid : observed) {
        auto it = program.assignment.find(pid);
        if (it == program.assignment.end())
            throw Error("joint_distribution: unknown participant id " + std::to_string(pid));
        for (const FpVec& v : it->second) observed_vectors.push_back(&v);
        tuple_offsets.push_back(observed_vectors.size());
    }

    if (workers < 1) workers = 1;
    const auto w = static_cast<std::uint64_t>(workers);
    std::vector<Slice> slices(static_cast<size_t>(workers));
    if (workers == 1) {
        enumerate_slice(program, observed_vectors, tuple_offsets, 0, total, slices[0]);
    } else {
        std::vector<std::thread> threads;
        for (std::uint64_t k = 0; k < w; ++k) {
            const std::uint64_t begin = total / w * k + std::min(k, total % w);
            const std::uint64_t end = begin + total / w + (k < total % w ? 1 : 0);
            threads.emplace_back(enumerate_slice, std::cref(program),
                                 std::cref(observed_vectors), std::cref(tuple_offsets), begin,
                                 end, std::ref(slices[static_cast<size_t>(k)]));
        }
        for (auto& t : threads) t.join();
    }

    std::map<std::vector<int>, std::uint64_t> counts = std::move(slices[0].counts);
    for (size_t k = 1; k < slices.size(); ++k)
        for (const auto& [atom, c] : slices[k].counts) counts[atom] += c;

    JointDistributionTable table;
    table.participants = observed;
    for (size_t j = 0; j + 1 < tuple_offsets.size(); ++j) {
        const auto width = tuple_offsets[j + 1] - tuple_offsets[j];
        std::int64_t domain = 1;
        for (size_t i = 0; i < width; ++i) domain *= program.p;
        std::vector<int> atoms(static_cast<size_t>(domain));
        for (std::int64_t a = 0; a < domain; ++a) atoms[static_cast<size_t>(a)] = static_cast<int>(a);
        table.share_domains.push_back(std::move(atoms));
    }
    for (std::int64_t s = 0; s < program.p; ++s) table.secret_domain.push_back(static_cast<int>(s));

    const Rat weight = Rat(BigInt(1), BigInt(total));
    for (const auto& [atom, c] : counts)
        table.mass.emplace_back(atom, Rat(BigInt(c)) * weight);
    table.canonicalize();
    table.validate();
    return table;
}

void write_dealing(std::ostream& out, const Dealing& dealing) {
    out << "dealing v1\n";
    out << "secret " << dealing.secret << "\n";
    for (const auto& [key, value] : dealing.shares)
        out << "share " << key.first << ' ' << key.second << ' ' << value << "\n";
}

Dealing read_dealing(std::istream& in, const std::string& source) {
    LineReader reader(in, source);
    reader.expect_header("dealing v1");
    Dealing dealing;
    bool have_secret = false;
    std::string line;
    while (reader.next(line)) {
        auto tokens = split_tokens(line);
        if (tokens[0] == "secret" && tokens.size() == 2) {
            dealing.secret = parse_int(tokens[1], "secret");
            have_secret = true;
        } else if (tokens[0] == "share" && tokens.size() == 4) {
            const auto pid = static_cast<ParticipantId>(parse_int(tokens[1], "participant id"));
            const auto idx = static_cast<int>(parse_int(tokens[2], "vector index"));
            dealing.shares[{pid, idx}] = parse_int(tokens[3], "share value");
        } else {
            reader.fail("unrecognized line '" + line + "'");
        }
    }
    if (!have_secret) throw FormatError(source + ": dealing file missing secret");
    return dealing;
}

Dealing read_dealing_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    return read_dealing(in, path);
}

}  // namespace sss
