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

#include "sss/table.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "sss/errors.hpp"
#include "sss/line_reader.hpp"

namespace sss {

void JointDistributionTable::validate() const {
    if (participants.size() != share_domains.size())
        throw Error("table: one share domain required per participant");
    if (!std::is_sorted(participants.begin(), participants.end()) ||
        std::adjacent_find(participants.begin(), participants.end()) != participants.end())
        throw Error("table: participants must be sorted and distinct");
    if (secret_domain.size() < 2)
        throw Error("table: secret domain needs at least two atoms");
    for (const auto& d : share_domains)
        if (d.empty()) throw Error("table: empty share domain");

    Rat total = 0;
    for (const auto& [atom, m] : mass) {
        if (atom.size() != participants.size() + 1)
            throw Error("table: atom tuple has wrong arity");
        if (m < 0) throw Error("table: negative mass");
        for (size_t i = 0; i < participants.size(); ++i)
            if (!std::binary_search(share_domains[i].begin(), share_domains[i].end(), atom[i]))
                throw Error("table: share atom outside its domain");
        if (!std::binary_search(secret_domain.begin(), secret_domain.end(), atom.back()))
            throw Error("table: secret atom outside its domain");
    }
    for (const auto& [atom, m] : mass) total += m;
    if (total != 1) throw Error("table: masses sum to " + format_rational(total) + ", not 1");
}

size_t JointDistributionTable::index_of(ParticipantId pid) const {
    auto it = std::lower_bound(participants.begin(), participants.end(), pid);
    if (it == participants.end() || *it != pid)
        throw Error("table: unknown participant id " + std::to_string(pid));
    return static_cast<size_t>(it - participants.begin());
}

void JointDistributionTable::canonicalize() {
    std::sort(mass.begin(), mass.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::vector<int>, Rat>> merged;
    for (auto& [atom, m] : mass) {
        if (!merged.empty() && merged.back().first == atom)
            merged.back().second += m;
        else
            merged.emplace_back(std::move(atom), m);
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    mass = std::move(merged);
}

std::map<std::vector<int>, Rat> marginal(const JointDistributionTable& table,
                                         const std::vector<size_t>& coords, bool keep_secret) {
    std::map<std::vector<int>, Rat> out;
    std::vector<int> key;
    key.reserve(coords.size() + 1);
    for (const auto& [atom, m] : table.mass) {
        key.clear();
        for (size_t c : coords) key.push_back(atom[c]);
        if (keep_secret) key.push_back(atom.back());
        auto [it, inserted] = out.try_emplace(key, m);
        if (!inserted) it->second += m;
    }
    return out;
}

JointDistributionTable read_table(std::istream& in, const std::string& source) {
    LineReader reader(in, source);
    reader.expect_header("table v1");
    JointDistributionTable table;
    std::map<ParticipantId, std::vector<int>> domains;
    std::string line;
    std::vector<std::pair<std::vector<int>, std::string>> raw_mass;
    while (reader.next(line)) {
        auto tokens = split_tokens(line);
        if (tokens[0] == "participants") {
            for (size_t i = 1; i < tokens.size(); ++i) {
                long long v = parse_int(tokens[i], "participant id");
                if (v < 0) reader.fail("negative participant id");
                table.participants.push_back(static_cast<ParticipantId>(v));
            }
        } else if (tokens[0] == "secretdomain") {
            for (size_t i = 1; i < tokens.size(); ++i)
                table.secret_domain.push_back(
                    static_cast<int>(parse_int(tokens[i], "secret atom")));
        } else if (tokens[0] == "domain") {
            if (tokens.size() < 3) reader.fail("domain needs an id and atoms");
            const auto pid = static_cast<ParticipantId>(parse_int(tokens[1], "participant id"));
            std::vector<int> atoms;
            for (size_t i = 2; i < tokens.size(); ++i)
                atoms.push_back(static_cast<int>(parse_int(tokens[i], "share atom")));
            domains[pid] = std::move(atoms);
        } else if (tokens[0] == "p") {
            if (tokens.size() != table.participants.size() + 3)
                reader.fail("mass line arity mismatch");
            std::vector<int> atom;
            for (size_t i = 1; i + 1 < tokens.size(); ++i)
                atom.push_back(static_cast<int>(parse_int(tokens[i], "atom")));
            raw_mass.emplace_back(std::move(atom), tokens.back());
        } else {
            reader.fail("unrecognized line '" + line + "'");
        }
    }
    for (ParticipantId pid : table.participants) {
        auto it = domains.find(pid);
        if (it == domains.end())
            throw FormatError(source + ": missing domain for participant " +
                              std::to_string(pid));
        std::sort(it->second.begin(), it->second.end());
        table.share_domains.push_back(it->second);
    }
    std::sort(table.secret_domain.begin(), table.secret_domain.end());
    for (auto& [atom, tok] : raw_mass) table.mass.emplace_back(std::move(atom), parse_rational(tok));
    table.canonicalize();
    table.validate();
    return table;
}

void write_table(std::ostream& out, const JointDistributionTable& table) {
    out << "table v1\n";
    out << "participants";
    for (ParticipantId pid : table.participants) out << ' ' << pid;
    out << "\n";
    out << "secretdomain";
    for (int a : table.secret_domain) out << ' ' << a;
    out << "\n";
    for (size_t i = 0; i < table.participants.size(); ++i) {
        out << "domain " << table.participants[i];
        for (int a : table.share_domains[i]) out << ' ' << a;
        out << "\n";
    }
    for (const auto& [atom, m] : table.mass) {
        out << "p";
        for (int a : atom) out << ' ' << a;
        out << ' ' << format_rational(m) << "\n";
    }
}

JointDistributionTable read_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    return read_table(in, path);
}

}  // namespace sss
