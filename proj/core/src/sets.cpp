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

#include "sss/sets.hpp"

#include <algorithm>
#include <sstream>

#include "sss/errors.hpp"
#include "sss/line_reader.hpp"

namespace sss {

PidSet make_set(std::vector<ParticipantId> ids) {
    for (ParticipantId p : ids)
        if (p < 0) throw Error("participant ids must be non-negative");
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

bool contains(const PidSet& s, ParticipantId p) {
    return std::binary_search(s.begin(), s.end(), p);
}

bool is_subset(const PidSet& a, const PidSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PidSet set_union(const PidSet& a, const PidSet& b) {
    PidSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

PidSet set_difference(const PidSet& a, const PidSet& b) {
    PidSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

PidSet set_intersection(const PidSet& a, const PidSet& b) {
    PidSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool canonical_less(const PidSet& a, const PidSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Family canonicalize_family(Family f) {
    for (PidSet& s : f) s = make_set(std::move(s));  // tolerate hand-built sets
    std::sort(f.begin(), f.end(), canonical_less);
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

std::string format_set(const PidSet& s) {
    std::ostringstream out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out << ' ';
        out << s[i];
    }
    return out.str();
}

PidSet parse_set(const std::string& text) {
    std::vector<ParticipantId> ids;
    for (const std::string& tok : split_tokens(text)) {
        long long v = parse_int(tok, "participant id");
        if (v < 0) throw FormatError("negative participant id '" + tok + "'");
        ids.push_back(static_cast<ParticipantId>(v));
    }
    return make_set(std::move(ids));
}

std::vector<PidSet> subsets_of(const PidSet& universe) {
    if (universe.size() > 24) throw Error("subsets_of: universe too large");
    std::vector<PidSet> out;
    out.reserve(size_t{1} << universe.size());
    for (size_t mask = 0; mask < (size_t{1} << universe.size()); ++mask) {
        PidSet s;
        for (size_t i = 0; i < universe.size(); ++i)
            if (mask & (size_t{1} << i)) s.push_back(universe[i]);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace sss
