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

#include "sss/line_reader.hpp"

#include <sstream>

#include "sss/errors.hpp"

namespace sss {

LineReader::LineReader(std::istream& in, std::string source)
    : in_(in), source_(std::move(source)) {}

bool LineReader::next(std::string& line) {
    std::string raw;
    while (std::getline(in_, raw)) {
        ++line_number_;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = raw.find_last_not_of(" \t\r");
        line = raw.substr(first, last - first + 1);
        return true;
    }
    return false;
}

void LineReader::expect_header(const std::string& header) {
    std::string line;
    if (!next(line) || line != header)
        fail("expected header '" + header + "'");
}

void LineReader::fail(const std::string& msg) const {
    std::ostringstream out;
    out << source_ << ":" << line_number_ << ": " << msg;
    throw FormatError(out.str());
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

long long parse_int(const std::string& token, const std::string& what) {
    try {
        size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw FormatError("bad " + what + " '" + token + "'");
    }
}

}  // namespace sss
