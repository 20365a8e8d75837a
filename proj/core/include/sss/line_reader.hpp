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

#include <istream>
#include <string>
#include <vector>

namespace sss {

// Shared scaffolding for the line-oriented text formats. Lines are UTF-8,
// '#' starts a comment, blank lines are skipped.
class LineReader {
  public:
    explicit LineReader(std::istream& in, std::string source = "<input>");

    /// Next meaningful line, comment and surrounding whitespace stripped.
    /// Returns false at end of input.
    bool next(std::string& line);

    /// Reads a line and verifies it equals the expected header exactly.
    void expect_header(const std::string& header);

    [[noreturn]] void fail(const std::string& msg) const;

    int line_number() const { return line_number_; }

  private:
    std::istream& in_;
    std::string source_;
    int line_number_ = 0;
};

std::vector<std::string> split_tokens(const std::string& line);

long long parse_int(const std::string& token, const std::string& what = "integer");

}  // namespace sss
