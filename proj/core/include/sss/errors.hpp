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

#include <stdexcept>
#include <string>

namespace sss {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file or text stream.
struct FormatError : Error {
    explicit FormatError(const std::string& msg) : Error(msg) {}
};

/// Recovery requested for a set whose vectors do not span the target.
struct NotQualifiedError : Error {
    explicit NotQualifiedError(const std::string& msg) : Error(msg) {}
};

/// Recovery requested with an incomplete share map.
struct MissingShareError : Error {
    explicit MissingShareError(const std::string& msg) : Error(msg) {}
};

}  // namespace sss
