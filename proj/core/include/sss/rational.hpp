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

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sss {

// All probability masses and scheme constants are exact rationals; nothing
// in the finite-space checks is allowed to round.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parses "a/b", a plain integer, or a decimal like "-0.25" (decimals are
/// exact rationals). Throws FormatError on anything else.
Rat parse_rational(const std::string& token);

/// Always-slash form "num/den", canonical sign on the numerator.
std::string format_rational(const Rat& r);

double to_double(const Rat& r);

Rat pow_rational(const Rat& base, long exp);

}  // namespace sss
