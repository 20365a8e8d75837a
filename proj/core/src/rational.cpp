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

#include "sss/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "sss/errors.hpp"

namespace sss {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& token) {
    std::string body = token;
    bool negative = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    if (body.empty()) throw FormatError("empty numeric token");

    Rat value;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        const std::string num = body.substr(0, slash);
        const std::string den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw FormatError("bad rational token '" + token + "'");
        BigInt d{den};
        if (d == 0) throw FormatError("zero denominator in '" + token + "'");
        value = Rat(BigInt(num), d);
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        const std::string whole = body.substr(0, dot);
        const std::string frac = body.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
            throw FormatError("bad decimal token '" + token + "'");
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt num = (whole.empty() ? BigInt(0) : BigInt(whole)) * scale + BigInt(frac);
        value = Rat(num, scale);
    } else {
        if (!all_digits(body)) throw FormatError("bad numeric token '" + token + "'");
        value = Rat(BigInt(body));
    }
    return negative ? Rat(-value) : value;
}

std::string format_rational(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

Rat pow_rational(const Rat& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw Error("pow_rational: negative power of zero");
        return Rat(1) / pow_rational(base, -exp);
    }
    Rat acc = 1;
    Rat b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace sss
