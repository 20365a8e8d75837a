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

#include "sss/gf.hpp"

#include <string>

#include "sss/errors.hpp"

namespace sss {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
    if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
}

std::int64_t PrimeField::inv(std::int64_t a) const {
    a = reduce(a);
    if (a == 0) throw Error("division by zero in GF(" + std::to_string(p_) + ")");
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return reduce(t);
}

std::int64_t PrimeField::dot(const FpVec& a, const FpVec& b) const {
    if (a.size() != b.size()) throw Error("dot: dimension mismatch");
    std::int64_t acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc = add(acc, mul(a[i], b[i]));
    return acc;
}

std::optional<FpVec> solve_linear(const PrimeField& field, const std::vector<FpVec>& columns,
                                  const FpVec& target) {
    const size_t dim = target.size();
    for (const FpVec& c : columns)
        if (c.size() != dim) throw Error("solve_linear: dimension mismatch");
    const size_t n = columns.size();

    // augmented matrix, rows indexed by coordinate, last column = target
    std::vector<FpVec> m(dim, FpVec(n + 1, 0));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < dim; ++i) m[i][j] = field.reduce(columns[j][i]);
    for (size_t i = 0; i < dim; ++i) m[i][n] = field.reduce(target[i]);

    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < dim; ++col) {
        size_t sel = row;
        while (sel < dim && m[sel][col] == 0) ++sel;
        if (sel == dim) continue;
        std::swap(m[sel], m[row]);
        const std::int64_t piv_inv = field.inv(m[row][col]);
        for (size_t j = col; j <= n; ++j) m[row][j] = field.mul(m[row][j], piv_inv);
        for (size_t i = 0; i < dim; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const std::int64_t f = m[i][col];
            for (size_t j = col; j <= n; ++j)
                m[i][j] = field.sub(m[i][j], field.mul(f, m[row][j]));
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < dim; ++i)
        if (m[i][n] != 0) return std::nullopt;  // inconsistent

    FpVec solution(n, 0);
    for (size_t r = 0; r < pivot_col.size(); ++r) solution[pivot_col[r]] = m[r][n];
    return solution;
}

int fp_rank(const PrimeField& field, std::vector<FpVec> rows) {
    if (rows.empty()) return 0;
    const size_t width = rows[0].size();
    for (FpVec& r : rows) {
        if (r.size() != width) throw Error("fp_rank: dimension mismatch");
        for (auto& x : r) x = field.reduce(x);
    }
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < width && row < rows.size(); ++col) {
        size_t sel = row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[row]);
        const std::int64_t piv_inv = field.inv(rows[row][col]);
        for (size_t j = col; j < width; ++j) rows[row][j] = field.mul(rows[row][j], piv_inv);
        for (size_t i = row + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const std::int64_t f = rows[i][col];
            for (size_t j = col; j < width; ++j)
                rows[i][j] = field.sub(rows[i][j], field.mul(f, rows[row][j]));
        }
        ++row;
        ++rank;
    }
    return rank;
}

bool in_span(const PrimeField& field, const std::vector<FpVec>& vectors, const FpVec& target) {
    return solve_linear(field, vectors, target).has_value();
}

}  // namespace sss
